#pragma once
// Field snapshot format "SWF1": 4 magic bytes, five little-endian uint32
// (kind, N0, N1, N2, N3), then the payload as little-endian float64 arrays in
// linear site order. kind 1 = scalar (one array), 2 = gauge (four arrays),
// 3 = spinor (four arrays, components w x y z). Two-dimensional fields are
// stored with N2 = N3 = 1. Grid lengths are not part of the format and are
// supplied on load.

#include <sw/field.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace sw {

enum class SnapshotKind : std::uint32_t { scalar = 1, gauge = 2, spinor = 3 };

struct Snapshot {
  SnapshotKind kind{};
  std::array<std::uint32_t, 4> n{};
  std::vector<std::vector<double>> arrays;
};

void save(const std::string& path, const ScalarField4& f);
void save(const std::string& path, const GaugeField4& f);
void save(const std::string& path, const SpinorField4& f);
void save(const std::string& path, const ScalarField2& f);
void save(const std::string& path, const SpinorField2& f);
// Four scalar legs on one 2D grid as a gauge-kind record, order preserved.
void save_gauge2(const std::string& path, const ScalarField2& a0, const ScalarField2& a1,
                 const ScalarField2& b0, const ScalarField2& b1);

// Throws std::runtime_error on missing files, bad magic, bad kind, or short
// payloads.
Snapshot load(const std::string& path);

ScalarField4 as_scalar4(const Snapshot& s, std::array<double, 4> len = {1, 1, 1, 1});
GaugeField4 as_gauge4(const Snapshot& s, std::array<double, 4> len = {1, 1, 1, 1});
SpinorField4 as_spinor4(const Snapshot& s, std::array<double, 4> len = {1, 1, 1, 1});
ScalarField2 as_scalar2(const Snapshot& s, std::array<double, 2> len = {1, 1});
SpinorField2 as_spinor2(const Snapshot& s, std::array<double, 2> len = {1, 1});
std::array<ScalarField2, 4> as_gauge2(const Snapshot& s, std::array<double, 2> len = {1, 1});

}  // namespace sw
