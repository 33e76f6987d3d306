#pragma once
// Seeded randomness with a fixed, documented generator so every report can
// name it and reruns are byte-identical. splitmix64 with the standard
// finalizer; doubles take the top 53 bits.

#include <sw/field.hpp>

#include <cstdint>

namespace sw {

struct SplitMix64 {
  std::uint64_t state = 0;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

constexpr const char* generator_name() { return "splitmix64"; }

// Smooth seeded fields: a sum of `modes` low-frequency harmonics
// amp * r * cos(2 pi sum_mu k_mu x_mu / N_mu + phi) with k nonzero and
// |k_mu| <= 2, r uniform in [-1, 1]. Every harmonic has exact zero mean.
ScalarField4 random_smooth_field(const Grid4& g, std::uint64_t seed, int modes, double amp);
ScalarField2 random_smooth_field2(const Grid2& g, std::uint64_t seed, int modes, double amp);
SpinorField4 random_smooth_spinor(const Grid4& g, std::uint64_t seed, int modes, double amp);
SpinorField2 random_smooth_spinor2(const Grid2& g, std::uint64_t seed, int modes, double amp);
GaugeField4 random_smooth_gauge(const Grid4& g, std::uint64_t seed, int modes, double amp);

}  // namespace sw
