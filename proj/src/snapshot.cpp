#include <sw/snapshot.hpp>

#include <bit>
#include <cstdio>
#include <memory>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "snapshot i/o assumes a little-endian host");
static_assert(sizeof(double) == 8);

namespace sw {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};
using File = std::unique_ptr<std::FILE, FileCloser>;

File open_or_throw(const std::string& path, const char* mode) {
  std::FILE* f = std::fopen(path.c_str(), mode);
  if (!f) throw std::runtime_error("snapshot: cannot open " + path);
  return File(f);
}

void write_header(std::FILE* f, SnapshotKind kind, std::array<std::uint32_t, 4> n) {
  if (std::fwrite("SWF1", 1, 4, f) != 4) throw std::runtime_error("snapshot: write failed");
  std::uint32_t hdr[5] = {static_cast<std::uint32_t>(kind), n[0], n[1], n[2], n[3]};
  if (std::fwrite(hdr, sizeof(std::uint32_t), 5, f) != 5)
    throw std::runtime_error("snapshot: write failed");
}

void write_array(std::FILE* f, const std::vector<double>& a) {
  if (std::fwrite(a.data(), sizeof(double), a.size(), f) != a.size())
    throw std::runtime_error("snapshot: write failed");
}

std::array<std::uint32_t, 4> dims4(const Grid4& g) {
  return {static_cast<std::uint32_t>(g.n[0]), static_cast<std::uint32_t>(g.n[1]),
          static_cast<std::uint32_t>(g.n[2]), static_cast<std::uint32_t>(g.n[3])};
}

std::array<std::uint32_t, 4> dims2(const Grid2& g) {
  return {static_cast<std::uint32_t>(g.n[0]), static_cast<std::uint32_t>(g.n[1]), 1u, 1u};
}

void check_grid4(const Snapshot& s) {
  for (auto e : s.n)
    if (e == 0) throw std::runtime_error("snapshot: zero extent");
}

Grid4 grid4_of(const Snapshot& s, std::array<double, 4> len) {
  check_grid4(s);
  return {{static_cast<int>(s.n[0]), static_cast<int>(s.n[1]), static_cast<int>(s.n[2]),
           static_cast<int>(s.n[3])},
          len};
}

Grid2 grid2_of(const Snapshot& s, std::array<double, 2> len) {
  if (s.n[2] != 1 || s.n[3] != 1)
    throw std::runtime_error("snapshot: not a 2d field (trailing extents must be 1)");
  return {{static_cast<int>(s.n[0]), static_cast<int>(s.n[1])}, len};
}

}  // namespace

void save(const std::string& path, const ScalarField4& f) {
  File fp = open_or_throw(path, "wb");
  write_header(fp.get(), SnapshotKind::scalar, dims4(f.grid));
  write_array(fp.get(), f.v);
}

void save(const std::string& path, const GaugeField4& f) {
  File fp = open_or_throw(path, "wb");
  write_header(fp.get(), SnapshotKind::gauge, dims4(f.grid));
  for (const auto& c : f.mu) write_array(fp.get(), c.v);
}

void save(const std::string& path, const SpinorField4& f) {
  File fp = open_or_throw(path, "wb");
  write_header(fp.get(), SnapshotKind::spinor, dims4(f.grid));
  write_array(fp.get(), f.w);
  write_array(fp.get(), f.x);
  write_array(fp.get(), f.y);
  write_array(fp.get(), f.z);
}

void save(const std::string& path, const ScalarField2& f) {
  File fp = open_or_throw(path, "wb");
  write_header(fp.get(), SnapshotKind::scalar, dims2(f.grid));
  write_array(fp.get(), f.v);
}

void save(const std::string& path, const SpinorField2& f) {
  File fp = open_or_throw(path, "wb");
  write_header(fp.get(), SnapshotKind::spinor, dims2(f.grid));
  write_array(fp.get(), f.w);
  write_array(fp.get(), f.x);
  write_array(fp.get(), f.y);
  write_array(fp.get(), f.z);
}

void save_gauge2(const std::string& path, const ScalarField2& a0, const ScalarField2& a1,
                 const ScalarField2& b0, const ScalarField2& b1) {
  File fp = open_or_throw(path, "wb");
  write_header(fp.get(), SnapshotKind::gauge, dims2(a0.grid));
  write_array(fp.get(), a0.v);
  write_array(fp.get(), a1.v);
  write_array(fp.get(), b0.v);
  write_array(fp.get(), b1.v);
}

Snapshot load(const std::string& path) {
  File fp = open_or_throw(path, "rb");
  char magic[4];
  if (std::fread(magic, 1, 4, fp.get()) != 4 || std::string_view(magic, 4) != "SWF1")
    throw std::runtime_error("snapshot: bad magic in " + path);
  std::uint32_t hdr[5];
  if (std::fread(hdr, sizeof(std::uint32_t), 5, fp.get()) != 5)
    throw std::runtime_error("snapshot: short header in " + path);
  Snapshot s;
  if (hdr[0] < 1 || hdr[0] > 3) throw std::runtime_error("snapshot: unknown kind in " + path);
  s.kind = static_cast<SnapshotKind>(hdr[0]);
  s.n = {hdr[1], hdr[2], hdr[3], hdr[4]};
  check_grid4(s);
  const std::size_t sites =
      std::size_t(s.n[0]) * std::size_t(s.n[1]) * std::size_t(s.n[2]) * std::size_t(s.n[3]);
  const std::size_t narrays = s.kind == SnapshotKind::scalar ? 1 : 4;
  s.arrays.assign(narrays, std::vector<double>(sites));
  for (auto& a : s.arrays)
    if (std::fread(a.data(), sizeof(double), sites, fp.get()) != sites)
      throw std::runtime_error("snapshot: short payload in " + path);
  return s;
}

ScalarField4 as_scalar4(const Snapshot& s, std::array<double, 4> len) {
  if (s.kind != SnapshotKind::scalar) throw std::runtime_error("snapshot: not a scalar field");
  ScalarField4 f(grid4_of(s, len));
  f.v = s.arrays[0];
  return f;
}

GaugeField4 as_gauge4(const Snapshot& s, std::array<double, 4> len) {
  if (s.kind != SnapshotKind::gauge) throw std::runtime_error("snapshot: not a gauge field");
  GaugeField4 f(grid4_of(s, len));
  for (int mu = 0; mu < 4; ++mu) f.mu[static_cast<std::size_t>(mu)].v = s.arrays[static_cast<std::size_t>(mu)];
  return f;
}

SpinorField4 as_spinor4(const Snapshot& s, std::array<double, 4> len) {
  if (s.kind != SnapshotKind::spinor) throw std::runtime_error("snapshot: not a spinor field");
  SpinorField4 f(grid4_of(s, len));
  f.w = s.arrays[0];
  f.x = s.arrays[1];
  f.y = s.arrays[2];
  f.z = s.arrays[3];
  return f;
}

ScalarField2 as_scalar2(const Snapshot& s, std::array<double, 2> len) {
  if (s.kind != SnapshotKind::scalar) throw std::runtime_error("snapshot: not a scalar field");
  ScalarField2 f(grid2_of(s, len));
  f.v = s.arrays[0];
  return f;
}

std::array<ScalarField2, 4> as_gauge2(const Snapshot& s, std::array<double, 2> len) {
  if (s.kind != SnapshotKind::gauge) throw std::runtime_error("snapshot: not a gauge field");
  Grid2 g = grid2_of(s, len);
  std::array<ScalarField2, 4> f{ScalarField2(g), ScalarField2(g), ScalarField2(g),
                                ScalarField2(g)};
  for (int k = 0; k < 4; ++k) f[static_cast<std::size_t>(k)].v = s.arrays[static_cast<std::size_t>(k)];
  return f;
}

SpinorField2 as_spinor2(const Snapshot& s, std::array<double, 2> len) {
  if (s.kind != SnapshotKind::spinor) throw std::runtime_error("snapshot: not a spinor field");
  SpinorField2 f(grid2_of(s, len));
  f.w = s.arrays[0];
  f.x = s.arrays[1];
  f.y = s.arrays[2];
  f.z = s.arrays[3];
  return f;
}

}  // namespace sw
