#pragma once
// Periodic grids on T^2 x T^2 and flat field containers. Linear site index is
// row-major: ((x0 n1 + x1) n2 + x2) n3 + x3. Axes 0,1 span the first torus
// factor, axes 2,3 the second. Quaternion fields store one flat array per
// component so kernels stream them directly.

#include <sw/quat.hpp>

#include <array>
#include <vector>

namespace sw {

struct Grid4 {
  std::array<int, 4> n{4, 4, 4, 4};
  std::array<double, 4> len{1, 1, 1, 1};

  int size() const { return n[0] * n[1] * n[2] * n[3]; }
  double spacing(int mu) const { return len[static_cast<std::size_t>(mu)] / n[static_cast<std::size_t>(mu)]; }
  double cell() const { return spacing(0) * spacing(1) * spacing(2) * spacing(3); }
  double volume() const { return len[0] * len[1] * len[2] * len[3]; }
  int stride(int mu) const {
    switch (mu) {
      case 0: return n[1] * n[2] * n[3];
      case 1: return n[2] * n[3];
      case 2: return n[3];
      default: return 1;
    }
  }
  int index(std::array<int, 4> c) const { return ((c[0] * n[1] + c[1]) * n[2] + c[2]) * n[3] + c[3]; }
  std::array<int, 4> coords(int idx) const {
    std::array<int, 4> c{};
    c[3] = idx % n[3]; idx /= n[3];
    c[2] = idx % n[2]; idx /= n[2];
    c[1] = idx % n[1]; idx /= n[1];
    c[0] = idx;
    return c;
  }
  friend bool operator==(const Grid4&, const Grid4&) = default;
};

struct Grid2 {
  std::array<int, 2> n{4, 4};
  std::array<double, 2> len{1, 1};

  int size() const { return n[0] * n[1]; }
  double spacing(int mu) const { return len[static_cast<std::size_t>(mu)] / n[static_cast<std::size_t>(mu)]; }
  double cell() const { return spacing(0) * spacing(1); }
  double volume() const { return len[0] * len[1]; }
  int stride(int mu) const { return mu == 0 ? n[1] : 1; }
  int index(std::array<int, 2> c) const { return c[0] * n[1] + c[1]; }
  std::array<int, 2> coords(int idx) const { return {idx / n[1], idx % n[1]}; }
  friend bool operator==(const Grid2&, const Grid2&) = default;
};

inline Grid4 product_grid(const Grid2& s1, const Grid2& s2) {
  return {{s1.n[0], s1.n[1], s2.n[0], s2.n[1]}, {s1.len[0], s1.len[1], s2.len[0], s2.len[1]}};
}
inline Grid2 factor1(const Grid4& g) { return {{g.n[0], g.n[1]}, {g.len[0], g.len[1]}}; }
inline Grid2 factor2(const Grid4& g) { return {{g.n[2], g.n[3]}, {g.len[2], g.len[3]}}; }

struct ScalarField4 {
  Grid4 grid;
  std::vector<double> v;
  ScalarField4() = default;
  explicit ScalarField4(const Grid4& g) : grid(g), v(static_cast<std::size_t>(g.size()), 0.0) {}
};

struct ScalarField2 {
  Grid2 grid;
  std::vector<double> v;
  ScalarField2() = default;
  explicit ScalarField2(const Grid2& g) : grid(g), v(static_cast<std::size_t>(g.size()), 0.0) {}
};

struct SpinorField4 {
  Grid4 grid;
  std::vector<double> w, x, y, z;
  SpinorField4() = default;
  explicit SpinorField4(const Grid4& g)
      : grid(g),
        w(static_cast<std::size_t>(g.size()), 0.0),
        x(static_cast<std::size_t>(g.size()), 0.0),
        y(static_cast<std::size_t>(g.size()), 0.0),
        z(static_cast<std::size_t>(g.size()), 0.0) {}
  Quat site(std::size_t i) const { return {w[i], x[i], y[i], z[i]}; }
  void set_site(std::size_t i, Quat q) { w[i] = q.w; x[i] = q.x; y[i] = q.y; z[i] = q.z; }
};

struct SpinorField2 {
  Grid2 grid;
  std::vector<double> w, x, y, z;
  SpinorField2() = default;
  explicit SpinorField2(const Grid2& g)
      : grid(g),
        w(static_cast<std::size_t>(g.size()), 0.0),
        x(static_cast<std::size_t>(g.size()), 0.0),
        y(static_cast<std::size_t>(g.size()), 0.0),
        z(static_cast<std::size_t>(g.size()), 0.0) {}
  Quat site(std::size_t i) const { return {w[i], x[i], y[i], z[i]}; }
  void set_site(std::size_t i, Quat q) { w[i] = q.w; x[i] = q.x; y[i] = q.y; z[i] = q.z; }
};

// Gauge field: one real component per axis (u(1)-valued connection coefficients).
struct GaugeField4 {
  Grid4 grid;
  std::array<ScalarField4, 4> mu;
  GaugeField4() = default;
  explicit GaugeField4(const Grid4& g)
      : grid(g), mu{ScalarField4(g), ScalarField4(g), ScalarField4(g), ScalarField4(g)} {}
};

}  // namespace sw
