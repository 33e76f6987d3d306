#include <sw/random.hpp>

#include <cmath>

namespace sw {

namespace {

template <int D, class G>
void add_harmonics(std::vector<double>& out, const G& g, SplitMix64& rng, int modes, double amp) {
  for (int m = 0; m < modes; ++m) {
    std::array<int, D> k{};
    do {
      for (int d = 0; d < D; ++d) k[static_cast<std::size_t>(d)] = rng.uniform_int(-2, 2);
    } while ([&] {
      for (int d = 0; d < D; ++d)
        if (k[static_cast<std::size_t>(d)] != 0) return false;
      return true;
    }());
    const double a = amp * rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, 2 * M_PI);
    for (int i = 0; i < g.size(); ++i) {
      auto c = g.coords(i);
      double arg = phi;
      for (int d = 0; d < D; ++d)
        arg += 2 * M_PI * k[static_cast<std::size_t>(d)] * c[static_cast<std::size_t>(d)] /
               g.n[static_cast<std::size_t>(d)];
      out[static_cast<std::size_t>(i)] += a * std::cos(arg);
    }
  }
}

}  // namespace

ScalarField4 random_smooth_field(const Grid4& g, std::uint64_t seed, int modes, double amp) {
  ScalarField4 f(g);
  SplitMix64 rng(seed);
  add_harmonics<4>(f.v, g, rng, modes, amp);
  return f;
}

ScalarField2 random_smooth_field2(const Grid2& g, std::uint64_t seed, int modes, double amp) {
  ScalarField2 f(g);
  SplitMix64 rng(seed);
  add_harmonics<2>(f.v, g, rng, modes, amp);
  return f;
}

SpinorField4 random_smooth_spinor(const Grid4& g, std::uint64_t seed, int modes, double amp) {
  SpinorField4 f(g);
  SplitMix64 rng(seed);
  add_harmonics<4>(f.w, g, rng, modes, amp);
  add_harmonics<4>(f.x, g, rng, modes, amp);
  add_harmonics<4>(f.y, g, rng, modes, amp);
  add_harmonics<4>(f.z, g, rng, modes, amp);
  return f;
}

SpinorField2 random_smooth_spinor2(const Grid2& g, std::uint64_t seed, int modes, double amp) {
  SpinorField2 f(g);
  SplitMix64 rng(seed);
  add_harmonics<2>(f.w, g, rng, modes, amp);
  add_harmonics<2>(f.x, g, rng, modes, amp);
  add_harmonics<2>(f.y, g, rng, modes, amp);
  add_harmonics<2>(f.z, g, rng, modes, amp);
  return f;
}

GaugeField4 random_smooth_gauge(const Grid4& g, std::uint64_t seed, int modes, double amp) {
  GaugeField4 A(g);
  SplitMix64 rng(seed);
  for (int mu = 0; mu < 4; ++mu)
    add_harmonics<4>(A.mu[static_cast<std::size_t>(mu)].v, g, rng, modes, amp);
  return A;
}

}  // namespace sw
