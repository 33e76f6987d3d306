// Kernel layer: scalar reference vs AVX2 variants must agree bitwise, sums are
// fixed-order, parallel_for chunks cover exactly and deterministically.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sw/kernels.hpp>
#include <sw/quat.hpp>
#include <sw/random.hpp>

#include <atomic>
#include <cmath>
#include <cstring>
#include <vector>

using namespace sw;
using kernels::Variant;

namespace {

std::vector<double> rand_vec(SplitMix64& rng, std::size_t n, double lo = -2, double hi = 2) {
  std::vector<double> v(n);
  for (auto& e : v) e = rng.uniform(lo, hi);
  return v;
}

bool bits_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() &&
         (a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

// Runs fn under each available variant and checks all produced outputs match
// the scalar reference bitwise.
template <class Fn>
void check_variants(Fn fn) {
  kernels::set_variant(Variant::scalar);
  auto ref = fn();
  if (kernels::supported(Variant::avx2)) {
    kernels::set_variant(Variant::avx2);
    auto got = fn();
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(bits_equal(ref[i], got[i]));
  }
  kernels::set_variant(Variant::scalar);
}

}  // namespace

TEST_CASE("axpy, diff, cross, mul_acc: reference values and variant equality") {
  SplitMix64 rng(21);
  for (std::size_t n : {std::size_t(1), std::size_t(7), std::size_t(64), std::size_t(1003)}) {
    auto x = rand_vec(rng, n), y0 = rand_vec(rng, n);
    auto p = rand_vec(rng, n), q = rand_vec(rng, n), r = rand_vec(rng, n), s = rand_vec(rng, n);

    check_variants([&] {
      auto y = y0;
      kernels::axpy(y.data(), 1.75, x.data(), n);
      std::vector<double> d(n), c(n);
      kernels::diff(d.data(), p.data(), q.data(), 3.0, n);
      kernels::cross(c.data(), p.data(), q.data(), r.data(), s.data(), n);
      auto acc = y0;
      kernels::mul_acc(acc.data(), p.data(), q.data(), n);
      return std::vector<std::vector<double>>{y, d, c, acc};
    });

    // Scalar reference vs naive loops.
    kernels::set_variant(Variant::scalar);
    std::vector<double> d(n), c(n);
    kernels::diff(d.data(), p.data(), q.data(), 3.0, n);
    kernels::cross(c.data(), p.data(), q.data(), r.data(), s.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(d[i] == (p[i] - q[i]) * 3.0);
      CHECK(c[i] == p[i] * q[i] - r[i] * s[i]);
    }
  }
}

TEST_CASE("u1_apply matches quaternion phase action per site") {
  SplitMix64 rng(22);
  const std::size_t n = 517;
  auto w = rand_vec(rng, n), x = rand_vec(rng, n), y = rand_vec(rng, n), z = rand_vec(rng, n);
  auto th = rand_vec(rng, n, -3.2, 3.2);
  std::vector<double> c(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = std::cos(th[i]);
    s[i] = std::sin(th[i]);
  }

  check_variants([&] {
    std::vector<double> ow(n), ox(n), oy(n), oz(n);
    kernels::u1_apply(ow.data(), ox.data(), oy.data(), oz.data(), c.data(), s.data(), w.data(),
                      x.data(), y.data(), z.data(), n);
    return std::vector<std::vector<double>>{ow, ox, oy, oz};
  });

  kernels::set_variant(Variant::scalar);
  std::vector<double> ow(n), ox(n), oy(n), oz(n);
  kernels::u1_apply(ow.data(), ox.data(), oy.data(), oz.data(), c.data(), s.data(), w.data(),
                    x.data(), y.data(), z.data(), n);
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Quat got{ow[i], ox[i], oy[i], oz[i]};
    Quat want = Quat{c[i], s[i], 0, 0} * Quat{w[i], x[i], y[i], z[i]};
    worst = std::max(worst, norm(got - want));
  }
  CHECK(worst < 1e-14);
}

TEST_CASE("kahler_dot and moment match the quaternion oracles per site") {
  SplitMix64 rng(23);
  const std::size_t n = 1001;
  auto w1 = rand_vec(rng, n), x1 = rand_vec(rng, n), y1 = rand_vec(rng, n), z1 = rand_vec(rng, n);
  auto w2 = rand_vec(rng, n), x2 = rand_vec(rng, n), y2 = rand_vec(rng, n), z2 = rand_vec(rng, n);

  check_variants([&] {
    std::vector<double> kd(n), m1(n), m2(n), m3(n);
    kernels::kahler_dot(kd.data(), w1.data(), x1.data(), y1.data(), z1.data(), w2.data(),
                        x2.data(), y2.data(), z2.data(), n);
    kernels::moment(m1.data(), m2.data(), m3.data(), w1.data(), x1.data(), y1.data(), z1.data(),
                    n);
    return std::vector<std::vector<double>>{kd, m1, m2, m3};
  });

  kernels::set_variant(Variant::scalar);
  std::vector<double> kd(n), m1(n), m2(n), m3(n);
  kernels::kahler_dot(kd.data(), w1.data(), x1.data(), y1.data(), z1.data(), w2.data(), x2.data(),
                      y2.data(), z2.data(), n);
  kernels::moment(m1.data(), m2.data(), m3.data(), w1.data(), x1.data(), y1.data(), z1.data(), n);
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Quat a{w1[i], x1[i], y1[i], z1[i]}, b{w2[i], x2[i], y2[i], z2[i]};
    worst = std::max(worst, std::fabs(kd[i] - kahler_pairing(a, b)));
    Moment m = moment_map(a);
    worst = std::max({worst, std::fabs(m1[i] - m.m1), std::fabs(m2[i] - m.m2),
                      std::fabs(m3[i] - m.m3)});
  }
  CHECK(worst < 1e-14);
}

TEST_CASE("pairwise sum: exact on integers, accurate on random data, order-fixed") {
  const std::size_t n = 100001;
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<double>(i + 1);
  CHECK(kernels::sum(v.data(), n) == 0.5 * double(n) * double(n + 1));

  SplitMix64 rng(24);
  auto a = rand_vec(rng, 4097);
  long double ref = 0;
  for (double e : a) ref += e;
  CHECK(std::fabs(kernels::sum(a.data(), a.size()) - double(ref)) < 1e-10);

  // dot_sum consistency with sum of products.
  auto b = rand_vec(rng, 4097);
  std::vector<double> prod(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) prod[i] = a[i] * b[i];
  CHECK(kernels::dot_sum(a.data(), b.data(), a.size()) == kernels::sum(prod.data(), prod.size()));
}

TEST_CASE("parallel_for covers every index once; results identical across worker counts") {
  const std::size_t n = 70001;
  auto run = [&](int threads) {
    kernels::set_threads(threads);
    std::vector<double> out(n, 0.0);
    std::atomic<long> calls{0};
    kernels::parallel_for(n, [&](std::size_t b, std::size_t e) {
      calls.fetch_add(1, std::memory_order_relaxed);
      for (std::size_t i = b; i < e; ++i) out[i] += std::sin(0.001 * double(i));
    });
    CHECK(calls.load() >= 1);
    return out;
  };
  auto t1 = run(1);
  auto t4 = run(4);
  kernels::set_threads(1);
  CHECK(bits_equal(t1, t4));
  for (std::size_t i : {std::size_t(0), n / 2, n - 1})
    CHECK(t1[i] == std::sin(0.001 * double(i)));
}

TEST_CASE("variant selection reports names and rejects unsupported requests") {
  CHECK(kernels::supported(Variant::scalar));
  kernels::set_variant(Variant::scalar);
  CHECK(std::string(kernels::name(kernels::active())) == "scalar");
  if (kernels::supported(Variant::avx2)) {
    kernels::set_variant(Variant::avx2);
    CHECK(std::string(kernels::name(kernels::active())) == "avx2");
    kernels::set_variant(Variant::scalar);
  } else {
    CHECK_THROWS(kernels::set_variant(Variant::avx2));
  }
}
