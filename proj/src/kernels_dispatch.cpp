// Runtime variant selection, fixed-order reductions, deterministic chunked
// parallel_for. Reductions never depend on the variant or worker count.
#include <sw/kernels.hpp>

#include <atomic>
#include <stdexcept>
#include <thread>
#include <vector>

namespace sw::kernels {

namespace scalar {
void axpy(double*, double, const double*, std::size_t);
void diff(double*, const double*, const double*, double, std::size_t);
void cross(double*, const double*, const double*, const double*, const double*, std::size_t);
void mul_acc(double*, const double*, const double*, std::size_t);
void u1_apply(double*, double*, double*, double*, const double*, const double*, const double*,
              const double*, const double*, const double*, std::size_t);
void kahler_dot(double*, const double*, const double*, const double*, const double*, const double*,
                const double*, const double*, const double*, std::size_t);
void moment(double*, double*, double*, const double*, const double*, const double*, const double*,
            std::size_t);
}  // namespace scalar

#ifdef SW_HAVE_AVX2_TU
namespace avx2 {
void axpy(double*, double, const double*, std::size_t);
void diff(double*, const double*, const double*, double, std::size_t);
void cross(double*, const double*, const double*, const double*, const double*, std::size_t);
void mul_acc(double*, const double*, const double*, std::size_t);
void u1_apply(double*, double*, double*, double*, const double*, const double*, const double*,
              const double*, const double*, const double*, std::size_t);
void kahler_dot(double*, const double*, const double*, const double*, const double*, const double*,
                const double*, const double*, const double*, std::size_t);
void moment(double*, double*, double*, const double*, const double*, const double*, const double*,
            std::size_t);
}  // namespace avx2
#endif

namespace {

Variant g_variant = Variant::scalar;
int g_threads = 1;

bool cpu_has_avx2() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace

bool supported(Variant v) {
  if (v == Variant::scalar) return true;
#ifdef SW_HAVE_AVX2_TU
  return v == Variant::avx2 && cpu_has_avx2();
#else
  return false;
#endif
}

void set_variant(Variant v) {
  if (!supported(v)) throw std::runtime_error("kernel variant not supported on this host");
  g_variant = v;
}

Variant active() { return g_variant; }

const char* name(Variant v) { return v == Variant::scalar ? "scalar" : "avx2"; }

#ifdef SW_HAVE_AVX2_TU
#define SW_DISPATCH(fn, ...) \
  do { \
    if (g_variant == Variant::avx2) \
      avx2::fn(__VA_ARGS__); \
    else \
      scalar::fn(__VA_ARGS__); \
  } while (0)
#else
#define SW_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

void axpy(double* y, double a, const double* x, std::size_t n) { SW_DISPATCH(axpy, y, a, x, n); }

void diff(double* out, const double* p, const double* q, double s, std::size_t n) {
  SW_DISPATCH(diff, out, p, q, s, n);
}

void cross(double* out, const double* p, const double* q, const double* r, const double* s,
           std::size_t n) {
  SW_DISPATCH(cross, out, p, q, r, s, n);
}

void mul_acc(double* acc, const double* a, const double* b, std::size_t n) {
  SW_DISPATCH(mul_acc, acc, a, b, n);
}

void u1_apply(double* ow, double* ox, double* oy, double* oz, const double* c, const double* s,
              const double* w, const double* x, const double* y, const double* z, std::size_t n) {
  SW_DISPATCH(u1_apply, ow, ox, oy, oz, c, s, w, x, y, z, n);
}

void kahler_dot(double* out, const double* w1, const double* x1, const double* y1,
                const double* z1, const double* w2, const double* x2, const double* y2,
                const double* z2, std::size_t n) {
  SW_DISPATCH(kahler_dot, out, w1, x1, y1, z1, w2, x2, y2, z2, n);
}

void moment(double* m1, double* m2, double* m3, const double* w, const double* x, const double* y,
            const double* z, std::size_t n) {
  SW_DISPATCH(moment, m1, m2, m3, w, x, y, z, n);
}

#undef SW_DISPATCH

// Fixed-tree pairwise sum; the recursion shape depends on n only.
namespace {
double pairwise(const double* a, std::size_t n) {
  if (n <= 8) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += a[i];
    return s;
  }
  std::size_t half = n / 2;
  return pairwise(a, half) + pairwise(a + half, n - half);
}

double pairwise_dot(const double* a, const double* b, std::size_t n) {
  if (n <= 8) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
  }
  std::size_t half = n / 2;
  return pairwise_dot(a, b, half) + pairwise_dot(a + half, b + half, n - half);
}
}  // namespace

double sum(const double* a, std::size_t n) { return pairwise(a, n); }
double dot_sum(const double* a, const double* b, std::size_t n) { return pairwise_dot(a, b, n); }

void set_threads(int t) { g_threads = t < 1 ? 1 : t; }
int threads() { return g_threads; }

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  constexpr std::size_t chunk = 4096;  // fixed: chunking never depends on worker count
  const std::size_t nchunks = (n + chunk - 1) / chunk;
  if (g_threads <= 1 || nchunks <= 1) {
    for (std::size_t c = 0; c < nchunks; ++c)
      fn(c * chunk, std::min(n, (c + 1) * chunk));
    return;
  }
  std::atomic<std::size_t> counter{0};
  auto worker = [&] {
    for (;;) {
      std::size_t c = counter.fetch_add(1, std::memory_order_relaxed);
      if (c >= nchunks) return;
      fn(c * chunk, std::min(n, (c + 1) * chunk));
    }
  };
  const int nt = g_threads > static_cast<int>(nchunks) ? static_cast<int>(nchunks) : g_threads;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nt - 1));
  for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace sw::kernels
