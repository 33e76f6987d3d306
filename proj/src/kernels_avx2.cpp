// AVX2 kernel variants. Compiled in a separate TU with -mavx2; only reached
// after a runtime cpu check. Each lane performs exactly the operations of the
// scalar reference (no FMA contraction), so results are bitwise identical.
#include <sw/kernels.hpp>

#include <immintrin.h>

namespace sw::kernels::avx2 {

namespace {
constexpr std::size_t W = 4;  // doubles per __m256d
}

void axpy(double* y, double a, const double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + W <= n; i += W) {
    __m256d vy = _mm256_loadu_pd(y + i);
    __m256d vx = _mm256_loadu_pd(x + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(va, vx)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void diff(double* out, const double* p, const double* q, double s, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + W <= n; i += W) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(p + i), _mm256_loadu_pd(q + i));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(d, vs));
  }
  for (; i < n; ++i) out[i] = (p[i] - q[i]) * s;
}

void cross(double* out, const double* p, const double* q, const double* r, const double* s,
           std::size_t n) {
  std::size_t i = 0;
  for (; i + W <= n; i += W) {
    __m256d pq = _mm256_mul_pd(_mm256_loadu_pd(p + i), _mm256_loadu_pd(q + i));
    __m256d rs = _mm256_mul_pd(_mm256_loadu_pd(r + i), _mm256_loadu_pd(s + i));
    _mm256_storeu_pd(out + i, _mm256_sub_pd(pq, rs));
  }
  for (; i < n; ++i) out[i] = p[i] * q[i] - r[i] * s[i];
}

void mul_acc(double* acc, const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + W <= n; i += W) {
    __m256d ab = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), ab));
  }
  for (; i < n; ++i) acc[i] += a[i] * b[i];
}

void u1_apply(double* ow, double* ox, double* oy, double* oz, const double* c, const double* s,
              const double* w, const double* x, const double* y, const double* z, std::size_t n) {
  std::size_t i = 0;
  for (; i + W <= n; i += W) {
    __m256d vc = _mm256_loadu_pd(c + i), vs = _mm256_loadu_pd(s + i);
    __m256d vw = _mm256_loadu_pd(w + i), vx = _mm256_loadu_pd(x + i);
    __m256d vy = _mm256_loadu_pd(y + i), vz = _mm256_loadu_pd(z + i);
    _mm256_storeu_pd(ow + i, _mm256_sub_pd(_mm256_mul_pd(vc, vw), _mm256_mul_pd(vs, vx)));
    _mm256_storeu_pd(ox + i, _mm256_add_pd(_mm256_mul_pd(vc, vx), _mm256_mul_pd(vs, vw)));
    _mm256_storeu_pd(oy + i, _mm256_sub_pd(_mm256_mul_pd(vc, vy), _mm256_mul_pd(vs, vz)));
    _mm256_storeu_pd(oz + i, _mm256_add_pd(_mm256_mul_pd(vc, vz), _mm256_mul_pd(vs, vy)));
  }
  for (; i < n; ++i) {
    ow[i] = c[i] * w[i] - s[i] * x[i];
    ox[i] = c[i] * x[i] + s[i] * w[i];
    oy[i] = c[i] * y[i] - s[i] * z[i];
    oz[i] = c[i] * z[i] + s[i] * y[i];
  }
}

void kahler_dot(double* out, const double* w1, const double* x1, const double* y1,
                const double* z1, const double* w2, const double* x2, const double* y2,
                const double* z2, std::size_t n) {
  std::size_t i = 0;
  for (; i + W <= n; i += W) {
    __m256d a = _mm256_sub_pd(_mm256_mul_pd(_mm256_loadu_pd(w1 + i), _mm256_loadu_pd(x2 + i)),
                              _mm256_mul_pd(_mm256_loadu_pd(x1 + i), _mm256_loadu_pd(w2 + i)));
    __m256d b = _mm256_sub_pd(_mm256_mul_pd(_mm256_loadu_pd(y1 + i), _mm256_loadu_pd(z2 + i)),
                              _mm256_mul_pd(_mm256_loadu_pd(z1 + i), _mm256_loadu_pd(y2 + i)));
    _mm256_storeu_pd(out + i, _mm256_add_pd(a, b));
  }
  for (; i < n; ++i)
    out[i] = (w1[i] * x2[i] - x1[i] * w2[i]) + (y1[i] * z2[i] - z1[i] * y2[i]);
}

void moment(double* m1, double* m2, double* m3, const double* w, const double* x, const double* y,
            const double* z, std::size_t n) {
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t i = 0;
  for (; i + W <= n; i += W) {
    __m256d vw = _mm256_loadu_pd(w + i), vx = _mm256_loadu_pd(x + i);
    __m256d vy = _mm256_loadu_pd(y + i), vz = _mm256_loadu_pd(z + i);
    __m256d wx = _mm256_add_pd(_mm256_mul_pd(vw, vw), _mm256_mul_pd(vx, vx));
    __m256d yz = _mm256_add_pd(_mm256_mul_pd(vy, vy), _mm256_mul_pd(vz, vz));
    _mm256_storeu_pd(m1 + i, _mm256_mul_pd(half, _mm256_sub_pd(wx, yz)));
    _mm256_storeu_pd(m2 + i, _mm256_sub_pd(_mm256_mul_pd(vx, vy), _mm256_mul_pd(vw, vz)));
    _mm256_storeu_pd(m3 + i, _mm256_add_pd(_mm256_mul_pd(vx, vz), _mm256_mul_pd(vw, vy)));
  }
  for (; i < n; ++i) {
    m1[i] = 0.5 * ((w[i] * w[i] + x[i] * x[i]) - (y[i] * y[i] + z[i] * z[i]));
    m2[i] = x[i] * y[i] - w[i] * z[i];
    m3[i] = x[i] * z[i] + w[i] * y[i];
  }
}

}  // namespace sw::kernels::avx2
