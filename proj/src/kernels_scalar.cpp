// Scalar reference kernels. Expression trees here are the contract: the AVX2
// variants replicate them operation for operation.
#include <sw/kernels.hpp>

namespace sw::kernels::scalar {

void axpy(double* y, double a, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void diff(double* out, const double* p, const double* q, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = (p[i] - q[i]) * s;
}

void cross(double* out, const double* p, const double* q, const double* r, const double* s,
           std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = p[i] * q[i] - r[i] * s[i];
}

void mul_acc(double* acc, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += a[i] * b[i];
}

void u1_apply(double* ow, double* ox, double* oy, double* oz, const double* c, const double* s,
              const double* w, const double* x, const double* y, const double* z, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    ow[i] = c[i] * w[i] - s[i] * x[i];
    ox[i] = c[i] * x[i] + s[i] * w[i];
    oy[i] = c[i] * y[i] - s[i] * z[i];
    oz[i] = c[i] * z[i] + s[i] * y[i];
  }
}

void kahler_dot(double* out, const double* w1, const double* x1, const double* y1,
                const double* z1, const double* w2, const double* x2, const double* y2,
                const double* z2, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    out[i] = (w1[i] * x2[i] - x1[i] * w2[i]) + (y1[i] * z2[i] - z1[i] * y2[i]);
}

void moment(double* m1, double* m2, double* m3, const double* w, const double* x, const double* y,
            const double* z, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    m1[i] = 0.5 * ((w[i] * w[i] + x[i] * x[i]) - (y[i] * y[i] + z[i] * z[i]));
    m2[i] = x[i] * y[i] - w[i] * z[i];
    m3[i] = x[i] * z[i] + w[i] * y[i];
  }
}

}  // namespace sw::kernels::scalar
