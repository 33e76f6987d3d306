#pragma once
// Site-local compute kernels in two variants: a scalar reference and an AVX2
// implementation selected at runtime. Both are compiled without FP
// contraction and use identical expression trees, so outputs agree bitwise.
// Reductions (sum, dot_sum) have a single fixed-order pairwise code path and
// never run vectorized or parallel: results are independent of the selected
// variant and of the worker count.
//
// No kernel tolerates aliasing between outputs and inputs unless noted.

#include <cstddef>
#include <functional>

namespace sw::kernels {

enum class Variant { scalar, avx2 };

bool supported(Variant v);
void set_variant(Variant v);  // throws std::runtime_error if unsupported
Variant active();
const char* name(Variant v);

// y[i] += a * x[i]   (y may alias x)
void axpy(double* y, double a, const double* x, std::size_t n);
// out[i] = (p[i] - q[i]) * s
void diff(double* out, const double* p, const double* q, double s, std::size_t n);
// out[i] = p[i] * q[i] - r[i] * s[i]
void cross(double* out, const double* p, const double* q, const double* r, const double* s,
           std::size_t n);
// acc[i] += a[i] * b[i]
void mul_acc(double* acc, const double* a, const double* b, std::size_t n);
// Left quaternion phase action, (c[i] + i s[i]) * (w,x,y,z)[i] per site.
void u1_apply(double* ow, double* ox, double* oy, double* oz, const double* c, const double* s,
              const double* w, const double* x, const double* y, const double* z, std::size_t n);
// out[i] = <i a, b> per site = w1*x2 - x1*w2 + y1*z2 - z1*y2.
void kahler_dot(double* out, const double* w1, const double* x1, const double* y1,
                const double* z1, const double* w2, const double* x2, const double* y2,
                const double* z2, std::size_t n);
// Moment map components per site.
void moment(double* m1, double* m2, double* m3, const double* w, const double* x, const double* y,
            const double* z, std::size_t n);

// Fixed-tree pairwise reductions; always scalar.
double sum(const double* a, std::size_t n);
double dot_sum(const double* a, const double* b, std::size_t n);

// Deterministic chunked parallelism: fn is called on disjoint [begin, end)
// chunks of a fixed size covering [0, n). Chunk boundaries do not depend on
// the worker count; callers must write disjoint locations only.
void set_threads(int t);
int threads();
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace sw::kernels
