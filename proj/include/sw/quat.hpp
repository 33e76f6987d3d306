#pragma once
// Quaternions over double with the structures used throughout the toolkit:
// Hamilton product, the S^1 moment map mu(h) = (1/2) conj(h) i h in closed
// form, its derivative, the Kahler pairing <i v, w>, and the fundamental
// vector field of the left U(1) action.

#include <cmath>

namespace sw {

struct Quat {
  double w = 0, x = 0, y = 0, z = 0;
  friend constexpr bool operator==(const Quat&, const Quat&) = default;
};

constexpr Quat operator+(Quat a, Quat b) { return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Quat operator-(Quat a, Quat b) { return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Quat operator-(Quat a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quat operator*(double s, Quat a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }

constexpr Quat operator*(Quat a, Quat b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quat conj(Quat a) { return {a.w, -a.x, -a.y, -a.z}; }
constexpr double dot(Quat a, Quat b) { return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr double norm2(Quat a) { return dot(a, a); }
inline double norm(Quat a) { return std::sqrt(norm2(a)); }

// Left multiplications by the imaginary units, spelled out once.
constexpr Quat left_i(Quat h) { return {-h.x, h.w, -h.z, h.y}; }
constexpr Quat left_j(Quat h) { return {-h.y, h.z, h.w, -h.x}; }
constexpr Quat left_k(Quat h) { return {-h.z, -h.y, h.x, h.w}; }

struct Moment {
  double m1 = 0, m2 = 0, m3 = 0;
};

// mu(h) = (1/2) conj(h) i h, expanded in components. The w-part cancels
// identically, so only the three imaginary coefficients are returned.
constexpr Moment moment_map(Quat h) {
  return {0.5 * (h.w * h.w + h.x * h.x - h.y * h.y - h.z * h.z),
          h.x * h.y - h.w * h.z,
          h.x * h.z + h.w * h.y};
}

// Directional derivative of mu at h along v; bilinear and symmetric in (h, v).
constexpr Moment moment_diff(Quat h, Quat v) {
  return {h.w * v.w + h.x * v.x - h.y * v.y - h.z * v.z,
          h.x * v.y + v.x * h.y - h.w * v.z - v.w * h.z,
          h.x * v.z + v.x * h.z + h.w * v.y + v.w * h.y};
}

// Kahler pairing of the flat hyperkahler target for the left complex
// structure i: omega(v, w) = <i v, w>. Antisymmetric; omega(v, iv) = |v|^2.
constexpr double kahler_pairing(Quat v, Quat w) { return dot(left_i(v), w); }

// Fundamental field of h -> e^{i c t} h at t = 0. The sign is fixed once by
// the identity kahler_pairing(fundamental_field(c, h), v) + c Re(conj(h) v) = 0.
constexpr Quat fundamental_field(double c, Quat h) { return c * left_i(h); }

inline Quat u1_phase(double theta) { return {std::cos(theta), std::sin(theta), 0, 0}; }

}  // namespace sw
