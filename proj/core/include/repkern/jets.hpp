#pragma once

#include <array>
#include <complex>

namespace repkern {

using cd = std::complex<double>;

// Forward-mode first-order jet with respect to three real chart parameters.
// Carries a complex value together with its partial derivatives du0, du1, du2.
// Conjugation commutes with d/du_i because the parameters are real, which is
// what makes this safe for non-holomorphic expressions (|z|^2, conj(z), ...).
struct Jet3 {
  cd v{};
  std::array<cd, 3> d{cd{}, cd{}, cd{}};

  Jet3() = default;
  Jet3(cd value) : v(value) {}  // constant: all partials zero
  Jet3(cd value, std::array<cd, 3> der) : v(value), d(der) {}
};

inline Jet3 operator+(const Jet3& a, const Jet3& b) {
  return {a.v + b.v, {a.d[0] + b.d[0], a.d[1] + b.d[1], a.d[2] + b.d[2]}};
}

inline Jet3 operator-(const Jet3& a, const Jet3& b) {
  return {a.v - b.v, {a.d[0] - b.d[0], a.d[1] - b.d[1], a.d[2] - b.d[2]}};
}

inline Jet3 operator*(const Jet3& a, const Jet3& b) {
  return {a.v * b.v,
          {a.d[0] * b.v + a.v * b.d[0], a.d[1] * b.v + a.v * b.d[1],
           a.d[2] * b.v + a.v * b.d[2]}};
}

inline Jet3 operator/(const Jet3& a, const Jet3& b) {
  const cd inv = 1.0 / b.v;
  return {a.v * inv,
          {(a.d[0] - a.v * inv * b.d[0]) * inv, (a.d[1] - a.v * inv * b.d[1]) * inv,
           (a.d[2] - a.v * inv * b.d[2]) * inv}};
}

inline Jet3 conj(const Jet3& a) {
  return {std::conj(a.v), {std::conj(a.d[0]), std::conj(a.d[1]), std::conj(a.d[2])}};
}

inline Jet3 operator*(cd s, const Jet3& a) { return {s * a.v, {s * a.d[0], s * a.d[1], s * a.d[2]}}; }
inline Jet3 operator*(const Jet3& a, cd s) { return s * a; }
inline Jet3 operator-(const Jet3& a) { return {-a.v, {-a.d[0], -a.d[1], -a.d[2]}}; }

}  // namespace repkern
