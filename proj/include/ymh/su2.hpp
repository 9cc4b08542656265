#pragma once
#include <cmath>
#include "ymh/errors.hpp"

namespace ymh {

// Element of su(2) in the orthonormal basis T1,T2,T3 (<a,b> = -2 tr(ab)).
// With these basis relations the bracket on coefficient triples is the
// negated cross product.
struct Su2 {
  double c1 = 0, c2 = 0, c3 = 0;

  Su2() = default;
  Su2(double a, double b, double c) : c1(a), c2(b), c3(c) {}

  Su2 operator+(const Su2& o) const { return {c1 + o.c1, c2 + o.c2, c3 + o.c3}; }
  Su2 operator-(const Su2& o) const { return {c1 - o.c1, c2 - o.c2, c3 - o.c3}; }
  Su2 operator*(double s) const { return {c1 * s, c2 * s, c3 * s}; }
  Su2 operator-() const { return {-c1, -c2, -c3}; }
  Su2& operator+=(const Su2& o) { c1 += o.c1; c2 += o.c2; c3 += o.c3; return *this; }
  Su2& operator-=(const Su2& o) { c1 -= o.c1; c2 -= o.c2; c3 -= o.c3; return *this; }
  Su2& operator*=(double s) { c1 *= s; c2 *= s; c3 *= s; return *this; }
};

inline Su2 operator*(double s, const Su2& a) { return a * s; }

inline double inner(const Su2& a, const Su2& b) {
  return a.c1 * b.c1 + a.c2 * b.c2 + a.c3 * b.c3;
}

inline double norm2(const Su2& a) { return inner(a, a); }
inline double norm(const Su2& a) { return std::sqrt(norm2(a)); }

// [a,b]: coefficients are -(a x b).
inline Su2 bracket(const Su2& a, const Su2& b) {
  return {-(a.c2 * b.c3 - a.c3 * b.c2),
          -(a.c3 * b.c1 - a.c1 * b.c3),
          -(a.c1 * b.c2 - a.c2 * b.c1)};
}

inline constexpr double tolerance_zero = 1e-12;

struct SplitResult {
  Su2 parallel, perp;
};

// Longitudinal/transverse split relative to phi:
//   xi_par  = |phi|^-2 <xi,phi> phi
//   xi_perp = |phi|^-2 [phi,[xi,phi]]
inline SplitResult split_parallel_perp(const Su2& xi, const Su2& phi,
                                       double tol = tolerance_zero) {
  double n2 = norm2(phi);
  if (std::sqrt(n2) <= tol) throw ZeroHiggs("split_parallel_perp: |phi| below tolerance");
  Su2 par = phi * (inner(xi, phi) / n2);
  Su2 perp = bracket(phi, bracket(xi, phi)) * (1.0 / n2);
  return {par, perp};
}

}  // namespace ymh
