#pragma once
#include <cmath>
#include "ymh/fields.hpp"

// Neighbor access with boundary handling. Periodic wrap in y,z is plain; the
// x-wrap applies the abelian flux transition when twist_n != 0: crossing the
// seam in +x rotates su(2) coefficients about the 3-axis by
// alpha = 2*pi*twist_n*(y/L_y) and shifts the y-component of A by
// 2*pi*twist_n/L_y along T3. This makes the constant-flux reducible pair an
// exact lattice solution.

namespace ymh::detail {

using std::int64_t;

inline Su2 rotz(const Su2& v, double ca, double sa) {
  return {v.c1 * ca - v.c2 * sa, v.c1 * sa + v.c2 * ca, v.c3};
}

// Section-type field (Phi, perturbations, F, grad Phi): homogeneous transport.
inline Su2 sample_section(const Grid& g, int64_t i, int64_t j, int64_t k,
                          const double* base, std::size_t stride_per_site,
                          std::size_t comp_offset) {
  int xw = 0;
  if (i < 0) { i += g.n1; xw = -1; } else if (i >= g.n1) { i -= g.n1; xw = 1; }
  if (j < 0) j += g.n2; else if (j >= g.n2) j -= g.n2;
  if (k < 0) k += g.n3; else if (k >= g.n3) k -= g.n3;
  std::size_t o = g.idx(i, j, k) * stride_per_site + comp_offset;
  Su2 v{base[o], base[o + 1], base[o + 2]};
  if (xw != 0 && g.twist_n != 0) {
    double alpha = xw * 2.0 * M_PI * g.twist_n * (double)j / (double)g.n2;
    v = rotz(v, std::cos(alpha), std::sin(alpha));
  }
  return v;
}

inline Su2 sample_phi(const Su2Field& f, int64_t i, int64_t j, int64_t k) {
  return sample_section(f.grid, i, j, k, f.v.data(), 3, 0);
}

inline Su2 sample_oneform(const OneForm& f, int64_t i, int64_t j, int64_t k, int d) {
  return sample_section(f.grid, i, j, k, f.v.data(), 9, 3 * (std::size_t)d);
}

inline Su2 sample_twoform(const TwoForm& f, int64_t i, int64_t j, int64_t k, int plane) {
  return sample_section(f.grid, i, j, k, f.v.data(), 9, 3 * (std::size_t)plane);
}

// Connection component A_d: like a section, plus the affine T3-shift on A_y
// when crossing the seam.
inline Su2 sample_A(const OneForm& A, int64_t i, int64_t j, int64_t k, int d) {
  const Grid& g = A.grid;
  int xw = 0;
  int64_t ii = i;
  if (ii < 0) { ii += g.n1; xw = -1; } else if (ii >= g.n1) { ii -= g.n1; xw = 1; }
  int64_t jj = j < 0 ? j + g.n2 : (j >= g.n2 ? j - g.n2 : j);
  int64_t kk = k < 0 ? k + g.n3 : (k >= g.n3 ? k - g.n3 : k);
  Su2 v = A.get(g.idx(ii, jj, kk), d);
  if (xw != 0 && g.twist_n != 0) {
    double alpha = xw * 2.0 * M_PI * g.twist_n * (double)jj / (double)g.n2;
    v = rotz(v, std::cos(alpha), std::sin(alpha));
    if (d == 1) v.c3 += xw * 2.0 * M_PI * g.twist_n / (g.n2 * g.h);
  }
  return v;
}

// Centered derivative along `axis`, one-sided second order at Dirichlet faces.
// Sampler: callable (i,j,k) -> Su2.
template <class Sampler>
inline Su2 deriv(const Grid& g, int64_t i, int64_t j, int64_t k, int axis,
                 Sampler&& at) {
  const double inv2h = 0.5 / g.h;
  int64_t c = axis == 0 ? i : axis == 1 ? j : k;
  int64_t n = axis == 0 ? g.n1 : axis == 1 ? g.n2 : g.n3;
  auto shift = [&](int64_t s) {
    int64_t ii = i, jj = j, kk = k;
    (axis == 0 ? ii : axis == 1 ? jj : kk) += s;
    return at(ii, jj, kk);
  };
  if (g.boundary == Boundary::Periodic) {
    return (shift(1) - shift(-1)) * inv2h;
  }
  if (c == 0) return (shift(0) * -3.0 + shift(1) * 4.0 - shift(2)) * inv2h;
  if (c == n - 1) return (shift(0) * 3.0 - shift(-1) * 4.0 + shift(-2)) * inv2h;
  return (shift(1) - shift(-1)) * inv2h;
}

}  // namespace ymh::detail
