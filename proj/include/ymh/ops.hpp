#pragma once
#include "ymh/fields.hpp"

namespace ymh {

// F_ij = d_i A_j - d_j A_i + [A_i, A_j], stored as (xy, yz, zx)
TwoForm curvature(const Configuration& cfg);

// (grad Phi)_i = d_i Phi + [A_i, Phi]
OneForm cov_deriv(const Configuration& cfg);
OneForm cov_deriv_field(const Configuration& cfg, const Su2Field& phi);

// covariant exterior derivative of a 1-form: (d_A a)_ij = d_i a_j - d_j a_i
// + [A_i, a_j] - [A_j, a_i]
TwoForm d_A(const Configuration& cfg, const OneForm& a);

// (d*_A F)_j = -sum_i (d_i F_ij + [A_i, F_ij])
OneForm codiff_two(const Configuration& cfg, const TwoForm& F);
OneForm codiff_F(const Configuration& cfg);

// nabla* of a 1-form: -sum_i (d_i psi_i + [A_i, psi_i])
Su2Field codiff_one(const Configuration& cfg, const OneForm& psi);

// nabla* nabla Phi
Su2Field rough_laplacian_phi(const Configuration& cfg);

// Geometer's scalar Laplacian -sum_i d_i^2 (7-point). On Dirichlet grids
// boundary sites are left 0 (callers norm over the interior).
ScalarField scalar_laplacian(const ScalarField& f);

struct Region {
  enum class Kind { All, InBall } kind = Kind::All;
  Ball b{};
  static Region all() { return {}; }
  static Region ball(double cx, double cy, double cz, double r) {
    Region reg;
    reg.kind = Kind::InBall;
    reg.b = Ball{{cx, cy, cz}, r};
    return reg;
  }
};

// sum of h^3 * values, sharp ball indicator for Region::InBall
double integrate(const ScalarField& f, const Region& region);

// minimal-image (periodic) / plain (Dirichlet) squared distance to a point
double dist2_to(const Grid& g, std::int64_t i, std::int64_t j, std::int64_t k,
                const double c[3]);

}  // namespace ymh
