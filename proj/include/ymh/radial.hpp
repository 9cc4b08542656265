#pragma once
#include <vector>
#include "ymh/energy.hpp"
#include "ymh/flow.hpp"

namespace ymh {

// Hedgehog reduction: Phi = (H(r)/r) x^ . T, A_i = ((K(r)-1)/r) (e_i x x^) . T
struct RadialProfile {
  std::vector<double> r, H, K;  // r strictly increasing in (0, r_max]
  double r_max() const { return r.back(); }
  double dr() const { return r[0]; }  // uniform grid r_j = j*dr
};

// closed forms H = r coth r - 1, K = r/sinh r (series for small r)
RadialProfile bps_profile(double r_max, int n);

// relaxation seed for lambda > 0: H = r tanh r (so H(r_max) = r_max and
// |Phi| -> 1 exponentially), K = r/sinh r
RadialProfile monopole_seed(double r_max, int n);

// reduced 1-D quadrature of the hedgehog energy
EnergyReport radial_energy(const RadialProfile& prof, const EnergyParams& p);

// far-field completion r_max * e_r(r_max): exact for reduced densities ~ c/r^2
// (the lambda = 0 monopole's Coulomb tail), used by the bps subcommand
double radial_tail_estimate(const RadialProfile& prof, const EnergyParams& p);

// reduced defect ||eps F - *grad Phi||^2 of the hedgehog field (sign +1)
double radial_bogomolny_defect(const RadialProfile& prof, const EnergyParams& p);

// reduced energy density per cell (cell j spans (r_j - dr, r_j]), so that
// total = dr * sum of the densities
std::vector<double> radial_density(const RadialProfile& prof, const EnergyParams& p);

struct RadialFlowResult {
  RadialProfile prof;
  FlowTrace trace;
};

// gradient flow of the reduced energy with fixed closures H(0)=0, K(0)=1 and
// H(r_max)=r_max, K(r_max)=0; preconditioned descent with backtracking
RadialFlowResult radial_relax(const RadialProfile& prof, const EnergyParams& p,
                              const FlowParams& fp);

// lift to a 3-D grid centered on the domain; boundary_threshold guards the
// |Phi| -> 1 far-field assumption at the inscribed sphere
Configuration hedgehog_to_grid(const RadialProfile& prof, const Grid& grid,
                               double boundary_threshold = 0.99);

}  // namespace ymh
