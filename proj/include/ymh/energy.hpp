#pragma once
#include <string>
#include "ymh/fields.hpp"
#include "ymh/ops.hpp"

namespace ymh {

struct EnergyReport {
  double epsilon = 0, lambda = 0;
  double curvature_term = 0, gradient_term = 0, potential_term = 0;
  double total = 0, normalized = 0;
  std::string csv_row() const;
  static const char* csv_header();
};

// e_eps = eps^2 |F|^2 + |grad Phi|^2 + (lambda/4 eps^2)(1-|Phi|^2)^2
ScalarField energy_density(const Configuration& cfg, const EnergyParams& p);
EnergyReport total_energy(const Configuration& cfg, const EnergyParams& p);

struct Perturbation {
  OneForm a;
  Su2Field phi;
};

// 2 eps^2 <F, d_A a> + 2 <grad Phi, grad phi + [a,Phi]> + (lambda/eps^2)<(|Phi|^2-1)Phi, phi>
double first_variation(const Configuration& cfg, const EnergyParams& p,
                       const Perturbation& v);

struct ElResiduals {
  OneForm r_A;       // eps^2 d*_A F - [grad Phi, Phi]
  Su2Field r_phi;    // nabla*nabla Phi - (lambda/2 eps^2)(1-|Phi|^2) Phi
  double norm = 0;   // combined discrete L2 norm
};
ElResiduals el_residuals(const Configuration& cfg, const EnergyParams& p);

struct BogomolnySplit {
  double topological = 0;  // +- 8 pi k eps
  double defect = 0;       // ||eps F -+ *grad Phi||^2
  double potential = 0;
};
BogomolnySplit bogomolny_split(const Configuration& cfg, const EnergyParams& p, int sign);

// xi = 2w eps|F|^2 + eps^-1 |grad Phi|^2 + lambda eps^-3 w^2 + eps |[F,Phi]|^2
// (equal to eps^-1 e_eps - eps |<F,Phi>|^2); returns the expansion.
ScalarField diagnostic_xi(const Configuration& cfg, const EnergyParams& p);
// same quantity via the definition route, for the identity test
ScalarField diagnostic_xi_definition(const Configuration& cfg, const EnergyParams& p);

// L2 norm of  Delta w - |grad Phi|^2 + (lambda w/eps^2)|Phi|^2  over interior sites
double verify_w_identity(const Configuration& cfg, const EnergyParams& p);

struct PsiTheta {
  ScalarField psi0, theta0, psi0_perp;
};
PsiTheta psi_theta_densities(const Configuration& cfg, const EnergyParams& p);

// Hodge star helpers: (*F)_x = F_yz, (*F)_y = F_zx, (*F)_z = F_xy and back
Su2 star_two(const TwoForm& F, std::size_t s, int axis);

}  // namespace ymh
