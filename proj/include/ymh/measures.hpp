#pragma once
#include <array>
#include <vector>
#include "ymh/energy.hpp"
#include "ymh/spectral.hpp"

namespace ymh {

struct MeasureField {
  ScalarField mu;     // eps^-1 e_eps
  ScalarField kappa;  // 2 <*F, grad Phi>
};

MeasureField measures(const Configuration& cfg, const EnergyParams& p);

// k = (1/4 pi) integral <*F, grad Phi> over the region
double charge_volume(const Configuration& cfg, const EnergyParams& p, const Region& region);

// geodesic icosphere: unit vertices, outward-wound triangles
struct Icosphere {
  std::vector<std::array<double, 3>> vert;
  std::vector<std::array<int, 3>> tri;
};
Icosphere icosphere(int level);

// degree of Phi^ on the sphere (center, r), trilinear field sampling
double charge_degree(const Configuration& cfg, const double center[3], double r,
                     int level = 4);

struct ConcentrationPoint {
  double center[3];
  double theta_hat;  // mu-mass of the ball
  double xi_hat;     // kappa-mass of the ball
};
struct ConcentrationReport {
  std::vector<ConcentrationPoint> points;
  double eta_star_user = 1.0;
};

// greedy disjoint balls of radius r with mu-mass >= eta_star_user
ConcentrationReport detect_concentration(const MeasureField& m, double r,
                                         double eta_star_user);

struct RescaleResult {
  Configuration cfg;
  EnergyParams p;
};

// zoom by t about center: h -> h/t, eps -> eps/t, A -> t A, Phi unchanged.
// Pure reinterpretation (plus a recentering roll on untwisted periodic
// grids), so the scaling identities hold exactly for every t > 0.
RescaleResult rescale(const Configuration& cfg, const EnergyParams& p,
                      const double center[3], double t);

struct ConservationRow {
  double r = 0, lhs = 0, rhs = 0;
};

// lhs = r * surface integral of (2 eps^2 |i_n F|^2 + 2 |grad_n Phi|^2 - e),
// rhs = ball integral of (eps^2 |F|^2 - |grad Phi|^2 - 3 lambda w^2/eps^2)
std::vector<ConservationRow> conservation_check(const Configuration& cfg,
                                                const EnergyParams& p,
                                                const double center[3],
                                                const std::vector<double>& radii,
                                                int level = 4);

// spectral split of omega = sqrt(eps) <*F, Phi> into h + df + d*alpha
HodgeSplit hodge_longitudinal(const Configuration& cfg, const EnergyParams& p);

}  // namespace ymh
