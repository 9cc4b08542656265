#pragma once
#include <array>
#include <cstdint>
#include <vector>
#include "ymh/energy.hpp"
#include "ymh/flow.hpp"

namespace ymh {

// Explicit min-max sweepout family H(y), y in the closed unit 3-ball:
//   a(y) = -y/(1-|y|),  Phi_y(x) = R((x - a(y))/eps),  R(x) = rho(|x|) x/|x|,
//   A_y = [d Phi_y, Phi_y] by centered differences; |y| = 1 gives the
//   constant pair (0, y). Cube coordinates are centered on the grid.
Configuration build_sweepout(const double y[3], const EnergyParams& p, const Grid& grid);

// the radial cutoff rho: t for t <= 2/3, 1 for t >= 1, cubic Hermite between
double sweepout_rho(double t);

struct SweepoutEval {
  double fine_radius_eps = 12.0;  // full-resolution box half-width, in eps units
  long coarse_stride = 1;         // far-field quadrature stride
};

// Energy of the sweepout configuration without materializing it: full-res
// quadrature near a(y), strided far-field quadrature elsewhere. With
// coarse_stride = 1 and a large fine radius this equals
// total_energy(build_sweepout(...)) exactly.
EnergyReport sweepout_energy(const double y[3], const EnergyParams& p, const Grid& grid,
                             const SweepoutEval& ev);

struct WidthScanResult {
  double omega_hat = 0;
  double argmax_y[3] = {0, 0, 0};
  std::vector<std::array<double, 4>> samples;  // y1,y2,y3,energy
};

// max of Y_eps(H(y)) over a deterministic low-discrepancy sample of the ball
WidthScanResult width_scan(const EnergyParams& p, const Grid& grid, int y_samples,
                           const SweepoutEval& ev);

struct GapTrial {
  std::uint64_t seed = 0;
  double amplitude = 0;
  double final_energy = 0;
  long iterations = 0;
  bool trivial = false;
};

struct GapReport {
  std::vector<GapTrial> trials;
  double fraction_trivial = 0;
};

// Random smooth perturbations of the trivial pair at the given normalized
// energy, each relaxed; trivial outcome means final energy < 1e-8.
GapReport gap_probe(const EnergyParams& p, const Grid& grid, double amplitude,
                    int trials, std::uint64_t seed, const FlowParams& fp);

// band-limited random perturbation scaled to the target normalized energy
Configuration random_perturbed_trivial(const EnergyParams& p, const Grid& grid,
                                       double amplitude, std::uint64_t seed);

}  // namespace ymh
