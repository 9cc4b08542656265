#pragma once
#include <array>
#include "ymh/fields.hpp"

namespace ymh {

// Spectral solves on untwisted periodic grids, using the Fourier multipliers
// of the centered first difference D_a = i sin(k_a h)/h so the results are
// exact inverses of the lattice operators. Modes annihilated by every D_a
// (k_a in {0, n_a/2}) are projected out.

// Solve (d* d) u = src; the src mean (and other kernel modes) are dropped.
ScalarField poisson_centered(const ScalarField& src);

struct HodgeSplit {
  double h[3] = {0, 0, 0};            // constant (harmonic) 1-form
  ScalarField f;                      // potential of the exact part
  std::array<ScalarField, 3> alpha;   // 2-form (xy, yz, zx)
  // realized parts, for reconstruction/orthogonality checks
  std::array<ScalarField, 3> df;
  std::array<ScalarField, 3> dstar_alpha;
};

// omega = h + df + d*alpha for a real 1-form omega (3 scalar components)
HodgeSplit hodge_decompose(const Grid& g, const std::array<ScalarField, 3>& omega);

}  // namespace ymh
