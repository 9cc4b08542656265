#pragma once
#include <vector>
#include "ymh/energy.hpp"
#include "ymh/fields.hpp"

namespace ymh {

struct FlowParams {
  double step0 = 1e-3;
  double tol_residual = 1e-6;
  long max_iters = 100000;
  double backtrack = 0.5;
  // extras (defaults preserve plain behavior)
  double grow = 1.3;        // step growth after an accepted step
  double min_step = 1e-18;  // below this a failed step means divergence
  long log_every = 1;       // trace row cadence
};

struct FlowTraceRow {
  long iter;
  double energy, residual, step;
};

struct FlowTrace {
  std::vector<FlowTraceRow> rows;
  long iterations = 0;
  double final_energy = 0, final_residual = 0;
  bool max_iters_reached = false;
  bool diverged = false;
};

struct FlowResult {
  Configuration cfg;
  FlowTrace trace;
};

// Explicit gradient descent with backtracking on the discrete energy.
// Gradient fields are 2x the Euler-Lagrange residuals; Dirichlet boundary
// sites stay frozen. Energy is non-increasing across accepted steps.
FlowResult relax(const Configuration& cfg, const EnergyParams& p, const FlowParams& fp);

}  // namespace ymh
