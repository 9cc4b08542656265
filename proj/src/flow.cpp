#include "ymh/flow.hpp"

namespace ymh {

using std::int64_t;

namespace {

// trial = cfg - s * 2 * residual fields, boundary sites frozen
Configuration step_cfg(const Configuration& cfg, const ElResiduals& r, double s) {
  const Grid& g = cfg.grid;
  Configuration out = cfg;
  const double f = -2.0 * s;
  for (int64_t k = 0; k < g.n3; ++k)
    for (int64_t j = 0; j < g.n2; ++j)
      for (int64_t i = 0; i < g.n1; ++i) {
        if (g.on_boundary(i, j, k)) continue;
        std::size_t ss = g.idx(i, j, k);
        for (int d = 0; d < 3; ++d) out.A.add(ss, d, r.r_A.get(ss, d) * f);
        out.phi.add(ss, r.r_phi.get(ss) * f);
      }
  return out;
}

}  // namespace

FlowResult relax(const Configuration& cfg, const EnergyParams& p, const FlowParams& fp) {
  FlowResult res{cfg, {}};
  double energy = total_energy(res.cfg, p).total;
  double step = fp.step0;
  long iter = 0;
  while (true) {
    ElResiduals r = el_residuals(res.cfg, p);
    res.trace.final_energy = energy;
    res.trace.final_residual = r.norm;
    if (iter % fp.log_every == 0 || r.norm <= fp.tol_residual)
      res.trace.rows.push_back({iter, energy, r.norm, step});
    if (r.norm <= fp.tol_residual) break;
    if (iter >= fp.max_iters) {
      res.trace.max_iters_reached = true;
      break;
    }
    bool accepted = false;
    while (step >= fp.min_step) {
      Configuration trial = step_cfg(res.cfg, r, step);
      double e = total_energy(trial, p).total;
      if (e <= energy) {
        res.cfg = std::move(trial);
        energy = e;
        step *= fp.grow;
        accepted = true;
        break;
      }
      step *= fp.backtrack;
    }
    if (!accepted) {
      res.trace.diverged = true;
      break;
    }
    ++iter;
  }
  res.trace.iterations = iter;
  return res;
}

}  // namespace ymh
