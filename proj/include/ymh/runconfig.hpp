#pragma once
#include <cstdint>
#include <string>
#include "ymh/fields.hpp"
#include "ymh/flow.hpp"

namespace ymh {

// Line-based `key = value` run configuration shared by all subcommands.
// Unknown keys are rejected; see kConfigKeys in runconfig.cpp.
struct RunConfig {
  // lattice
  std::int64_t n1 = 32, n2 = 32, n3 = 32;
  double h = 0.0625;
  std::string boundary = "periodic";  // or "dirichlet"
  std::int64_t twist_n = 0;
  // functional
  double epsilon = 0.1, lambda = 1.0;
  // flow
  double step0 = 1e-3, tol_residual = 1e-6, backtrack = 0.5;
  std::int64_t max_iters = 100000;
  // run plumbing
  std::uint64_t seed = 0;
  std::int64_t threads = 0;  // 0 = flag/env/default
  std::string snapshot_in, snapshot_out;
  // sweepout / width scan
  double y1 = 0, y2 = 0, y3 = 0;
  std::int64_t y_samples = 32;
  double fine_radius_eps = 12.0;
  std::int64_t coarse_stride = 4;
  // radial / bps
  double r_max = 20.0;
  std::int64_t n_r = 4000;
  // charge / bubbling
  double radius = 0.0;  // 0 = half the inscribed radius
  std::int64_t level = 4;
  double ball_r_eps = 10.0;
  double eta_star = 1.0;
  // gap probe
  double amplitude = 1e-3;
  std::int64_t trials = 20;

  Grid make_grid() const;
  EnergyParams make_params() const;
  FlowParams make_flow() const;
  bool operator==(const RunConfig&) const = default;
};

RunConfig parse_config(const std::string& text);
std::string emit_config(const RunConfig& rc);

}  // namespace ymh
