#pragma once
#include <string>
#include <utility>
#include "ymh/fields.hpp"

namespace ymh {

// Bit-exact "YMH1" snapshot: magic, int64 LE n1,n2,n3,twist_n,boundary(0/1),
// f64 LE h, eps, lambda, then A (site-major, 3 dirs x 3 coeffs) and Phi.
void save_snapshot(const Configuration& cfg, const EnergyParams& p,
                   const std::string& path);
std::pair<Configuration, EnergyParams> load_snapshot(const std::string& path);

}  // namespace ymh
