#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace ymh {

struct VerifyCheck {
  std::string name;
  bool ok = false;
  double value = 0;  // measured error / order
  double bound = 0;  // pass threshold (order checks: lower bound)
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

// The invariant suite behind the `verify` subcommand: algebra identities,
// adjointness, variational consistency, gauge covariance order, maximum
// principle after flow, measure bound, Hodge reconstruction, reducible pair.
VerifyReport run_verify(std::uint64_t seed = 1);

}  // namespace ymh
