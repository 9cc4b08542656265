#pragma once
#include <cmath>
#include <cstdint>
#include <random>
#include "ymh/fields.hpp"
#include "ymh/gauge.hpp"

namespace ymh::test {

inline Su2 random_su2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng), u(rng)};
}

inline Configuration random_cfg(const Grid& g, std::mt19937_64& rng, double scale = 0.5) {
  Configuration cfg(g);
  std::uniform_real_distribution<double> u(-scale, scale);
  for (auto& v : cfg.A.v) v = u(rng);
  for (auto& v : cfg.phi.v) v = u(rng);
  return cfg;
}

// fixed smooth fields on the unit periodic cube, for refinement studies
inline Configuration analytic_cfg(std::int64_t n) {
  Grid g(n, n, n, 1.0 / n, Boundary::Periodic);
  Configuration cfg(g);
  const double tp = 2.0 * M_PI;
  for (std::int64_t k = 0; k < n; ++k)
    for (std::int64_t j = 0; j < n; ++j)
      for (std::int64_t i = 0; i < n; ++i) {
        double x = (double)i / n, y = (double)j / n, z = (double)k / n;
        std::size_t s = g.idx(i, j, k);
        cfg.phi.set(s, {0.4 * std::sin(tp * x) * std::cos(tp * y),
                        0.3 * std::sin(tp * y + 1.0) * std::cos(tp * z),
                        0.7 + 0.2 * std::cos(tp * z) * std::sin(tp * x)});
        cfg.A.set(s, 0, {0.20 * std::cos(tp * y), 0.10 * std::sin(tp * z),
                         0.15 * std::sin(tp * x + 0.5)});
        cfg.A.set(s, 1, {0.10 * std::sin(tp * z + 0.3), 0.20 * std::cos(tp * x),
                         0.05 * std::sin(tp * y)});
        cfg.A.set(s, 2, {0.12 * std::cos(tp * x + 1.0), 0.08 * std::sin(tp * y + 2.0),
                         0.20 * std::cos(tp * z)});
      }
  return cfg;
}

inline GaugeField analytic_gauge(const Grid& g) {
  GaugeField gf(g);
  const double tp = 2.0 * M_PI;
  for (std::int64_t k = 0; k < g.n3; ++k)
    for (std::int64_t j = 0; j < g.n2; ++j)
      for (std::int64_t i = 0; i < g.n1; ++i) {
        double x = (double)i / g.n1, y = (double)j / g.n2, z = (double)k / g.n3;
        Su2 chi{0.30 * std::sin(tp * x + 0.2), 0.25 * std::cos(tp * y + 0.7),
                0.20 * std::sin(tp * z + 1.1)};
        gf.set(g.idx(i, j, k), exp_su2(chi));
      }
  return gf;
}

// constant unit-Higgs vacuum: A = 0, Phi = T3
inline Configuration trivial_pair(const Grid& g) {
  Configuration cfg(g);
  for (std::size_t s = 0; s < g.size(); ++s) cfg.phi.set(s, {0, 0, 1});
  return cfg;
}

}  // namespace ymh::test
