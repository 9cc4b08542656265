#include "ymh/verify.hpp"

#include <cmath>
#include <random>

#include "ymh/energy.hpp"
#include "ymh/flow.hpp"
#include "ymh/gauge.hpp"
#include "ymh/measures.hpp"
#include "ymh/ops.hpp"
#include "ymh/sweepout.hpp"
#include "ymh/util.hpp"

namespace ymh {

using std::int64_t;

namespace {

Su2 random_su2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng), u(rng)};
}

Configuration random_cfg(const Grid& g, std::mt19937_64& rng) {
  Configuration cfg(g);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (auto& v : cfg.A.v) v = u(rng);
  for (auto& v : cfg.phi.v) v = u(rng);
  return cfg;
}

// fixed smooth fields on the unit periodic cube, for refinement studies
Configuration analytic_cfg(int64_t n) {
  Grid g(n, n, n, 1.0 / n, Boundary::Periodic);
  Configuration cfg(g);
  const double tp = 2.0 * M_PI;
  for (int64_t k = 0; k < n; ++k)
    for (int64_t j = 0; j < n; ++j)
      for (int64_t i = 0; i < n; ++i) {
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

GaugeField analytic_gauge(const Grid& g) {
  GaugeField gf(g);
  const double tp = 2.0 * M_PI;
  for (int64_t k = 0; k < g.n3; ++k)
    for (int64_t j = 0; j < g.n2; ++j)
      for (int64_t i = 0; i < g.n1; ++i) {
        double x = (double)i / g.n1, y = (double)j / g.n2, z = (double)k / g.n3;
        Su2 chi{0.30 * std::sin(tp * x + 0.2), 0.25 * std::cos(tp * y + 0.7),
                0.20 * std::sin(tp * z + 1.1)};
        gf.set(g.idx(i, j, k), exp_su2(chi));
      }
  return gf;
}

double l2_pair_one(const OneForm& a, const OneForm& b) {
  PairwiseAcc acc;
  for (std::size_t s = 0; s < a.grid.size(); ++s)
    for (int d = 0; d < 3; ++d) acc.add(inner(a.get(s, d), b.get(s, d)));
  return acc.total();
}

double l2_pair_two(const TwoForm& a, const TwoForm& b) {
  PairwiseAcc acc;
  for (std::size_t s = 0; s < a.grid.size(); ++s)
    for (int pl = 0; pl < 3; ++pl) acc.add(inner(a.get(s, pl), b.get(s, pl)));
  return acc.total();
}

double l2_pair_field(const Su2Field& a, const Su2Field& b) {
  PairwiseAcc acc;
  for (std::size_t s = 0; s < a.grid.size(); ++s) acc.add(inner(a.get(s), b.get(s)));
  return acc.total();
}

}  // namespace

VerifyReport run_verify(std::uint64_t seed) {
  VerifyReport rep;
  std::mt19937_64 rng(seed);
  auto push = [&](const std::string& name, double value, double bound, bool lower) {
    VerifyCheck c;
    c.name = name;
    c.value = value;
    c.bound = bound;
    c.ok = lower ? value >= bound : value <= bound;
    rep.checks.push_back(c);
  };

  // su(2) algebra identities on random triples
  {
    double jac = 0, triple = 0, normid = 0, split_err = 0;
    for (int t = 0; t < 200; ++t) {
      Su2 a = random_su2(rng), b = random_su2(rng), c = random_su2(rng);
      Su2 J = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) +
              bracket(bracket(c, a), b);
      jac = std::max(jac, norm(J));
      triple = std::max(triple, std::fabs(inner(bracket(a, b), c) - inner(a, bracket(b, c))));
      normid = std::max(normid, std::fabs(norm2(bracket(a, b)) + inner(a, b) * inner(a, b) -
                                          norm2(a) * norm2(b)));
      if (norm(b) > 1e-3) {
        SplitResult sp = split_parallel_perp(a, b);
        split_err = std::max(split_err, norm(sp.parallel + sp.perp - a));
        split_err = std::max(split_err, std::fabs(inner(sp.perp, b)));
      }
    }
    push("algebra_jacobi", jac, 1e-12, false);
    push("algebra_triple_product", triple, 1e-12, false);
    push("algebra_norm_identity", normid, 1e-12, false);
    push("algebra_split", split_err, 1e-12, false);
  }

  // adjointness of (d_A, d*_A) and (cov_deriv, codiff_one) on a periodic grid
  {
    Grid g(8, 8, 8, 0.17, Boundary::Periodic);
    Configuration cfg = random_cfg(g, rng);
    OneForm a(g);
    TwoForm F(g);
    Su2Field phi(g);
    OneForm psi(g);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (auto& v : a.v) v = u(rng);
    for (auto& v : F.v) v = u(rng);
    for (auto& v : phi.v) v = u(rng);
    for (auto& v : psi.v) v = u(rng);
    double lhs2 = l2_pair_two(d_A(cfg, a), F);
    double rhs2 = l2_pair_one(a, codiff_two(cfg, F));
    double e2 = std::fabs(lhs2 - rhs2) / std::max(1.0, std::fabs(lhs2));
    double lhs1 = l2_pair_one(cov_deriv_field(cfg, phi), psi);
    double rhs1 = l2_pair_field(phi, codiff_one(cfg, psi));
    double e1 = std::fabs(lhs1 - rhs1) / std::max(1.0, std::fabs(lhs1));
    push("adjoint_dA_codiff2", e2, 1e-11, false);
    push("adjoint_grad_codiff1", e1, 1e-11, false);
  }

  // first variation vs the derivative of the (quartic-in-s) energy
  {
    Grid g(8, 8, 8, 0.13, Boundary::Periodic);
    EnergyParams p(0.5, 1.2);
    double worst = 0;
    for (int t = 0; t < 5; ++t) {
      Configuration cfg = random_cfg(g, rng);
      Perturbation v{OneForm(g), Su2Field(g)};
      std::uniform_real_distribution<double> u(-0.5, 0.5);
      for (auto& x : v.a.v) x = u(rng);
      for (auto& x : v.phi.v) x = u(rng);
      auto at = [&](double s) {
        Configuration c = cfg;
        for (std::size_t i = 0; i < c.A.v.size(); ++i) c.A.v[i] += s * v.a.v[i];
        for (std::size_t i = 0; i < c.phi.v.size(); ++i) c.phi.v[i] += s * v.phi.v[i];
        return total_energy(c, p).total;
      };
      const double s = 1e-2;
      // 5-point rule, exact for quartic polynomials
      double d = (8.0 * (at(s) - at(-s)) - (at(2 * s) - at(-2 * s))) / (12.0 * s);
      double fv = first_variation(cfg, p, v);
      worst = std::max(worst, std::fabs(d - fv) / std::max(1.0, std::fabs(fv)));
    }
    push("first_variation_consistency", worst, 1e-8, false);
  }

  // gauge covariance defect decays at order >= 1.8 under dyadic refinement
  {
    EnergyParams p(0.3, 1.0);
    double d[3];
    int64_t ns[3] = {16, 32, 64};
    for (int m = 0; m < 3; ++m) {
      Configuration cfg = analytic_cfg(ns[m]);
      GaugeField gf = analytic_gauge(cfg.grid);
      double e0 = total_energy(cfg, p).total;
      double e1 = total_energy(apply_gauge(cfg, gf), p).total;
      d[m] = std::fabs(e1 - e0);
    }
    double o1 = std::log2(d[0] / d[1]);
    double o2 = std::log2(d[1] / d[2]);
    push("gauge_covariance_order", std::min(o1, o2), 1.8, true);
  }

  // maximum principle after relaxing an overshoot of the trivial pair
  {
    Grid g(8, 8, 8, 1.0 / 8, Boundary::Periodic);
    EnergyParams p(0.25, 1.0);
    Configuration cfg = random_perturbed_trivial(p, g, 1e-3, seed + 7);
    for (auto& v : cfg.phi.v) v *= 1.03;
    FlowParams fp;
    fp.tol_residual = 1e-7;
    fp.max_iters = 20000;
    FlowResult fr = relax(cfg, p, fp);
    double mx = 0;
    for (std::size_t s = 0; s < g.size(); ++s) mx = std::max(mx, norm(fr.cfg.phi.get(s)));
    push("max_principle_post_flow", mx, 1.0 + 1e-6, false);
  }

  // pointwise Schwarz bound 2|kappa| <= mu and the xi identity, random cfg
  {
    Grid g(10, 10, 10, 0.21, Boundary::Periodic);
    EnergyParams p(0.4, 0.8);
    Configuration cfg = random_cfg(g, rng);
    MeasureField m = measures(cfg, p);
    double viol = 0, scale = 0;
    // kappa = 2<*F, grad Phi>, so this is the bound 2|<*F,grad Phi>| <= mu
    for (std::size_t s = 0; s < g.size(); ++s) {
      viol = std::max(viol, std::fabs(m.kappa[s]) - m.mu[s]);
      scale = std::max(scale, m.mu[s]);
    }
    push("measure_bound_kappa_le_mu", viol / std::max(1.0, scale), 1e-13, false);
    ScalarField xi1 = diagnostic_xi(cfg, p);
    ScalarField xi2 = diagnostic_xi_definition(cfg, p);
    double xe = 0;
    for (std::size_t s = 0; s < g.size(); ++s)
      xe = std::max(xe, std::fabs(xi1[s] - xi2[s]));
    push("xi_identity", xe / std::max(1.0, scale / p.epsilon), 1e-12, false);
  }

  // Hodge split of a band-limited 1-form: reconstruction and orthogonality
  {
    Grid g(16, 16, 16, 0.19, Boundary::Periodic);
    std::array<ScalarField, 3> omega;
    std::uniform_int_distribution<int> mi(-3, 3);
    std::uniform_real_distribution<double> ur(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> ua(-1.0, 1.0);
    for (int a = 0; a < 3; ++a) {
      omega[a] = ScalarField(g);
      double c0 = ua(rng);
      struct Mode { int m[3]; double amp, ph; };
      std::vector<Mode> modes;
      for (int t = 0; t < 5; ++t)
        modes.push_back({{mi(rng), mi(rng), mi(rng)}, ua(rng), ur(rng)});
      for (int64_t k = 0; k < g.n3; ++k)
        for (int64_t j = 0; j < g.n2; ++j)
          for (int64_t i = 0; i < g.n1; ++i) {
            double v = c0;
            for (const auto& md : modes)
              v += md.amp * std::sin(2.0 * M_PI *
                                         (md.m[0] * (double)i / g.n1 +
                                          md.m[1] * (double)j / g.n2 +
                                          md.m[2] * (double)k / g.n3) +
                                     md.ph);
            omega[a][g.idx(i, j, k)] = v;
          }
    }
    HodgeSplit hs = hodge_decompose(g, omega);
    double rec = 0, nrm = 0, o_hd = 0, o_ha = 0, o_da = 0, n_h = 0, n_d = 0, n_a = 0;
    for (int a = 0; a < 3; ++a)
      for (std::size_t s = 0; s < g.size(); ++s) {
        double w = omega[a][s];
        double r = w - (hs.h[a] + hs.df[a][s] + hs.dstar_alpha[a][s]);
        rec += r * r;
        nrm += w * w;
        o_hd += hs.h[a] * hs.df[a][s];
        o_ha += hs.h[a] * hs.dstar_alpha[a][s];
        o_da += hs.df[a][s] * hs.dstar_alpha[a][s];
        n_h += hs.h[a] * hs.h[a];
        n_d += hs.df[a][s] * hs.df[a][s];
        n_a += hs.dstar_alpha[a][s] * hs.dstar_alpha[a][s];
      }
    double rel_rec = std::sqrt(rec / std::max(1e-300, nrm));
    double orth = std::max({std::fabs(o_hd) / std::max(1e-300, std::sqrt(n_h * n_d)),
                            std::fabs(o_ha) / std::max(1e-300, std::sqrt(n_h * n_a)),
                            std::fabs(o_da) / std::max(1e-300, std::sqrt(n_d * n_a))});
    push("hodge_reconstruction", rel_rec, 1e-10, false);
    push("hodge_orthogonality", orth, 1e-10, false);
  }

  // reducible flux pair: exact solution, unit Higgs, vanishing kappa
  {
    Grid g(16, 16, 16, 0.125, Boundary::Periodic, 1);
    EnergyParams p(0.5, 1.0);
    Configuration cfg = reducible_pair(g);
    ElResiduals r = el_residuals(cfg, p);
    push("reducible_el_residual", r.norm, 1e-10, false);
    OneForm gp = cov_deriv(cfg);
    double gmax = 0, pmax = 0;
    for (std::size_t s = 0; s < g.size(); ++s) {
      for (int d = 0; d < 3; ++d) gmax = std::max(gmax, norm(gp.get(s, d)));
      pmax = std::max(pmax, std::fabs(norm(cfg.phi.get(s)) - 1.0));
    }
    push("reducible_grad_phi_zero", gmax, 1e-12, false);
    push("reducible_unit_higgs", pmax, 0.0, false);
    MeasureField m = measures(cfg, p);
    double kmax = 0;
    for (std::size_t s = 0; s < g.size(); ++s) kmax = std::max(kmax, std::fabs(m.kappa[s]));
    push("reducible_kappa_zero", kmax, 1e-12, false);
  }

  return rep;
}

}  // namespace ymh
