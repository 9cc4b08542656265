#include "ymh/radial.hpp"
#include "ymh/util.hpp"

namespace ymh {

using std::int64_t;

RadialProfile bps_profile(double r_max, int n) {
  if (r_max < 10.0) throw ValidationError("bps_profile: r_max must be >= 10");
  if (n < 1000) throw ValidationError("bps_profile: n must be >= 1000");
  RadialProfile prof;
  double dr = r_max / n;
  prof.r.resize(n);
  prof.H.resize(n);
  prof.K.resize(n);
  for (int j = 0; j < n; ++j) {
    double r = (j + 1) * dr;
    prof.r[j] = r;
    if (r < 1e-2) {
      double r2 = r * r;
      prof.H[j] = r2 / 3.0 - r2 * r2 / 45.0 + 2.0 * r2 * r2 * r2 / 945.0;
      prof.K[j] = 1.0 - r2 / 6.0 + 7.0 * r2 * r2 / 360.0;
    } else {
      prof.H[j] = r / std::tanh(r) - 1.0;
      prof.K[j] = r / std::sinh(r);
    }
  }
  return prof;
}

RadialProfile monopole_seed(double r_max, int n) {
  RadialProfile prof = bps_profile(r_max, n);
  for (std::size_t j = 0; j < prof.r.size(); ++j)
    prof.H[j] = prof.r[j] * std::tanh(prof.r[j]);
  return prof;
}

namespace {

// Cell quadrature in the regular variables u = H/r (odd through r = 0) and K
// (even through r = 0). Cell j spans profile nodes j-1 and j, with node -1
// the r = 0 closure (u = 0, K = 1). Slope terms use the cell difference at
// the midpoint radius; the no-derivative terms use the two node values, which
// all vanish at the closure. Every coefficient stays smooth and bounded
// through the origin, so the exact gradient of this discrete energy is
// O(dr^2)-small at smooth critical profiles, origin cells included.
struct Cell {
  double rc;        // midpoint radius
  double Kp, up;    // cell slopes of K and u = H/r
  double fcl, fcr;  // (1-K^2)^2/r^2 at the nodes (curvature, x eps^2)
  double fgl, fgr;  // 2 u^2 K^2 at the nodes
  double fpl, fpr;  // r^2 (1-u^2)^2 at the nodes (potential, x lambda/4eps^2)
};

Cell cell_at(const RadialProfile& prof, std::size_t j) {
  const double dr = prof.dr();
  auto node = [&](std::ptrdiff_t m, double& r, double& u, double& K) {
    if (m < 0) { r = 0; u = 0; K = 1; return; }
    r = prof.r[m]; u = prof.H[m] / r; K = prof.K[m];
  };
  double r0, u0, K0, r1, u1, K1;
  node((std::ptrdiff_t)j - 1, r0, u0, K0);
  node(j, r1, u1, K1);
  Cell c;
  c.rc = 0.5 * (r0 + r1);
  c.Kp = (K1 - K0) / dr;
  c.up = (u1 - u0) / dr;
  auto zeroth = [](double r, double u, double K, double& fc, double& fg, double& fp) {
    if (r == 0) { fc = fg = fp = 0; return; }
    double omk2 = 1.0 - K * K;
    fc = omk2 * omk2 / (r * r);
    fg = 2.0 * u * u * K * K;
    double om = 1.0 - u * u;
    fp = r * r * om * om;
  };
  zeroth(r0, u0, K0, c.fcl, c.fgl, c.fpl);
  zeroth(r1, u1, K1, c.fcr, c.fgr, c.fpr);
  return c;
}

struct RadialDensityParts {
  std::vector<double> curv, grad, pot;
};

RadialDensityParts radial_density_parts(const RadialProfile& prof, const EnergyParams& p) {
  const std::size_t n = prof.r.size();
  RadialDensityParts out;
  out.curv.resize(n);
  out.grad.resize(n);
  out.pot.resize(n);
  const double e2 = p.epsilon * p.epsilon;
  for (std::size_t j = 0; j < n; ++j) {
    Cell c = cell_at(prof, j);
    out.curv[j] = 4.0 * M_PI * e2 * (2.0 * c.Kp * c.Kp + 0.5 * (c.fcl + c.fcr));
    out.grad[j] = 4.0 * M_PI * (c.rc * c.rc * c.up * c.up + 0.5 * (c.fgl + c.fgr));
    out.pot[j] = 4.0 * M_PI * (p.lambda / (4.0 * e2)) * 0.5 * (c.fpl + c.fpr);
  }
  return out;
}

}  // namespace

std::vector<double> radial_density(const RadialProfile& prof, const EnergyParams& p) {
  RadialDensityParts parts = radial_density_parts(prof, p);
  std::vector<double> e(prof.r.size());
  for (std::size_t j = 0; j < e.size(); ++j)
    e[j] = parts.curv[j] + parts.grad[j] + parts.pot[j];
  return e;
}

EnergyReport radial_energy(const RadialProfile& prof, const EnergyParams& p) {
  RadialDensityParts parts = radial_density_parts(prof, p);
  const double dr = prof.dr();
  const std::size_t n = prof.r.size();
  std::vector<double> tc(n), tg(n), tp(n);
  for (std::size_t j = 0; j < n; ++j) {
    tc[j] = dr * parts.curv[j];
    tg[j] = dr * parts.grad[j];
    tp[j] = dr * parts.pot[j];
  }
  EnergyReport rep;
  rep.epsilon = p.epsilon;
  rep.lambda = p.lambda;
  rep.curvature_term = pairwise_sum(tc);
  rep.gradient_term = pairwise_sum(tg);
  rep.potential_term = pairwise_sum(tp);
  rep.total = rep.curvature_term + rep.gradient_term + rep.potential_term;
  rep.normalized = rep.total / p.epsilon;
  return rep;
}

double radial_tail_estimate(const RadialProfile& prof, const EnergyParams& p) {
  std::vector<double> e = radial_density(prof, p);
  return prof.r_max() * e.back();
}

double radial_bogomolny_defect(const RadialProfile& prof, const EnergyParams& p) {
  const std::size_t n = prof.r.size();
  const double dr = prof.dr();
  std::vector<double> terms(n);
  const double eps = p.epsilon;
  double rl = 0.0, ul = 0.0, Kl = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    double rr = prof.r[j], ur = prof.H[j] / rr, Kr = prof.K[j];
    double rc = 0.5 * (rl + rr), uc = 0.5 * (ul + ur), Kc = 0.5 * (Kl + Kr);
    double Kp = (Kr - Kl) / dr, up = (ur - ul) / dr;
    // perp = eps K'/r + HK/r^2, rad = eps (1-K^2)/r^2 - (H/r)'
    double perp = eps * Kp / rc + uc * Kc / rc;
    double rad = eps * (1.0 - Kc * Kc) / (rc * rc) - up;
    terms[j] = dr * 4.0 * M_PI * rc * rc * (2.0 * perp * perp + rad * rad);
    rl = rr; ul = ur; Kl = Kr;
  }
  return pairwise_sum(terms);
}

namespace {

// exact gradient of the discrete (cell-quadrature) energy wrt profile nodes
void radial_gradient(const RadialProfile& prof, const EnergyParams& p,
                     std::vector<double>& gH, std::vector<double>& gK) {
  const std::size_t n = prof.r.size();
  const double dr = prof.dr();
  const double e2 = p.epsilon * p.epsilon;
  gH.assign(n, 0.0);
  gK.assign(n, 0.0);
  // slope terms: cell j couples profile nodes j-1 and j; dE/dH = (dE/du)/r
  double rprev = 0.0, uprev = 0.0, Kprev = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    double rj = prof.r[j], u = prof.H[j] / rj, K = prof.K[j];
    double rc = 0.5 * (rprev + rj);
    double up = (u - uprev) / dr, Kp = (K - Kprev) / dr;
    double su = 4.0 * M_PI * 2.0 * rc * rc * up;
    double sK = 4.0 * M_PI * 4.0 * e2 * Kp;
    gH[j] += su / rj;
    gK[j] += sK;
    if (j >= 1) {
      gH[j - 1] -= su / rprev;
      gK[j - 1] -= sK;
    }
    rprev = rj; uprev = u; Kprev = K;
  }
  // zeroth-order terms: interior node m carries weight dr (1/2 per incident cell)
  for (std::size_t m = 0; m + 1 < n; ++m) {
    double r = prof.r[m], u = prof.H[m] / r, K = prof.K[m];
    double pK = -4.0 * e2 * K * (1.0 - K * K) / (r * r) + 4.0 * u * u * K;
    double pu = 4.0 * u * K * K - (p.lambda / e2) * r * r * u * (1.0 - u * u);
    gK[m] += 4.0 * M_PI * dr * pK;
    gH[m] += 4.0 * M_PI * dr * pu / r;
  }
  // far-field closure: the last node is fixed
  gH[n - 1] = 0.0;
  gK[n - 1] = 0.0;
}

double radial_total(const RadialProfile& prof, const EnergyParams& p) {
  return radial_energy(prof, p).total;
}

// Thomas solve of (c0 I + tau L) d = g, L the 1-D Dirichlet lattice Laplacian
void precond_solve(std::vector<double>& d, const std::vector<double>& g, double c0,
                   double tau, double dr) {
  const std::size_t n = g.size();
  double diag = c0 + 2.0 * tau / (dr * dr);
  double off = -tau / (dr * dr);
  std::vector<double> cp(n), dp(n);
  cp[0] = off / diag;
  dp[0] = g[0] / diag;
  for (std::size_t i = 1; i < n; ++i) {
    double m = diag - off * cp[i - 1];
    cp[i] = off / m;
    dp[i] = (g[i] - off * dp[i - 1]) / m;
  }
  d.resize(n);
  d[n - 1] = dp[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) d[i] = dp[i] - cp[i] * d[i + 1];
}

}  // namespace

RadialFlowResult radial_relax(const RadialProfile& prof, const EnergyParams& p,
                              const FlowParams& fp) {
  RadialFlowResult res{prof, {}};
  const std::size_t n = prof.r.size();
  const double dr = prof.dr();
  const double norm_c = 1.0 / (4.0 * M_PI * dr);  // node gradient -> L2(dr) density
  double energy = radial_total(res.prof, p);
  double step = fp.step0;
  long iter = 0;
  std::vector<double> gH, gK, dH, dK;
  const double e2 = p.epsilon * p.epsilon;
  while (true) {
    radial_gradient(res.prof, p, gH, gK);
    std::vector<double> nh(n), nk(n);
    for (std::size_t j = 0; j < n; ++j) {
      nh[j] = gH[j] * norm_c;
      nk[j] = gK[j] * norm_c;
    }
    double r2 = 0;
    for (std::size_t j = 0; j + 1 < n; ++j) r2 += dr * (nh[j] * nh[j] + nk[j] * nk[j]);
    double resid = std::sqrt(r2);
    res.trace.final_energy = energy;
    res.trace.final_residual = resid;
    if (iter % fp.log_every == 0 || resid <= fp.tol_residual)
      res.trace.rows.push_back({iter, energy, resid, step});
    if (resid <= fp.tol_residual) break;
    if (iter >= fp.max_iters) {
      res.trace.max_iters_reached = true;
      break;
    }
    // preconditioned direction (same critical points; plain descent bookkeeping)
    precond_solve(dH, nh, 1.0 + 2.0 * p.lambda / e2, 2.0, dr);
    precond_solve(dK, nk, 1.0, 4.0 * e2, dr);
    auto residual_of = [&](const RadialProfile& q) {
      std::vector<double> th, tk;
      radial_gradient(q, p, th, tk);
      double s2 = 0;
      for (std::size_t j = 0; j + 1 < n; ++j) {
        double a = th[j] * norm_c, b = tk[j] * norm_c;
        s2 += dr * (a * a + b * b);
      }
      return std::sqrt(s2);
    };
    bool accepted = false;
    while (step >= fp.min_step) {
      RadialProfile trial = res.prof;
      for (std::size_t j = 0; j + 1 < n; ++j) {
        trial.H[j] -= step * dH[j];
        trial.K[j] -= step * dK[j];
      }
      double e = radial_total(trial, p);
      // near the minimum true decreases drop below the double resolution of
      // the total; allow roundoff-level slack there, gated on residual decay
      bool ok = e <= energy ||
                (e <= energy + 1e-14 * (1.0 + std::fabs(energy)) &&
                 residual_of(trial) < resid);
      if (ok) {
        res.prof = std::move(trial);
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

Configuration hedgehog_to_grid(const RadialProfile& prof, const Grid& grid,
                               double boundary_threshold) {
  const std::size_t n = prof.r.size();
  const double dr = prof.dr();
  // interpolation tables for h(r) = H/r and a(r) = (K-1)/r, regular at 0
  std::vector<double> hf(n + 1), af(n + 1);
  hf[0] = 0.0;
  af[0] = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    hf[j + 1] = prof.H[j] / prof.r[j];
    af[j + 1] = (prof.K[j] - 1.0) / prof.r[j];
  }
  auto interp = [&](const std::vector<double>& t, double r) {
    double u = r / dr;
    std::size_t i0 = (std::size_t)u;
    if (i0 >= n) return t[n];
    double f = u - i0;
    return t[i0] * (1.0 - f) + t[i0 + 1] * f;
  };
  double c[3];
  grid.center(c);
  double rins = 0.5 * std::min({grid.len(0), grid.len(1), grid.len(2)});
  double rcorner = 0.5 * std::sqrt(grid.len(0) * grid.len(0) + grid.len(1) * grid.len(1) +
                                   grid.len(2) * grid.len(2));
  if (rcorner > prof.r_max() + 1e-12)
    throw DomainTooSmall("hedgehog_to_grid: profile does not cover the domain corners");
  if (interp(hf, rins) < boundary_threshold)
    throw DomainTooSmall("hedgehog_to_grid: |Phi| below threshold at the inscribed sphere");
  Configuration cfg(grid);
  for (int64_t k = 0; k < grid.n3; ++k)
    for (int64_t j = 0; j < grid.n2; ++j)
      for (int64_t i = 0; i < grid.n1; ++i) {
        double x[3] = {i * grid.h - c[0], j * grid.h - c[1], k * grid.h - c[2]};
        double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        std::size_t s = grid.idx(i, j, k);
        if (r < 1e-14) continue;  // Phi = 0, A = 0 at the center
        double xh[3] = {x[0] / r, x[1] / r, x[2] / r};
        double h = interp(hf, r), a = interp(af, r);
        cfg.phi.set(s, Su2{h * xh[0], h * xh[1], h * xh[2]});
        cfg.A.set(s, 0, Su2{0, -a * xh[2], a * xh[1]});
        cfg.A.set(s, 1, Su2{a * xh[2], 0, -a * xh[0]});
        cfg.A.set(s, 2, Su2{-a * xh[1], a * xh[0], 0});
      }
  return cfg;
}

}  // namespace ymh
