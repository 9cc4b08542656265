// Acceptance gate: one line per criterion, nonzero exit if any fail.
// Geometries are sized for a single core; see README for unit conventions.
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <ctime>
#include <random>
#include <string>
#include <vector>

#include "ymh/energy.hpp"
#include "ymh/flow.hpp"
#include "ymh/gauge.hpp"
#include "ymh/measures.hpp"
#include "ymh/ops.hpp"
#include "ymh/radial.hpp"
#include "ymh/sweepout.hpp"
#include "ymh/verify.hpp"

using namespace ymh;

namespace {

int g_failures = 0;

struct Timer {
  clock_t t0 = clock();
  double secs() const { return (double)(clock() - t0) / CLOCKS_PER_SEC; }
};

void report(int num, const char* name, bool ok, const std::string& detail, double secs) {
  std::printf("[%s] %2d %-24s %s  time=%.1fs\n", ok ? "PASS" : "FAIL", num, name,
              detail.c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

Configuration random_periodic_cfg(const Grid& g, std::uint64_t seed) {
  Configuration cfg(g);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (auto& v : cfg.A.v) v = u(rng);
  for (auto& v : cfg.phi.v) v = u(rng);
  return cfg;
}

// 1. reduced BPS energy with tail completion hits 8 pi within 1%
void c1_bps_energy() {
  Timer t;
  EnergyParams p(1.0, 0.0);
  RadialProfile prof = bps_profile(20.0, 4000);
  double total = radial_energy(prof, p).total + radial_tail_estimate(prof, p);
  double rel = std::fabs(total - 8.0 * M_PI) / (8.0 * M_PI);
  report(1, "bps_energy", rel <= 0.01,
         fmt("value=%.6f target=%.6f rel_err=%.2e bound=1e-2", total, 8.0 * M_PI, rel),
         t.secs());
}

// 2. Bogomolny defect: tiny for the reduced profile and for its 3-D lift
void c2_bogomolny_defect() {
  Timer t;
  EnergyParams p(1.0, 0.0);
  RadialProfile prof = bps_profile(20.0, 4000);
  double d1 = radial_bogomolny_defect(prof, p) / radial_energy(prof, p).total;

  // h = eps/8 on a 96^3 window; profile covers the cube corners
  Grid g(96, 96, 96, 0.125, Boundary::Dirichlet);
  Configuration cfg = hedgehog_to_grid(bps_profile(12.0, 2400), g, 0.8);
  BogomolnySplit bs = bogomolny_split(cfg, p, +1);
  double d3 = bs.defect / (bs.topological + bs.defect + bs.potential);

  report(2, "bogomolny_defect", d1 < 1e-3 && d3 < 0.01,
         fmt("reduced=%.2e bound=1e-3, lifted=%.2e bound=1e-2", d1, d3), t.secs());
}

// 3. volume and degree charge estimators agree near 1 for a large BPS lift
void c3_charge() {
  Timer t;
  EnergyParams p(1.0, 0.0);
  const std::int64_t n = 239;
  const double h = 0.4375;
  Grid g(n, n, n, h, Boundary::Dirichlet);
  double insc = 0.5 * (double)(n - 1) * h;
  RadialProfile prof = bps_profile(std::ceil(insc * std::sqrt(3.0)) + 1.0, 4000);
  Configuration cfg = hedgehog_to_grid(prof, g, 0.7);
  double c[3];
  g.center(c);
  double kv = charge_volume(cfg, p, Region::ball(c[0], c[1], c[2], insc));
  double kd = charge_degree(cfg, c, insc, 4);
  bool ok = kv >= 0.95 && kv <= 1.05 && kd >= 0.95 && kd <= 1.05 &&
            std::fabs(kv - kd) <= 0.03 && std::fabs(kd - 1.0) <= 0.01;
  report(3, "charge", ok,
         fmt("volume=%.4f degree=%.4f band=[0.95,1.05] |v-d|=%.4f bound=0.03", kv, kd,
             std::fabs(kv - kd)),
         t.secs());
}

// 4. lambda > 0 critical profile converges strictly above the topological bound
void c4_lambda_excess() {
  Timer t;
  FlowParams fp;
  fp.tol_residual = 1e-6;
  fp.max_iters = 20000;
  RadialFlowResult res = radial_relax(monopole_seed(20.0, 4000), EnergyParams(1.0, 1.0), fp);
  bool ok = !res.trace.max_iters_reached && !res.trace.diverged &&
            res.trace.final_residual < 1e-6 &&
            res.trace.final_energy > 8.0 * M_PI + 0.1;
  report(4, "lambda_excess", ok,
         fmt("energy=%.4f bound=%.4f residual=%.2e bound=1e-6", res.trace.final_energy,
             8.0 * M_PI + 0.1, res.trace.final_residual),
         t.secs());
}

// 5. sweepout width scales like eps: max_y Y(H(y))/eps stable across eps
void c5_width_scaling() {
  Timer t;
  double ratios[3];
  int m_list[3] = {16, 32, 64};
  for (int q = 0; q < 3; ++q) {
    double eps = 1.0 / m_list[q], h = eps / 8.0;
    std::int64_t n = (std::int64_t)std::llround(2.0 / h) + 1;
    Grid g(n, n, n, h, Boundary::Dirichlet);
    SweepoutEval ev;
    ev.fine_radius_eps = 12.0;
    ev.coarse_stride = std::max<std::int64_t>(1, n / 64);
    WidthScanResult w = width_scan(EnergyParams(eps, 1.0), g, 100, ev);
    ratios[q] = w.omega_hat / eps;
  }
  double lo = std::min({ratios[0], ratios[1], ratios[2]});
  double hi = std::max({ratios[0], ratios[1], ratios[2]});
  report(5, "width_scaling", hi <= 1.25 * lo,
         fmt("omega/eps={%.3f,%.3f,%.3f} spread=%.3f bound=1.25", ratios[0], ratios[1],
             ratios[2], hi / lo),
         t.secs());
}

// 6. dyadic zoom preserves normalized ball energies to rounding
void c6_rescale_exact() {
  Timer t;
  Grid g(16, 16, 16, 0.25, Boundary::Periodic);
  EnergyParams p(0.5, 1.0);
  double c[3] = {8 * g.h, 8 * g.h, 8 * g.h};
  const double r = 0.9;  // off-lattice: no site sits exactly on the sphere
  double ts[5] = {2.0, 4.0, 0.5, 2.0, 4.0};
  double worst = 0;
  for (int s = 0; s < 5; ++s) {
    Configuration cfg = random_periodic_cfg(g, 100 + (std::uint64_t)s);
    double base = integrate(energy_density(cfg, p), Region::ball(c[0], c[1], c[2], r)) /
                  p.epsilon;
    RescaleResult rr = rescale(cfg, p, c, ts[s]);
    double cc[3];
    rr.cfg.grid.center(cc);
    double zoomed = integrate(energy_density(rr.cfg, rr.p),
                              Region::ball(cc[0], cc[1], cc[2], r / ts[s])) /
                    rr.p.epsilon;
    worst = std::max(worst, std::fabs(zoomed - base) / std::fabs(base));
  }
  report(6, "rescale_exact", worst <= 1e-12,
         fmt("worst_rel_err=%.2e bound=1e-12 (5 configs, t in {2,4,1/2})", worst), t.secs());
}

// 7. stress-tensor balance for the BPS lift at r = 2 and r = 4
void c7_conservation() {
  Timer t;
  EnergyParams p(1.0, 0.0);
  Grid g(91, 91, 91, 0.1, Boundary::Dirichlet);
  Configuration cfg = hedgehog_to_grid(bps_profile(10.0, 8000), g, 0.7);
  double c[3];
  g.center(c);
  std::vector<ConservationRow> rows = conservation_check(cfg, p, c, {2.0, 4.0});
  bool ok = true;
  std::string detail;
  for (const auto& row : rows) {
    double scale = std::max({std::fabs(row.lhs), std::fabs(row.rhs), 1.0});
    double rel = std::fabs(row.lhs - row.rhs) / scale;
    ok = ok && rel <= 0.02;
    detail += fmt("r=%.0f rel=%.4f ", row.r, rel);
  }
  report(7, "conservation", ok, detail + "bound=0.02", t.secs());
}

// 8. reducible pair: exactly critical, abelian, unit Higgs, vanishing kappa
void c8_reducible() {
  Timer t;
  Grid g(16, 16, 8, 1.0 / 16, Boundary::Periodic, 1);
  Configuration red = reducible_pair(g);
  EnergyParams p(0.5, 1.0);
  double resid = el_residuals(red, p).norm;

  OneForm gp = cov_deriv(red);
  TwoForm F = curvature(red);
  bool exact = true;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (std::fabs(norm2(red.phi.get(s)) - 1.0) != 0.0) exact = false;
    for (int a = 0; a < 3; ++a) {
      if (norm(gp.get(s, a)) != 0.0) exact = false;
      Su2 f = F.get(s, a);
      Su2 proj = inner(f, red.phi.get(s)) * red.phi.get(s);
      if (norm(f - proj) != 0.0) exact = false;
    }
  }
  MeasureField m = measures(red, p);
  double kmax = 0;
  for (double v : m.kappa.v) kmax = std::max(kmax, std::fabs(v));

  bool ok = resid <= 1e-10 && exact && kmax == 0.0;
  report(8, "reducible", ok,
         fmt("residual=%.2e bound=1e-10 exact_ids=%d max|kappa|=%.1e", resid, (int)exact,
             kmax),
         t.secs());
}

// 9. vacuum stability: 20 small random perturbations all flow back to zero
void c9_gap_probe() {
  Timer t;
  Grid g(8, 8, 8, 1.0 / 8, Boundary::Periodic);
  EnergyParams p(1.0 / 32, 1.0);
  FlowParams fp;
  fp.tol_residual = 3e-8;
  fp.max_iters = 2000000;
  fp.log_every = 1000;
  GapReport rep = gap_probe(p, g, 0.1, 20, 1, fp);
  double emax = 0;
  for (const auto& tr : rep.trials) emax = std::max(emax, tr.final_energy);
  report(9, "gap_probe", rep.fraction_trivial == 1.0 && emax < 1e-8,
         fmt("trivial=%d/20 max_final_energy=%.2e bound=1e-8",
             (int)std::lround(rep.fraction_trivial * 20), emax),
         t.secs());
}

// 10. invariant suite: zero failures
void c10_verify() {
  Timer t;
  VerifyReport rep = run_verify(1);
  int bad = 0;
  std::string names;
  for (const auto& chk : rep.checks)
    if (!chk.ok) {
      ++bad;
      names += chk.name + " ";
    }
  report(10, "verify_suite", rep.all_ok(),
         fmt("checks=%zu failures=%d %s", rep.checks.size(), bad, names.c_str()), t.secs());
}

// 11. concentration bookkeeping for a single monopole in a 64-eps cube
void c11_concentration() {
  Timer t;
  EnergyParams p(1.0, 10.0);
  FlowParams fp;
  fp.tol_residual = 1e-7;
  fp.max_iters = 200000;
  RadialFlowResult rr = radial_relax(monopole_seed(57.0, 5700), p, fp);

  Grid g(161, 161, 161, 0.4, Boundary::Dirichlet);
  Configuration cfg = hedgehog_to_grid(rr.prof, g, 0.7);
  double c[3];
  g.center(c);
  ScalarField dens = energy_density(cfg, p);
  double etot = integrate(dens, Region::all());
  double e20 = integrate(dens, Region::ball(c[0], c[1], c[2], 20.0));
  double frac = e20 / etot;

  MeasureField m = measures(cfg, p);
  ConcentrationReport rep = detect_concentration(m, 20.0, 0.5 * etot / p.epsilon);
  bool one_point = rep.points.size() == 1;
  double theta_rel = one_point
      ? std::fabs(rep.points[0].theta_hat - etot / p.epsilon) / (etot / p.epsilon)
      : 1.0;

  // exponential decay of 1 - |Phi| along the +x ray, r in [5, 15]
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  int npts = 0;
  std::int64_t jmid = g.n2 / 2, kmid = g.n3 / 2;
  for (double r = 5.0; r <= 15.0 + 1e-9; r += g.h) {
    std::int64_t i = (std::int64_t)std::llround((c[0] + r) / g.h);
    double w = 1.0 - norm(cfg.phi.get(g.idx(i, jmid, kmid)));
    if (w <= 0) continue;
    double y = std::log(w);
    sx += r; sy += y; sxx += r * r; sxy += r * y; syy += y * y;
    ++npts;
  }
  double nn = npts;
  double cov = sxy - sx * sy / nn, vx = sxx - sx * sx / nn, vy = syy - sy * sy / nn;
  double r2 = cov * cov / (vx * vy);

  bool ok = frac >= 0.99 && one_point && theta_rel <= 0.10 && r2 >= 0.98;
  report(11, "concentration", ok,
         fmt("ball_frac=%.4f bound=0.99 points=%zu theta_rel=%.3f bound=0.1 R2=%.4f "
             "bound=0.98",
             frac, rep.points.size(), theta_rel, r2),
         t.secs());
}

}  // namespace

int main() {
  c1_bps_energy();
  c2_bogomolny_defect();
  c3_charge();
  c4_lambda_excess();
  c5_width_scaling();
  c6_rescale_exact();
  c7_conservation();
  c8_reducible();
  c9_gap_probe();
  c10_verify();
  c11_concentration();
  std::printf("%s: %d of 11 criteria failed\n", g_failures ? "FAIL" : "PASS", g_failures);
  return g_failures ? 1 : 0;
}
