#include "ymh/sweepout.hpp"
#include "ymh/util.hpp"
#include <random>

namespace ymh {

using std::int64_t;

double sweepout_rho(double t) {
  const double a = 2.0 / 3.0;
  if (t <= a) return t;
  if (t >= 1.0) return 1.0;
  double u = (t - a) * 3.0;  // in [0,1]
  double h00 = (2 * u - 3) * u * u + 1;
  double h10 = ((u - 2) * u + 1) * u;
  double h01 = (3 - 2 * u) * u * u;
  // y0=2/3, y1=1, m0=1, m1=0, interval length 1/3; rho' in [0, 4/3]
  return a * h00 + (1.0 / 3.0) * h10 + h01;
}

namespace {

// R((x-a)/eps) as su(2) coefficients
inline Su2 sweepout_phi(const double x[3], const double a[3], double eps) {
  double v[3] = {(x[0] - a[0]) / eps, (x[1] - a[1]) / eps, (x[2] - a[2]) / eps};
  double t = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (t < 1e-300) return {0, 0, 0};
  double f = sweepout_rho(t) / t;
  return {v[0] * f, v[1] * f, v[2] * f};
}

bool boundary_y(const double y[3], double yn) { return yn >= 1.0 - 1e-12; }

double ynorm(const double y[3]) {
  return std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2]);
}

// a(y) in internal grid coordinates
void a_internal(const double y[3], const Grid& g, double out[3]) {
  double c[3];
  g.center(c);
  double yn = ynorm(y);
  double f = -1.0 / (1.0 - yn);
  for (int d = 0; d < 3; ++d) out[d] = y[d] * f + c[d];
}

}  // namespace

Configuration build_sweepout(const double y[3], const EnergyParams& p, const Grid& grid) {
  if (grid.boundary != Boundary::Dirichlet)
    throw ValidationError("build_sweepout: Dirichlet cube required");
  Configuration cfg(grid);
  double yn = ynorm(y);
  if (yn > 1.0 + 1e-12) throw ValidationError("build_sweepout: |y| must be <= 1");
  if (boundary_y(y, yn)) {
    for (std::size_t s = 0; s < grid.size(); ++s) cfg.phi.set(s, Su2{y[0], y[1], y[2]});
    return cfg;  // the constant pair (0, y)
  }
  double a[3];
  a_internal(y, grid, a);
  for (int64_t k = 0; k < grid.n3; ++k)
    for (int64_t j = 0; j < grid.n2; ++j)
      for (int64_t i = 0; i < grid.n1; ++i) {
        double x[3] = {i * grid.h, j * grid.h, k * grid.h};
        cfg.phi.set(grid.idx(i, j, k), sweepout_phi(x, a, p.epsilon));
      }
  // A = [d Phi, Phi] with the plain (A=0) centered differences
  Configuration zero(grid);
  zero.phi = cfg.phi;
  OneForm dphi = cov_deriv(zero);
  for (std::size_t s = 0; s < grid.size(); ++s) {
    Su2 ph = cfg.phi.get(s);
    for (int d = 0; d < 3; ++d) cfg.A.set(s, d, bracket(dphi.get(s, d), ph));
  }
  return cfg;
}

namespace {

// Evaluate the three energy components of the analytic sweepout family over a
// stride-sigma sub-lattice, counting only sites accepted by `owns`, without
// materializing a Configuration. Stencils use lattice spacing sigma*h with
// one-sided differences where the lattice ends (which for sigma = 1 is
// exactly the grid face), so the sigma = 1 full-range evaluation reproduces
// total_energy(build_sweepout(...)) bit-for-bit up to summation order.
struct PassResult {
  double curv = 0, grad = 0, pot = 0;
};

template <class Owns>
PassResult sweepout_pass(const double a[3], const EnergyParams& p, const Grid& g,
                         int64_t sigma, const int64_t mlo[3], const int64_t mhi[3],
                         Owns&& owns) {
  PassResult out;
  if (mlo[0] > mhi[0] || mlo[1] > mhi[1] || mlo[2] > mhi[2]) return out;
  // extended lattice ranges (phi: owned +-2, A: owned +-1), clamped to grid
  int64_t n[3] = {g.n1, g.n2, g.n3};
  int64_t plo[3], phi_hi[3], alo[3], ahi[3];
  for (int d = 0; d < 3; ++d) {
    auto clamp_lo = [&](int64_t m) { return std::max(m, (int64_t)0); };
    auto clamp_hi = [&](int64_t m) {
      int64_t mmax = (n[d] - 1) / sigma;
      return std::min(m, mmax);
    };
    plo[d] = clamp_lo(mlo[d] - 2);
    phi_hi[d] = clamp_hi(mhi[d] + 2);
    alo[d] = clamp_lo(mlo[d] - 1);
    ahi[d] = clamp_hi(mhi[d] + 1);
  }
  const double hs = sigma * g.h;
  const double inv2h = 0.5 / hs;
  auto count = [](const int64_t lo[3], const int64_t hi[3], int d) {
    return hi[d] - lo[d] + 1;
  };
  const int64_t pn[3] = {count(plo, phi_hi, 0), count(plo, phi_hi, 1), count(plo, phi_hi, 2)};
  const int64_t an[3] = {count(alo, ahi, 0), count(alo, ahi, 1), count(alo, ahi, 2)};
  std::vector<double> phi(3 * pn[0] * pn[1] * pn[2]);
  std::vector<double> A(9 * an[0] * an[1] * an[2]);
  auto pidx = [&](int64_t mi, int64_t mj, int64_t mk) {
    return ((mk - plo[2]) * pn[1] + (mj - plo[1])) * pn[0] + (mi - plo[0]);
  };
  auto aidx = [&](int64_t mi, int64_t mj, int64_t mk) {
    return ((mk - alo[2]) * an[1] + (mj - alo[1])) * an[0] + (mi - alo[0]);
  };
  auto phi_get = [&](int64_t mi, int64_t mj, int64_t mk) {
    std::size_t o = 3 * (std::size_t)pidx(mi, mj, mk);
    return Su2{phi[o], phi[o + 1], phi[o + 2]};
  };
  for (int64_t mk = plo[2]; mk <= phi_hi[2]; ++mk)
    for (int64_t mj = plo[1]; mj <= phi_hi[1]; ++mj)
      for (int64_t mi = plo[0]; mi <= phi_hi[0]; ++mi) {
        double x[3] = {mi * sigma * g.h, mj * sigma * g.h, mk * sigma * g.h};
        Su2 v = sweepout_phi(x, a, p.epsilon);
        std::size_t o = 3 * (std::size_t)pidx(mi, mj, mk);
        phi[o] = v.c1; phi[o + 1] = v.c2; phi[o + 2] = v.c3;
      }
  // derivative of a lattice-sampled su2 function, one-sided at lattice ends
  auto lat_deriv = [&](auto&& get, int64_t m[3], int axis, const int64_t lo[3],
                       const int64_t hi[3]) {
    int64_t mm[3] = {m[0], m[1], m[2]};
    auto at = [&](int64_t s) {
      mm[axis] = m[axis] + s;
      Su2 v = get(mm[0], mm[1], mm[2]);
      mm[axis] = m[axis];
      return v;
    };
    if (m[axis] - 1 < lo[axis]) return (at(0) * -3.0 + at(1) * 4.0 - at(2)) * inv2h;
    if (m[axis] + 1 > hi[axis]) return (at(0) * 3.0 - at(-1) * 4.0 + at(-2)) * inv2h;
    return (at(1) - at(-1)) * inv2h;
  };
  for (int64_t mk = alo[2]; mk <= ahi[2]; ++mk)
    for (int64_t mj = alo[1]; mj <= ahi[1]; ++mj)
      for (int64_t mi = alo[0]; mi <= ahi[0]; ++mi) {
        int64_t m[3] = {mi, mj, mk};
        Su2 ph = phi_get(mi, mj, mk);
        std::size_t o = 9 * (std::size_t)aidx(mi, mj, mk);
        for (int d = 0; d < 3; ++d) {
          Su2 dp = lat_deriv(phi_get, m, d, plo, phi_hi);
          Su2 ad = bracket(dp, ph);
          A[o + 3 * d] = ad.c1; A[o + 3 * d + 1] = ad.c2; A[o + 3 * d + 2] = ad.c3;
        }
      }
  auto A_get = [&](int d) {
    return [&, d](int64_t mi, int64_t mj, int64_t mk) {
      std::size_t o = 9 * (std::size_t)aidx(mi, mj, mk) + 3 * (std::size_t)d;
      return Su2{A[o], A[o + 1], A[o + 2]};
    };
  };
  const double e2 = p.epsilon * p.epsilon;
  const double pc = p.lambda / (4.0 * e2);
  const double w3 = hs * hs * hs;
  std::vector<double> tc, tg, tp;
  static const int pa[3] = {0, 1, 2}, pb[3] = {1, 2, 0};
  for (int64_t mk = mlo[2]; mk <= mhi[2]; ++mk)
    for (int64_t mj = mlo[1]; mj <= mhi[1]; ++mj)
      for (int64_t mi = mlo[0]; mi <= mhi[0]; ++mi) {
        double x[3] = {mi * sigma * g.h, mj * sigma * g.h, mk * sigma * g.h};
        if (!owns(x)) continue;
        int64_t m[3] = {mi, mj, mk};
        Su2 ph = phi_get(mi, mj, mk);
        double curv = 0, grad = 0;
        for (int pl = 0; pl < 3; ++pl) {
          int u = pa[pl], v = pb[pl];
          Su2 f = lat_deriv(A_get(v), m, u, alo, ahi) - lat_deriv(A_get(u), m, v, alo, ahi) +
                  bracket(A_get(u)(mi, mj, mk), A_get(v)(mi, mj, mk));
          curv += norm2(f);
        }
        for (int d = 0; d < 3; ++d) {
          Su2 gp = lat_deriv(phi_get, m, d, plo, phi_hi) +
                   bracket(A_get(d)(mi, mj, mk), ph);
          grad += norm2(gp);
        }
        double w2 = 1.0 - norm2(ph);
        tc.push_back(e2 * curv);
        tg.push_back(grad);
        tp.push_back(pc * w2 * w2);
      }
  out.curv = w3 * pairwise_sum(tc);
  out.grad = w3 * pairwise_sum(tg);
  out.pot = w3 * pairwise_sum(tp);
  return out;
}

}  // namespace

EnergyReport sweepout_energy(const double y[3], const EnergyParams& p, const Grid& g,
                             const SweepoutEval& ev) {
  if (g.boundary != Boundary::Dirichlet)
    throw ValidationError("sweepout_energy: Dirichlet cube required");
  EnergyReport rep;
  rep.epsilon = p.epsilon;
  rep.lambda = p.lambda;
  double yn = ynorm(y);
  if (boundary_y(y, yn)) return rep;  // constant pair, zero energy
  double a[3];
  a_internal(y, g, a);
  const double rf = ev.fine_radius_eps * p.epsilon;
  auto dinf = [&](const double x[3]) {
    double m = 0;
    for (int d = 0; d < 3; ++d) m = std::max(m, std::abs(x[d] - a[d]));
    return m;
  };
  // fine pass: full resolution near a(y)
  int64_t n[3] = {g.n1, g.n2, g.n3};
  int64_t flo[3], fhi[3];
  bool fine_nonempty = true;
  for (int d = 0; d < 3; ++d) {
    flo[d] = (int64_t)std::ceil((a[d] - rf) / g.h);
    fhi[d] = (int64_t)std::floor((a[d] + rf) / g.h);
    flo[d] = std::max(flo[d], (int64_t)0);
    fhi[d] = std::min(fhi[d], n[d] - 1);
    if (flo[d] > fhi[d]) fine_nonempty = false;
  }
  PassResult fine;
  if (fine_nonempty)
    fine = sweepout_pass(a, p, g, 1, flo, fhi,
                         [&](const double x[3]) { return dinf(x) <= rf; });
  // coarse pass: strided far field
  int64_t sigma = std::max<int64_t>(1, ev.coarse_stride);
  int64_t clo[3] = {0, 0, 0};
  int64_t chi[3];
  for (int d = 0; d < 3; ++d) chi[d] = (n[d] - 1) / sigma;
  PassResult coarse = sweepout_pass(a, p, g, sigma, clo, chi,
                                    [&](const double x[3]) { return dinf(x) > rf; });
  rep.curvature_term = fine.curv + coarse.curv;
  rep.gradient_term = fine.grad + coarse.grad;
  rep.potential_term = fine.pot + coarse.pot;
  rep.total = rep.curvature_term + rep.gradient_term + rep.potential_term;
  rep.normalized = rep.total / p.epsilon;
  return rep;
}

namespace {

double halton(std::uint64_t i, unsigned base) {
  double f = 1.0, r = 0.0;
  while (i > 0) {
    f /= base;
    r += f * (i % base);
    i /= base;
  }
  return r;
}

}  // namespace

WidthScanResult width_scan(const EnergyParams& p, const Grid& grid, int y_samples,
                           const SweepoutEval& ev) {
  WidthScanResult res;
  for (int q = 1; q <= y_samples; ++q) {
    double u1 = halton(q, 2), u2 = halton(q, 3), u3 = halton(q, 5);
    double rad = std::cbrt(u1);
    double ct = 2.0 * u2 - 1.0, st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    double ph = 2.0 * M_PI * u3;
    double y[3] = {rad * st * std::cos(ph), rad * st * std::sin(ph), rad * ct};
    double e = sweepout_energy(y, p, grid, ev).total;
    res.samples.push_back({y[0], y[1], y[2], e});
    if (e > res.omega_hat) {
      res.omega_hat = e;
      res.argmax_y[0] = y[0]; res.argmax_y[1] = y[1]; res.argmax_y[2] = y[2];
    }
  }
  return res;
}

Configuration random_perturbed_trivial(const EnergyParams& p, const Grid& g,
                                       double amplitude, std::uint64_t seed) {
  Configuration cfg(g);
  for (std::size_t s = 0; s < g.size(); ++s) cfg.phi.set(s, Su2{0, 0, 1});
  if (amplitude <= 0) return cfg;
  // band-limited random fields: modes |m|_inf <= 2, smooth decay
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uni(0.0, 2.0 * M_PI);
  struct Mode { double m[3], amp[12], phase[12]; };
  std::vector<Mode> modes;
  for (int mx = -2; mx <= 2; ++mx)
    for (int my = -2; my <= 2; ++my)
      for (int mz = -2; mz <= 2; ++mz) {
        if (mx == 0 && my == 0 && mz == 0) continue;
        Mode md{};
        md.m[0] = mx; md.m[1] = my; md.m[2] = mz;
        double decay = 1.0 / (1.0 + mx * mx + my * my + mz * mz);
        for (int c = 0; c < 12; ++c) {
          md.amp[c] = gauss(rng) * decay;
          md.phase[c] = uni(rng);
        }
        modes.push_back(md);
      }
  OneForm a(g);
  Su2Field ph(g);
  for (int64_t k = 0; k < g.n3; ++k)
    for (int64_t j = 0; j < g.n2; ++j)
      for (int64_t i = 0; i < g.n1; ++i) {
        std::size_t s = g.idx(i, j, k);
        double fr[3] = {(double)i / g.n1, (double)j / g.n2, (double)k / g.n3};
        double val[12] = {0};
        for (const Mode& md : modes) {
          double arg = 2.0 * M_PI * (md.m[0] * fr[0] + md.m[1] * fr[1] + md.m[2] * fr[2]);
          for (int c = 0; c < 12; ++c) val[c] += md.amp[c] * std::cos(arg + md.phase[c]);
        }
        for (int d = 0; d < 3; ++d)
          a.set(s, d, Su2{val[3 * d], val[3 * d + 1], val[3 * d + 2]});
        ph.set(s, Su2{val[9], val[10], val[11]});
      }
  // scale the perturbation so the normalized energy hits the amplitude
  double scale = 1e-2;
  for (int it = 0; it < 30; ++it) {
    Configuration trial = cfg;
    for (std::size_t s = 0; s < g.size(); ++s) {
      for (int d = 0; d < 3; ++d) trial.A.set(s, d, a.get(s, d) * scale);
      trial.phi.set(s, Su2{0, 0, 1} + ph.get(s) * scale);
    }
    double e = total_energy(trial, p).normalized;
    if (e > 0 && std::abs(e / amplitude - 1.0) < 5e-3) return trial;
    scale *= std::sqrt(amplitude / std::max(e, 1e-300));
  }
  // last iterate
  Configuration trial = cfg;
  for (std::size_t s = 0; s < g.size(); ++s) {
    for (int d = 0; d < 3; ++d) trial.A.set(s, d, a.get(s, d) * scale);
    trial.phi.set(s, Su2{0, 0, 1} + ph.get(s) * scale);
  }
  return trial;
}

GapReport gap_probe(const EnergyParams& p, const Grid& grid, double amplitude,
                    int trials, std::uint64_t seed, const FlowParams& fp) {
  if (grid.boundary != Boundary::Periodic)
    throw ValidationError("gap_probe: periodic grid required");
  GapReport rep;
  int ntriv = 0;
  for (int t = 0; t < trials; ++t) {
    std::uint64_t s = seed + (std::uint64_t)t;
    Configuration start = random_perturbed_trivial(p, grid, amplitude, s);
    FlowResult fr = relax(start, p, fp);
    GapTrial gt;
    gt.seed = s;
    gt.amplitude = amplitude;
    gt.final_energy = total_energy(fr.cfg, p).total;
    gt.iterations = fr.trace.iterations;
    gt.trivial = gt.final_energy < 1e-8;
    if (gt.trivial) ++ntriv;
    rep.trials.push_back(gt);
  }
  rep.fraction_trivial = trials > 0 ? (double)ntriv / trials : 0.0;
  return rep;
}

}  // namespace ymh
