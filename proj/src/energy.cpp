#include "ymh/energy.hpp"
#include "ymh/util.hpp"
#include <sstream>

namespace ymh {

using std::int64_t;

const char* EnergyReport::csv_header() {
  return "epsilon,lambda,curvature,gradient,potential,total,normalized";
}

std::string EnergyReport::csv_row() const {
  std::ostringstream os;
  os.precision(17);
  os << epsilon << ',' << lambda << ',' << curvature_term << ',' << gradient_term
     << ',' << potential_term << ',' << total << ',' << normalized;
  return os.str();
}

Su2 star_two(const TwoForm& F, std::size_t s, int axis) {
  // planes stored (xy, yz, zx); (*F)_x = F_yz, (*F)_y = F_zx, (*F)_z = F_xy
  static const int plane_of_axis[3] = {1, 2, 0};
  return F.get(s, plane_of_axis[axis]);
}

namespace {

double norm2_site_two(const TwoForm& F, std::size_t s) {
  return norm2(F.get(s, 0)) + norm2(F.get(s, 1)) + norm2(F.get(s, 2));
}
double norm2_site_one(const OneForm& f, std::size_t s) {
  return norm2(f.get(s, 0)) + norm2(f.get(s, 1)) + norm2(f.get(s, 2));
}

}  // namespace

ScalarField energy_density(const Configuration& cfg, const EnergyParams& p) {
  TwoForm F = curvature(cfg);
  OneForm dphi = cov_deriv(cfg);
  ScalarField e(cfg.grid);
  const double e2 = p.epsilon * p.epsilon;
  const double pc = p.lambda / (4.0 * e2);
  const std::size_t n = cfg.grid.size();
  for (std::size_t s = 0; s < n; ++s) {
    double w2 = 1.0 - norm2(cfg.phi.get(s));
    e.v[s] = e2 * norm2_site_two(F, s) + norm2_site_one(dphi, s) + pc * w2 * w2;
  }
  return e;
}

EnergyReport total_energy(const Configuration& cfg, const EnergyParams& p) {
  TwoForm F = curvature(cfg);
  OneForm dphi = cov_deriv(cfg);
  const Grid& g = cfg.grid;
  const double e2 = p.epsilon * p.epsilon;
  const double pc = p.lambda / (4.0 * e2);
  const std::size_t n = g.size();
  std::vector<double> tc(n), tg(n), tp(n);
  for (std::size_t s = 0; s < n; ++s) {
    double w2 = 1.0 - norm2(cfg.phi.get(s));
    tc[s] = e2 * norm2_site_two(F, s);
    tg[s] = norm2_site_one(dphi, s);
    tp[s] = pc * w2 * w2;
  }
  const double h3 = g.h * g.h * g.h;
  EnergyReport r;
  r.epsilon = p.epsilon;
  r.lambda = p.lambda;
  r.curvature_term = h3 * pairwise_sum(tc);
  r.gradient_term = h3 * pairwise_sum(tg);
  r.potential_term = h3 * pairwise_sum(tp);
  r.total = r.curvature_term + r.gradient_term + r.potential_term;
  r.normalized = r.total / p.epsilon;
  return r;
}

double first_variation(const Configuration& cfg, const EnergyParams& p,
                       const Perturbation& v) {
  const Grid& g = cfg.grid;
  if (!g.same_dims(v.a.grid) || !g.same_dims(v.phi.grid))
    throw NonconformingPerturbation("first_variation: dims mismatch");
  if (g.boundary == Boundary::Dirichlet) {
    for (int64_t k = 0; k < g.n3; ++k)
      for (int64_t j = 0; j < g.n2; ++j)
        for (int64_t i = 0; i < g.n1; ++i) {
          if (!g.on_boundary(i, j, k)) continue;
          std::size_t s = g.idx(i, j, k);
          double m = norm2(v.phi.get(s)) + norm2_site_one(v.a, s);
          if (m != 0.0)
            throw NonconformingPerturbation("first_variation: nonzero on Dirichlet boundary");
        }
  }
  TwoForm F = curvature(cfg);
  OneForm dphi = cov_deriv(cfg);
  TwoForm da = d_A(cfg, v.a);
  OneForm dpert = cov_deriv_field(cfg, v.phi);  // grad phi = d phi + [A, phi]
  const double e2 = p.epsilon * p.epsilon;
  const std::size_t n = g.size();
  std::vector<double> terms(n);
  for (std::size_t s = 0; s < n; ++s) {
    Su2 ph = cfg.phi.get(s);
    double t = 0;
    for (int pl = 0; pl < 3; ++pl) t += 2.0 * e2 * inner(F.get(s, pl), da.get(s, pl));
    for (int d = 0; d < 3; ++d)
      t += 2.0 * inner(dphi.get(s, d), dpert.get(s, d) + bracket(v.a.get(s, d), ph));
    t += (p.lambda / e2) * (norm2(ph) - 1.0) * inner(ph, v.phi.get(s));
    terms[s] = t;
  }
  return g.h * g.h * g.h * pairwise_sum(terms);
}

ElResiduals el_residuals(const Configuration& cfg, const EnergyParams& p) {
  const Grid& g = cfg.grid;
  TwoForm F = curvature(cfg);
  OneForm dphi = cov_deriv(cfg);
  ElResiduals r{codiff_two(cfg, F), codiff_one(cfg, dphi), 0.0};
  const double e2 = p.epsilon * p.epsilon;
  const std::size_t n = g.size();
  for (std::size_t s = 0; s < n; ++s) {
    Su2 ph = cfg.phi.get(s);
    for (int d = 0; d < 3; ++d)
      r.r_A.set(s, d, r.r_A.get(s, d) * e2 - bracket(dphi.get(s, d), ph));
    Su2 rp = r.r_phi.get(s) - ph * ((p.lambda / (2.0 * e2)) * (1.0 - norm2(ph)));
    r.r_phi.set(s, rp);
  }
  std::vector<double> terms(n);
  for (std::size_t s = 0; s < n; ++s)
    terms[s] = norm2_site_one(r.r_A, s) + norm2(r.r_phi.get(s));
  r.norm = std::sqrt(g.h * g.h * g.h * pairwise_sum(terms));
  return r;
}

BogomolnySplit bogomolny_split(const Configuration& cfg, const EnergyParams& p, int sign) {
  const Grid& g = cfg.grid;
  TwoForm F = curvature(cfg);
  OneForm dphi = cov_deriv(cfg);
  const double eps = p.epsilon;
  const std::size_t n = g.size();
  std::vector<double> tdef(n), tpot(n), tk(n);
  for (std::size_t s = 0; s < n; ++s) {
    double def = 0, k = 0;
    for (int d = 0; d < 3; ++d) {
      Su2 sf = star_two(F, s, d);     // (*F)_d
      Su2 gp = dphi.get(s, d);
      def += norm2(sf * eps - gp * (double)sign);  // |eps F -+ *grad Phi|^2, via star
      k += inner(sf, gp);
    }
    double w2 = 1.0 - norm2(cfg.phi.get(s));
    tdef[s] = def;
    tpot[s] = (p.lambda / (4.0 * eps * eps)) * w2 * w2;
    tk[s] = k;
  }
  const double h3 = g.h * g.h * g.h;
  BogomolnySplit b;
  b.defect = h3 * pairwise_sum(tdef);
  b.potential = h3 * pairwise_sum(tpot);
  double kvol = h3 * pairwise_sum(tk) / (4.0 * M_PI);
  b.topological = sign * 8.0 * M_PI * kvol * eps;
  return b;
}

ScalarField diagnostic_xi(const Configuration& cfg, const EnergyParams& p) {
  const Grid& g = cfg.grid;
  TwoForm F = curvature(cfg);
  OneForm dphi = cov_deriv(cfg);
  ScalarField xi(g);
  const double eps = p.epsilon;
  const std::size_t n = g.size();
  for (std::size_t s = 0; s < n; ++s) {
    Su2 ph = cfg.phi.get(s);
    double w = 0.5 * (1.0 - norm2(ph));
    double brF = 0;
    for (int pl = 0; pl < 3; ++pl) brF += norm2(bracket(F.get(s, pl), ph));
    xi.v[s] = 2.0 * w * eps * norm2_site_two(F, s) + norm2_site_one(dphi, s) / eps +
              (p.lambda / (eps * eps * eps)) * w * w + eps * brF;
  }
  return xi;
}

ScalarField diagnostic_xi_definition(const Configuration& cfg, const EnergyParams& p) {
  const Grid& g = cfg.grid;
  TwoForm F = curvature(cfg);
  ScalarField e = energy_density(cfg, p);
  ScalarField xi(g);
  const double eps = p.epsilon;
  const std::size_t n = g.size();
  for (std::size_t s = 0; s < n; ++s) {
    Su2 ph = cfg.phi.get(s);
    double fp = 0;
    for (int pl = 0; pl < 3; ++pl) {
      double c = inner(F.get(s, pl), ph);
      fp += c * c;
    }
    xi.v[s] = e.v[s] / eps - eps * fp;
  }
  return xi;
}

double verify_w_identity(const Configuration& cfg, const EnergyParams& p) {
  const Grid& g = cfg.grid;
  OneForm dphi = cov_deriv(cfg);
  ScalarField w(g);
  const std::size_t n = g.size();
  for (std::size_t s = 0; s < n; ++s) w.v[s] = 0.5 * (1.0 - norm2(cfg.phi.get(s)));
  ScalarField lap = scalar_laplacian(w);
  std::vector<double> terms;
  terms.reserve(n);
  const double e2 = p.epsilon * p.epsilon;
  for (int64_t k = 0; k < g.n3; ++k)
    for (int64_t j = 0; j < g.n2; ++j)
      for (int64_t i = 0; i < g.n1; ++i) {
        if (g.on_boundary(i, j, k)) continue;
        std::size_t s = g.idx(i, j, k);
        double d = lap.v[s] - norm2_site_one(dphi, s) +
                   (p.lambda * w.v[s] / e2) * norm2(cfg.phi.get(s));
        terms.push_back(d * d);
      }
  return std::sqrt(g.h * g.h * g.h * pairwise_sum(terms));
}

PsiTheta psi_theta_densities(const Configuration& cfg, const EnergyParams& p) {
  const Grid& g = cfg.grid;
  TwoForm F = curvature(cfg);
  OneForm dphi = cov_deriv(cfg);
  PsiTheta out{ScalarField(g), ScalarField(g), ScalarField(g)};
  const double e2 = p.epsilon * p.epsilon;
  const std::size_t n = g.size();
  for (std::size_t s = 0; s < n; ++s) {
    Su2 ph = cfg.phi.get(s);
    double brF = 0, brG = 0;
    for (int pl = 0; pl < 3; ++pl) brF += norm2(bracket(F.get(s, pl), ph));
    for (int d = 0; d < 3; ++d) brG += norm2(bracket(dphi.get(s, d), ph));
    out.psi0.v[s] = std::sqrt(e2 * norm2_site_two(F, s) + norm2_site_one(dphi, s));
    out.theta0.v[s] = std::sqrt(e2 * brF + brG);
    double np = norm(ph);
    out.psi0_perp.v[s] = np > tolerance_zero ? out.theta0.v[s] / np : 0.0;
  }
  return out;
}

}  // namespace ymh
