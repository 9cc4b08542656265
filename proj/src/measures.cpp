#include "ymh/measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ymh/util.hpp"

namespace ymh {

using std::int64_t;

MeasureField measures(const Configuration& cfg, const EnergyParams& p) {
  MeasureField m{ScalarField(cfg.grid), ScalarField(cfg.grid)};
  ScalarField e = energy_density(cfg, p);
  TwoForm F = curvature(cfg);
  OneForm gp = cov_deriv(cfg);
  const std::size_t n = cfg.grid.size();
  for (std::size_t s = 0; s < n; ++s) {
    m.mu[s] = e[s] / p.epsilon;
    double k = 0;
    for (int a = 0; a < 3; ++a) k += inner(star_two(F, s, a), gp.get(s, a));
    m.kappa[s] = 2.0 * k;
  }
  return m;
}

double charge_volume(const Configuration& cfg, const EnergyParams& p, const Region& region) {
  (void)p;
  TwoForm F = curvature(cfg);
  OneForm gp = cov_deriv(cfg);
  ScalarField q(cfg.grid);
  const std::size_t n = cfg.grid.size();
  for (std::size_t s = 0; s < n; ++s) {
    double k = 0;
    for (int a = 0; a < 3; ++a) k += inner(star_two(F, s, a), gp.get(s, a));
    q[s] = k;
  }
  return integrate(q, region) / (4.0 * M_PI);
}

Icosphere icosphere(int level) {
  if (level < 0 || level > 7) throw ValidationError("icosphere: level must be in [0,7]");
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  Icosphere s;
  auto push = [&](double x, double y, double z) {
    double n = std::sqrt(x * x + y * y + z * z);
    s.vert.push_back({x / n, y / n, z / n});
  };
  push(-1, t, 0);  push(1, t, 0);  push(-1, -t, 0); push(1, -t, 0);
  push(0, -1, t);  push(0, 1, t);  push(0, -1, -t); push(0, 1, -t);
  push(t, 0, -1);  push(t, 0, 1);  push(-t, 0, -1); push(-t, 0, 1);
  s.tri = {{0, 11, 5},  {0, 5, 1},   {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
           {1, 5, 9},   {5, 11, 4},  {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
           {3, 9, 4},   {3, 4, 2},   {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
           {4, 9, 5},   {2, 4, 11},  {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (auto& tr : s.tri) {
    // make every base triangle outward-wound; subdivision preserves this
    const auto& a = s.vert[tr[0]];
    const auto& b = s.vert[tr[1]];
    const auto& c = s.vert[tr[2]];
    double cx = b[1] * c[2] - b[2] * c[1];
    double cy = b[2] * c[0] - b[0] * c[2];
    double cz = b[0] * c[1] - b[1] * c[0];
    if (a[0] * cx + a[1] * cy + a[2] * cz < 0) std::swap(tr[1], tr[2]);
  }
  for (int l = 0; l < level; ++l) {
    std::map<std::pair<int, int>, int> mid;
    auto midpoint = [&](int a, int b) {
      auto key = std::minmax(a, b);
      auto it = mid.find(key);
      if (it != mid.end()) return it->second;
      const auto& va = s.vert[a];
      const auto& vb = s.vert[b];
      double x = va[0] + vb[0], y = va[1] + vb[1], z = va[2] + vb[2];
      double n = std::sqrt(x * x + y * y + z * z);
      s.vert.push_back({x / n, y / n, z / n});
      int id = (int)s.vert.size() - 1;
      mid.emplace(key, id);
      return id;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(4 * s.tri.size());
    for (const auto& tr : s.tri) {
      int ab = midpoint(tr[0], tr[1]);
      int bc = midpoint(tr[1], tr[2]);
      int ca = midpoint(tr[2], tr[0]);
      next.push_back({tr[0], ab, ca});
      next.push_back({tr[1], bc, ab});
      next.push_back({tr[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    s.tri = std::move(next);
  }
  return s;
}

namespace {

struct Corner {
  std::size_t s;
  double w;
  double alpha;  // x-seam frame rotation for su(2) samples
};

// trilinear corner gather at a physical point; periodic wrap tracks the twist
void gather_corners(const Grid& g, const double x[3], Corner out[8]) {
  double u[3] = {x[0] / g.h, x[1] / g.h, x[2] / g.h};
  int64_t i0[3];
  double f[3];
  const int64_t n[3] = {g.n1, g.n2, g.n3};
  for (int a = 0; a < 3; ++a) {
    if (g.boundary == Boundary::Dirichlet) {
      if (u[a] < -1e-9 || u[a] > n[a] - 1 + 1e-9)
        throw BallOutOfDomain("sample point outside the Dirichlet domain");
      u[a] = std::clamp(u[a], 0.0, (double)(n[a] - 1));
      i0[a] = std::min((int64_t)u[a], n[a] - 2);
    } else {
      u[a] -= std::floor(u[a] / n[a]) * n[a];
      i0[a] = std::min((int64_t)u[a], n[a] - 1);
    }
    f[a] = u[a] - i0[a];
  }
  int c = 0;
  for (int dk = 0; dk < 2; ++dk)
    for (int dj = 0; dj < 2; ++dj)
      for (int di = 0; di < 2; ++di, ++c) {
        int64_t ii = i0[0] + di, jj = i0[1] + dj, kk = i0[2] + dk;
        int xw = 0;
        if (g.boundary == Boundary::Periodic) {
          if (ii >= g.n1) { ii -= g.n1; xw = 1; }
          if (jj >= g.n2) jj -= g.n2;
          if (kk >= g.n3) kk -= g.n3;
        }
        out[c].s = g.idx(ii, jj, kk);
        out[c].w = (di ? f[0] : 1 - f[0]) * (dj ? f[1] : 1 - f[1]) * (dk ? f[2] : 1 - f[2]);
        out[c].alpha = xw * 2.0 * M_PI * g.twist_n * (double)jj / g.n2;
      }
}

double sample_scalar(const ScalarField& f, const Corner c[8]) {
  double v = 0;
  for (int i = 0; i < 8; ++i) v += c[i].w * f[c[i].s];
  return v;
}

Su2 sample_su2(const Su2Field& f, const Corner c[8]) {
  Su2 v{0, 0, 0};
  for (int i = 0; i < 8; ++i) {
    Su2 a = f.get(c[i].s);
    if (c[i].alpha != 0) {
      double ca = std::cos(c[i].alpha), sa = std::sin(c[i].alpha);
      a = Su2{a.c1 * ca - a.c2 * sa, a.c1 * sa + a.c2 * ca, a.c3};
    }
    v += a * c[i].w;
  }
  return v;
}

void check_sphere_fits(const Grid& g, const double center[3], double r) {
  if (r <= 0) throw ValidationError("sphere radius must be > 0");
  if (g.boundary == Boundary::Dirichlet) {
    for (int a = 0; a < 3; ++a)
      if (center[a] - r < -1e-12 || center[a] + r > g.len(a) + 1e-12)
        throw BallOutOfDomain("sphere exits the Dirichlet domain");
  } else {
    double minp = std::min({g.len(0), g.len(1), g.len(2)});
    if (2 * r > minp) throw BallOutOfDomain("sphere diameter exceeds the period");
  }
}

}  // namespace

double charge_degree(const Configuration& cfg, const double center[3], double r,
                     int level) {
  const Grid& g = cfg.grid;
  check_sphere_fits(g, center, r);
  Icosphere sph = icosphere(level);
  std::vector<std::array<double, 3>> u(sph.vert.size());
  for (std::size_t v = 0; v < sph.vert.size(); ++v) {
    double x[3] = {center[0] + r * sph.vert[v][0], center[1] + r * sph.vert[v][1],
                   center[2] + r * sph.vert[v][2]};
    Corner c[8];
    gather_corners(g, x, c);
    Su2 phi = sample_su2(cfg.phi, c);
    double n = norm(phi);
    if (n <= 0.5)
      throw HiggsVanishesOnSphere("charge_degree: |Phi| <= 0.5 on the sphere");
    u[v] = {phi.c1 / n, phi.c2 / n, phi.c3 / n};
  }
  std::vector<double> terms(sph.tri.size());
  for (std::size_t t = 0; t < sph.tri.size(); ++t) {
    const auto& a = u[sph.tri[t][0]];
    const auto& b = u[sph.tri[t][1]];
    const auto& c = u[sph.tri[t][2]];
    double d1[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
    double d2[3] = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
    double cr[3] = {d1[1] * d2[2] - d1[2] * d2[1], d1[2] * d2[0] - d1[0] * d2[2],
                    d1[0] * d2[1] - d1[1] * d2[0]};
    double uc[3] = {(a[0] + b[0] + c[0]) / 3.0, (a[1] + b[1] + c[1]) / 3.0,
                    (a[2] + b[2] + c[2]) / 3.0};
    terms[t] = uc[0] * cr[0] + uc[1] * cr[1] + uc[2] * cr[2];
  }
  return pairwise_sum(terms) / (8.0 * M_PI);
}

ConcentrationReport detect_concentration(const MeasureField& m, double r,
                                         double eta_star_user) {
  const Grid& g = m.mu.grid;
  if (r <= 0) throw ValidationError("detect_concentration: r must be > 0");
  ConcentrationReport rep;
  rep.eta_star_user = eta_star_user;
  const double h3 = g.h * g.h * g.h;
  const int64_t rad = (int64_t)std::floor(r / g.h);
  // ball stencil offsets, reused for every candidate
  std::vector<std::array<int64_t, 3>> off;
  for (int64_t dk = -rad; dk <= rad; ++dk)
    for (int64_t dj = -rad; dj <= rad; ++dj)
      for (int64_t di = -rad; di <= rad; ++di)
        if ((di * di + dj * dj + dk * dk) * g.h * g.h <= r * r)
          off.push_back({di, dj, dk});
  auto ball_mass = [&](const ScalarField& f, int64_t ci, int64_t cj, int64_t ck) {
    PairwiseAcc acc;
    for (const auto& o : off) {
      int64_t i = ci + o[0], j = cj + o[1], k = ck + o[2];
      if (g.boundary == Boundary::Periodic) {
        i = (i % g.n1 + g.n1) % g.n1;
        j = (j % g.n2 + g.n2) % g.n2;
        k = (k % g.n3 + g.n3) % g.n3;
      } else if (i < 0 || i >= g.n1 || j < 0 || j >= g.n2 || k < 0 || k >= g.n3) {
        continue;
      }
      acc.add(f[g.idx(i, j, k)]);
    }
    return h3 * acc.total();
  };
  const int64_t stride = std::max<int64_t>(1, (int64_t)std::floor(r / (4.0 * g.h)));
  struct Cand {
    int64_t i, j, k;
    double mass;
  };
  std::vector<Cand> cands;
  for (int64_t k = 0; k < g.n3; k += stride)
    for (int64_t j = 0; j < g.n2; j += stride)
      for (int64_t i = 0; i < g.n1; i += stride) {
        double mass = ball_mass(m.mu, i, j, k);
        if (mass >= eta_star_user) cands.push_back({i, j, k, mass});
      }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Cand& a, const Cand& b) { return a.mass > b.mass; });
  for (const auto& c : cands) {
    double x[3] = {c.i * g.h, c.j * g.h, c.k * g.h};
    bool clash = false;
    for (const auto& p : rep.points) {
      double d2 = dist2_to(g, c.i, c.j, c.k, p.center);
      if (d2 < 4.0 * r * r) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    ConcentrationPoint pt;
    pt.center[0] = x[0];
    pt.center[1] = x[1];
    pt.center[2] = x[2];
    pt.theta_hat = c.mass;
    pt.xi_hat = ball_mass(m.kappa, c.i, c.j, c.k);
    rep.points.push_back(pt);
  }
  return rep;
}

RescaleResult rescale(const Configuration& cfg, const EnergyParams& p,
                      const double center[3], double t) {
  if (t <= 0) throw ValidationError("rescale: t must be > 0");
  const Grid& g = cfg.grid;
  int64_t shift[3] = {0, 0, 0};
  if (g.boundary == Boundary::Dirichlet) {
    for (int a = 0; a < 3; ++a)
      if (center[a] < -1e-12 || center[a] > g.len(a) + 1e-12)
        throw WindowOutOfDomain("rescale: center outside the domain");
  } else if (g.twist_n == 0) {
    // recenter by a lattice roll so the zoom target sits at the grid center
    const int64_t n[3] = {g.n1, g.n2, g.n3};
    for (int a = 0; a < 3; ++a) {
      int64_t c = (int64_t)std::llround(center[a] / g.h);
      shift[a] = ((n[a] / 2 - c) % n[a] + n[a]) % n[a];
    }
  }
  Grid ng(g.n1, g.n2, g.n3, g.h / t, g.boundary, g.twist_n);
  RescaleResult out{Configuration(ng), EnergyParams(p.epsilon / t, p.lambda)};
  for (int64_t k = 0; k < g.n3; ++k)
    for (int64_t j = 0; j < g.n2; ++j)
      for (int64_t i = 0; i < g.n1; ++i) {
        std::size_t src = g.idx(i, j, k);
        std::size_t dst = ng.idx((i + shift[0]) % g.n1, (j + shift[1]) % g.n2,
                                 (k + shift[2]) % g.n3);
        out.cfg.phi.set(dst, cfg.phi.get(src));
        for (int d = 0; d < 3; ++d) out.cfg.A.set(dst, d, cfg.A.get(src, d) * t);
      }
  return out;
}

std::vector<ConservationRow> conservation_check(const Configuration& cfg,
                                                const EnergyParams& p,
                                                const double center[3],
                                                const std::vector<double>& radii,
                                                int level) {
  const Grid& g = cfg.grid;
  ScalarField e = energy_density(cfg, p);
  TwoForm F = curvature(cfg);
  OneForm gp = cov_deriv(cfg);
  // gauge-invariant quadratic forms: |i_n F|^2 = n^T Q n, |grad_n Phi|^2 = n^T G n
  std::array<ScalarField, 6> Q, G;  // symmetric, packed (xx,yy,zz,xy,yz,zx)
  for (auto& f : Q) f = ScalarField(g);
  for (auto& f : G) f = ScalarField(g);
  const std::size_t ns = g.size();
  for (std::size_t s = 0; s < ns; ++s) {
    Su2 fxy = F.get(s, 0), fyz = F.get(s, 1), fzx = F.get(s, 2);
    // rows of i_n F as linear maps of n: x: -ny Fxy + nz Fzx, etc.
    Su2 row[3][3] = {{{0, 0, 0}, fxy * -1.0, fzx},
                     {fxy, {0, 0, 0}, fyz * -1.0},
                     {fzx * -1.0, fyz, {0, 0, 0}}};
    auto q = [&](int a, int b) {
      double v = 0;
      for (int t = 0; t < 3; ++t) v += inner(row[t][a], row[t][b]);
      return v;
    };
    Q[0][s] = q(0, 0); Q[1][s] = q(1, 1); Q[2][s] = q(2, 2);
    Q[3][s] = q(0, 1); Q[4][s] = q(1, 2); Q[5][s] = q(2, 0);
    Su2 gx = gp.get(s, 0), gy = gp.get(s, 1), gz = gp.get(s, 2);
    G[0][s] = inner(gx, gx); G[1][s] = inner(gy, gy); G[2][s] = inner(gz, gz);
    G[3][s] = inner(gx, gy); G[4][s] = inner(gy, gz); G[5][s] = inner(gz, gx);
  }
  // rhs density: eps^2|F|^2 - |grad Phi|^2 - 3 lambda w^2/eps^2
  ScalarField rhs_d(g);
  const double e2 = p.epsilon * p.epsilon;
  for (std::size_t s = 0; s < ns; ++s) {
    double f2 = Q[0][s] + Q[1][s] + Q[2][s];  // tr Q = 2 sum_{planes} |F|^2
    double g2 = G[0][s] + G[1][s] + G[2][s];
    Su2 ph = cfg.phi.get(s);
    double w = 0.5 * (1.0 - norm2(ph));
    rhs_d[s] = e2 * 0.5 * f2 - g2 - 3.0 * p.lambda * w * w / e2;
  }
  Icosphere sph = icosphere(level);
  // per-vertex solid-angle weights from incident flat-triangle areas,
  // normalized to total 4 pi
  std::vector<double> wv(sph.vert.size(), 0.0);
  for (const auto& tr : sph.tri) {
    const auto& a = sph.vert[tr[0]];
    const auto& b = sph.vert[tr[1]];
    const auto& c = sph.vert[tr[2]];
    double d1[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
    double d2[3] = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
    double cr[3] = {d1[1] * d2[2] - d1[2] * d2[1], d1[2] * d2[0] - d1[0] * d2[2],
                    d1[0] * d2[1] - d1[1] * d2[0]};
    double area = 0.5 * std::sqrt(cr[0] * cr[0] + cr[1] * cr[1] + cr[2] * cr[2]);
    for (int v = 0; v < 3; ++v) wv[tr[v]] += area / 3.0;
  }
  double wsum = pairwise_sum(wv);
  for (auto& w : wv) w *= 4.0 * M_PI / wsum;
  std::vector<ConservationRow> rows;
  for (double r : radii) {
    check_sphere_fits(g, center, r);
    std::vector<double> terms(sph.vert.size());
    for (std::size_t v = 0; v < sph.vert.size(); ++v) {
      const auto& nrm = sph.vert[v];
      double x[3] = {center[0] + r * nrm[0], center[1] + r * nrm[1],
                     center[2] + r * nrm[2]};
      Corner c[8];
      gather_corners(g, x, c);
      auto contract = [&](const std::array<ScalarField, 6>& T) {
        double xx = sample_scalar(T[0], c), yy = sample_scalar(T[1], c);
        double zz = sample_scalar(T[2], c), xy = sample_scalar(T[3], c);
        double yz = sample_scalar(T[4], c), zx = sample_scalar(T[5], c);
        return nrm[0] * nrm[0] * xx + nrm[1] * nrm[1] * yy + nrm[2] * nrm[2] * zz +
               2.0 * (nrm[0] * nrm[1] * xy + nrm[1] * nrm[2] * yz + nrm[2] * nrm[0] * zx);
      };
      double integrand = 2.0 * e2 * contract(Q) + 2.0 * contract(G) - sample_scalar(e, c);
      terms[v] = wv[v] * integrand;
    }
    ConservationRow row;
    row.r = r;
    row.lhs = r * r * r * pairwise_sum(terms);
    row.rhs = integrate(rhs_d, Region::ball(center[0], center[1], center[2], r));
    rows.push_back(row);
  }
  return rows;
}

HodgeSplit hodge_longitudinal(const Configuration& cfg, const EnergyParams& p) {
  const Grid& g = cfg.grid;
  if (g.boundary != Boundary::Periodic)
    throw ValidationError("hodge_longitudinal requires a periodic grid");
  TwoForm F = curvature(cfg);
  // omega is gauge-invariant real data, periodic across the twist seam, so the
  // spectral solve runs on the untwisted grid of the same shape
  Grid gu(g.n1, g.n2, g.n3, g.h, Boundary::Periodic);
  std::array<ScalarField, 3> omega;
  for (auto& f : omega) f = ScalarField(gu);
  const double se = std::sqrt(p.epsilon);
  const std::size_t n = g.size();
  for (std::size_t s = 0; s < n; ++s) {
    Su2 ph = cfg.phi.get(s);
    for (int a = 0; a < 3; ++a) omega[a][s] = se * inner(star_two(F, s, a), ph);
  }
  return hodge_decompose(gu, omega);
}

}  // namespace ymh
