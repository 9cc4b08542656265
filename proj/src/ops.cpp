#include "ymh/ops.hpp"
#include "ymh/stencil.hpp"
#include "ymh/util.hpp"

namespace ymh {

using detail::deriv;
using detail::sample_A;
using detail::sample_oneform;
using detail::sample_phi;
using detail::sample_twoform;
using std::int64_t;

namespace {
// plane p pairs axes (a,b): xy=(0,1), yz=(1,2), zx=(2,0)
constexpr int plane_a[3] = {0, 1, 2};
constexpr int plane_b[3] = {1, 2, 0};
}  // namespace

TwoForm curvature(const Configuration& cfg) {
  const Grid& g = cfg.grid;
  TwoForm F(g);
  auto A_at = [&](int d) {
    return [&, d](int64_t i, int64_t j, int64_t k) { return sample_A(cfg.A, i, j, k, d); };
  };
  for (int64_t k = 0; k < g.n3; ++k)
    for (int64_t j = 0; j < g.n2; ++j)
      for (int64_t i = 0; i < g.n1; ++i) {
        std::size_t s = g.idx(i, j, k);
        for (int p = 0; p < 3; ++p) {
          int a = plane_a[p], b = plane_b[p];
          Su2 dab = deriv(g, i, j, k, a, A_at(b));
          Su2 dba = deriv(g, i, j, k, b, A_at(a));
          Su2 f = dab - dba + bracket(cfg.A.get(s, a), cfg.A.get(s, b));
          F.set(s, p, f);
        }
      }
  return F;
}

OneForm cov_deriv_field(const Configuration& cfg, const Su2Field& phi) {
  const Grid& g = cfg.grid;
  OneForm d(g);
  auto phi_at = [&](int64_t i, int64_t j, int64_t k) { return sample_phi(phi, i, j, k); };
  for (int64_t k = 0; k < g.n3; ++k)
    for (int64_t j = 0; j < g.n2; ++j)
      for (int64_t i = 0; i < g.n1; ++i) {
        std::size_t s = g.idx(i, j, k);
        Su2 ph = phi.get(s);
        for (int a = 0; a < 3; ++a) {
          Su2 v = deriv(g, i, j, k, a, phi_at) + bracket(cfg.A.get(s, a), ph);
          d.set(s, a, v);
        }
      }
  return d;
}

OneForm cov_deriv(const Configuration& cfg) { return cov_deriv_field(cfg, cfg.phi); }

TwoForm d_A(const Configuration& cfg, const OneForm& a) {
  const Grid& g = cfg.grid;
  if (!g.same_dims(a.grid)) throw NonconformingPerturbation("d_A: dims mismatch");
  TwoForm out(g);
  auto a_at = [&](int d) {
    return [&, d](int64_t i, int64_t j, int64_t k) { return sample_oneform(a, i, j, k, d); };
  };
  for (int64_t k = 0; k < g.n3; ++k)
    for (int64_t j = 0; j < g.n2; ++j)
      for (int64_t i = 0; i < g.n1; ++i) {
        std::size_t s = g.idx(i, j, k);
        for (int p = 0; p < 3; ++p) {
          int u = plane_a[p], w = plane_b[p];
          Su2 v = deriv(g, i, j, k, u, a_at(w)) - deriv(g, i, j, k, w, a_at(u)) +
                  bracket(cfg.A.get(s, u), a.get(s, w)) -
                  bracket(cfg.A.get(s, w), a.get(s, u));
          out.set(s, p, v);
        }
      }
  return out;
}

OneForm codiff_two(const Configuration& cfg, const TwoForm& F) {
  const Grid& g = cfg.grid;
  OneForm out(g);
  auto F_at = [&](int p) {
    return [&, p](int64_t i, int64_t j, int64_t k) { return sample_twoform(F, i, j, k, p); };
  };
  // F_ij for axes (i,j): plane index and sign
  // (d* F)_j = -sum_i (d_i F_ij + [A_i, F_ij])
  // planes: 0:xy 1:yz 2:zx
  struct Term { int axis; int plane; double sign; };
  // F_{axis, target} = sign * stored(plane)
  static const Term terms[3][2] = {
      // target x: F_yx = -F_xy (plane 0), F_zx = +F_zx (plane 2)
      {{1, 0, -1.0}, {2, 2, 1.0}},
      // target y: F_xy (plane 0), F_zy = -F_yz (plane 1)
      {{0, 0, 1.0}, {2, 1, -1.0}},
      // target z: F_xz = -F_zx (plane 2), F_yz (plane 1)
      {{0, 2, -1.0}, {1, 1, 1.0}},
  };
  for (int64_t k = 0; k < g.n3; ++k)
    for (int64_t j = 0; j < g.n2; ++j)
      for (int64_t i = 0; i < g.n1; ++i) {
        std::size_t s = g.idx(i, j, k);
        for (int tgt = 0; tgt < 3; ++tgt) {
          Su2 acc{};
          for (const Term& t : terms[tgt]) {
            Su2 dF = deriv(g, i, j, k, t.axis, F_at(t.plane)) * t.sign;
            Su2 br = bracket(cfg.A.get(s, t.axis), F.get(s, t.plane) * t.sign);
            acc -= dF + br;
          }
          out.set(s, tgt, acc);
        }
      }
  return out;
}

OneForm codiff_F(const Configuration& cfg) { return codiff_two(cfg, curvature(cfg)); }

Su2Field codiff_one(const Configuration& cfg, const OneForm& psi) {
  const Grid& g = cfg.grid;
  Su2Field out(g);
  auto psi_at = [&](int d) {
    return [&, d](int64_t i, int64_t j, int64_t k) { return sample_oneform(psi, i, j, k, d); };
  };
  for (int64_t k = 0; k < g.n3; ++k)
    for (int64_t j = 0; j < g.n2; ++j)
      for (int64_t i = 0; i < g.n1; ++i) {
        std::size_t s = g.idx(i, j, k);
        Su2 acc{};
        for (int a = 0; a < 3; ++a)
          acc -= deriv(g, i, j, k, a, psi_at(a)) + bracket(cfg.A.get(s, a), psi.get(s, a));
        out.set(s, acc);
      }
  return out;
}

Su2Field rough_laplacian_phi(const Configuration& cfg) {
  return codiff_one(cfg, cov_deriv(cfg));
}

ScalarField scalar_laplacian(const ScalarField& f) {
  const Grid& g = f.grid;
  ScalarField out(g);
  const double invh2 = 1.0 / (g.h * g.h);
  auto val = [&](int64_t i, int64_t j, int64_t k) {
    if (i < 0) i += g.n1; else if (i >= g.n1) i -= g.n1;
    if (j < 0) j += g.n2; else if (j >= g.n2) j -= g.n2;
    if (k < 0) k += g.n3; else if (k >= g.n3) k -= g.n3;
    return f.v[g.idx(i, j, k)];
  };
  for (int64_t k = 0; k < g.n3; ++k)
    for (int64_t j = 0; j < g.n2; ++j)
      for (int64_t i = 0; i < g.n1; ++i) {
        if (g.on_boundary(i, j, k)) continue;
        double c = f.v[g.idx(i, j, k)];
        double lap = (val(i + 1, j, k) + val(i - 1, j, k) + val(i, j + 1, k) +
                      val(i, j - 1, k) + val(i, j, k + 1) + val(i, j, k - 1) - 6.0 * c) *
                     invh2;
        out.v[g.idx(i, j, k)] = -lap;  // geometer's sign
      }
  return out;
}

double dist2_to(const Grid& g, int64_t i, int64_t j, int64_t k, const double c[3]) {
  double d[3] = {i * g.h - c[0], j * g.h - c[1], k * g.h - c[2]};
  if (g.boundary == Boundary::Periodic) {
    const double L[3] = {g.n1 * g.h, g.n2 * g.h, g.n3 * g.h};
    for (int a = 0; a < 3; ++a) {
      d[a] = std::remainder(d[a], L[a]);
    }
  }
  return d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
}

double integrate(const ScalarField& f, const Region& region) {
  const Grid& g = f.grid;
  const double h3 = g.h * g.h * g.h;
  if (region.kind == Region::Kind::All) {
    return h3 * pairwise_sum(f.v);
  }
  const Ball& b = region.b;
  // the ball must fit in the domain
  if (g.boundary == Boundary::Dirichlet) {
    for (int a = 0; a < 3; ++a)
      if (b.center[a] - b.r < 0 || b.center[a] + b.r > g.len(a))
        throw BallOutOfDomain("integrate: ball exceeds Dirichlet domain");
  } else {
    for (int a = 0; a < 3; ++a)
      if (2 * b.r > g.len(a))
        throw BallOutOfDomain("integrate: ball exceeds periodic cell");
  }
  const double r2 = b.r * b.r;
  PairwiseAcc acc;
  for (int64_t k = 0; k < g.n3; ++k)
    for (int64_t j = 0; j < g.n2; ++j)
      for (int64_t i = 0; i < g.n1; ++i)
        if (dist2_to(g, i, j, k, b.center) <= r2) acc.add(f.v[g.idx(i, j, k)]);
  return h3 * acc.total();
}

}  // namespace ymh
