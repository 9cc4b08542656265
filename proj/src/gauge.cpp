#include "ymh/gauge.hpp"
#include "ymh/spectral.hpp"
#include "ymh/stencil.hpp"
#include "ymh/util.hpp"

namespace ymh {

using std::int64_t;

Quat exp_su2(const Su2& c) {
  double th = 0.5 * norm(c);
  if (th < 1e-30) return {1, 0, 0, 0};
  double s = std::sin(th) / (2.0 * th);  // sin(th) * (unit direction scale)
  return {std::cos(th), -s * c.c1, -s * c.c2, -s * c.c3};
}

Su2 adjoint(const Quat& q, const Su2& v) {
  // standard quaternion rotation of the coefficient vector
  double qv[3] = {q.x, q.y, q.z};
  double t[3] = {2.0 * (qv[1] * v.c3 - qv[2] * v.c2),
                 2.0 * (qv[2] * v.c1 - qv[0] * v.c3),
                 2.0 * (qv[0] * v.c2 - qv[1] * v.c1)};
  return {v.c1 + q.w * t[0] + qv[1] * t[2] - qv[2] * t[1],
          v.c2 + q.w * t[1] + qv[2] * t[0] - qv[0] * t[2],
          v.c3 + q.w * t[2] + qv[0] * t[1] - qv[1] * t[0]};
}

namespace {

Quat sample_q(const GaugeField& g, int64_t i, int64_t j, int64_t k) {
  const Grid& gr = g.grid;
  if (i < 0) i += gr.n1; else if (i >= gr.n1) i -= gr.n1;
  if (j < 0) j += gr.n2; else if (j >= gr.n2) j -= gr.n2;
  if (k < 0) k += gr.n3; else if (k >= gr.n3) k -= gr.n3;
  return g.get(gr.idx(i, j, k));
}

// centered derivative of g^-1 along axis, one-sided at Dirichlet faces
Quat dginv(const GaugeField& g, int64_t i, int64_t j, int64_t k, int axis) {
  const Grid& gr = g.grid;
  auto at = [&](int64_t s) {
    int64_t ii = i, jj = j, kk = k;
    (axis == 0 ? ii : axis == 1 ? jj : kk) += s;
    return qconj(sample_q(g, ii, jj, kk));
  };
  auto sub = [](const Quat& a, const Quat& b, double f) {
    return Quat{f * (a.w - b.w), f * (a.x - b.x), f * (a.y - b.y), f * (a.z - b.z)};
  };
  const double inv2h = 0.5 / gr.h;
  int64_t c = axis == 0 ? i : axis == 1 ? j : k;
  int64_t n = axis == 0 ? gr.n1 : axis == 1 ? gr.n2 : gr.n3;
  if (gr.boundary == Boundary::Dirichlet) {
    if (c == 0) {
      Quat a0 = at(0), a1 = at(1), a2 = at(2);
      return {(-3 * a0.w + 4 * a1.w - a2.w) * inv2h, (-3 * a0.x + 4 * a1.x - a2.x) * inv2h,
              (-3 * a0.y + 4 * a1.y - a2.y) * inv2h, (-3 * a0.z + 4 * a1.z - a2.z) * inv2h};
    }
    if (c == n - 1) {
      Quat a0 = at(0), a1 = at(-1), a2 = at(-2);
      return {(3 * a0.w - 4 * a1.w + a2.w) * inv2h, (3 * a0.x - 4 * a1.x + a2.x) * inv2h,
              (3 * a0.y - 4 * a1.y + a2.y) * inv2h, (3 * a0.z - 4 * a1.z + a2.z) * inv2h};
    }
  }
  return sub(at(1), at(-1), inv2h);
}

}  // namespace

Configuration apply_gauge(const Configuration& cfg, const GaugeField& g) {
  const Grid& gr = cfg.grid;
  if (!gr.same_dims(g.grid)) throw NonconformingGauge("apply_gauge: dims mismatch");
  for (std::size_t s = 0; s < gr.size(); ++s)
    if (std::abs(qnorm(g.get(s)) - 1.0) > 1e-12)
      throw NonconformingGauge("apply_gauge: non-unit quaternion");
  if (gr.boundary == Boundary::Dirichlet) {
    for (int64_t k = 0; k < gr.n3; ++k)
      for (int64_t j = 0; j < gr.n2; ++j)
        for (int64_t i = 0; i < gr.n1; ++i) {
          if (!gr.on_boundary(i, j, k)) continue;
          Quat q = g.get(gr.idx(i, j, k));
          if (std::abs(q.w - 1.0) > 1e-12 || std::abs(q.x) > 1e-12 ||
              std::abs(q.y) > 1e-12 || std::abs(q.z) > 1e-12)
            throw NonconformingGauge("apply_gauge: non-identity on Dirichlet boundary");
        }
  }
  Configuration out(gr);
  for (int64_t k = 0; k < gr.n3; ++k)
    for (int64_t j = 0; j < gr.n2; ++j)
      for (int64_t i = 0; i < gr.n1; ++i) {
        std::size_t s = gr.idx(i, j, k);
        Quat q = g.get(s);
        out.phi.set(s, adjoint(q, cfg.phi.get(s)));
        for (int a = 0; a < 3; ++a) {
          Quat d = dginv(g, i, j, k, a);
          Quat p = qmul(q, d);  // pure quaternion up to roundoff
          // su(2) coefficients of g dg^-1: c_a = -2 * vector part
          Su2 gdg{-2.0 * p.x, -2.0 * p.y, -2.0 * p.z};
          out.A.set(s, a, gdg + adjoint(q, cfg.A.get(s, a)));
        }
      }
  return out;
}

double dstar_A_norm(const Configuration& cfg) {
  const Grid& g = cfg.grid;
  std::vector<double> terms(g.size());
  auto A_at = [&](int d) {
    return [&, d](int64_t i, int64_t j, int64_t k) {
      return detail::sample_A(cfg.A, i, j, k, d);
    };
  };
  for (int64_t k = 0; k < g.n3; ++k)
    for (int64_t j = 0; j < g.n2; ++j)
      for (int64_t i = 0; i < g.n1; ++i) {
        Su2 acc{};
        for (int a = 0; a < 3; ++a) acc -= detail::deriv(g, i, j, k, a, A_at(a));
        terms[g.idx(i, j, k)] = norm2(acc);
      }
  return std::sqrt(g.h * g.h * g.h * pairwise_sum(terms));
}

CoulombResult coulomb_project(const Configuration& cfg, double tol, int max_iter) {
  const Grid& g = cfg.grid;
  if (g.boundary != Boundary::Periodic || g.twist_n != 0)
    throw ValidationError("coulomb_project: requires untwisted periodic grid");
  CoulombResult res{cfg, dstar_A_norm(cfg), 0, false};
  if (res.dstar_norm <= tol) {
    res.converged = true;
    return res;
  }
  for (int it = 0; it < max_iter; ++it) {
    // abelianized update: solve (d*d) chi = d*A componentwise
    std::array<ScalarField, 3> src{ScalarField(g), ScalarField(g), ScalarField(g)};
    auto A_at = [&](int d) {
      return [&, d](int64_t i, int64_t j, int64_t k) {
        return detail::sample_A(res.cfg.A, i, j, k, d);
      };
    };
    for (int64_t k = 0; k < g.n3; ++k)
      for (int64_t j = 0; j < g.n2; ++j)
        for (int64_t i = 0; i < g.n1; ++i) {
          Su2 acc{};
          for (int a = 0; a < 3; ++a) acc -= detail::deriv(g, i, j, k, a, A_at(a));
          std::size_t s = g.idx(i, j, k);
          src[0].v[s] = acc.c1; src[1].v[s] = acc.c2; src[2].v[s] = acc.c3;
        }
    std::array<ScalarField, 3> chi{poisson_centered(src[0]), poisson_centered(src[1]),
                                   poisson_centered(src[2])};
    double damp = 1.0;
    bool accepted = false;
    for (int attempt = 0; attempt < 8; ++attempt) {
      GaugeField gf(g);
      for (std::size_t s = 0; s < g.size(); ++s)
        gf.set(s, exp_su2(Su2{chi[0].v[s], chi[1].v[s], chi[2].v[s]} * damp));
      Configuration trial = apply_gauge(res.cfg, gf);
      double nn = dstar_A_norm(trial);
      if (nn < res.dstar_norm) {
        res.cfg = std::move(trial);
        res.dstar_norm = nn;
        accepted = true;
        break;
      }
      damp *= 0.5;
    }
    res.iterations = it + 1;
    if (!accepted) return res;  // best iterate, not converged
    if (res.dstar_norm <= tol) {
      res.converged = true;
      return res;
    }
  }
  return res;
}

Configuration reducible_pair(const Grid& grid) {
  if (grid.boundary != Boundary::Periodic)
    throw ValidationError("reducible_pair: periodic grid required");
  Configuration cfg(grid);
  const double B = 2.0 * M_PI * grid.twist_n / (grid.len(0) * grid.len(1));
  for (int64_t k = 0; k < grid.n3; ++k)
    for (int64_t j = 0; j < grid.n2; ++j)
      for (int64_t i = 0; i < grid.n1; ++i) {
        std::size_t s = grid.idx(i, j, k);
        cfg.A.set(s, 1, Su2{0, 0, B * i * grid.h});
        cfg.phi.set(s, Su2{0, 0, 1});
      }
  return cfg;
}

}  // namespace ymh
