#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <random>
#include "helpers.hpp"
#include "ymh/gauge.hpp"
#include "ymh/measures.hpp"
#include "ymh/ops.hpp"
#include "ymh/spectral.hpp"

using namespace ymh;
using namespace ymh::test;

namespace {

double dot(const ScalarField& a, const ScalarField& b, double w) {
  double s = 0;
  for (std::size_t i = 0; i < a.v.size(); ++i) s += a.v[i] * b.v[i];
  return s * w;
}

double l2_one_form(const std::array<ScalarField, 3>& f, double w) {
  double s = 0;
  for (int a = 0; a < 3; ++a) s += dot(f[a], f[a], w);
  return s;
}

double pair_one_forms(const std::array<ScalarField, 3>& f,
                      const std::array<ScalarField, 3>& g, double w) {
  double s = 0;
  for (int a = 0; a < 3; ++a) s += dot(f[a], g[a], w);
  return s;
}

}  // namespace

TEST_CASE("poisson solve inverts the centered Laplacian on a Fourier mode") {
  Grid g(16, 16, 16, 1.0 / 16, Boundary::Periodic);
  const double tp = 2.0 * M_PI;
  ScalarField u(g);
  for (std::int64_t k = 0; k < g.n3; ++k)
    for (std::int64_t j = 0; j < g.n2; ++j)
      for (std::int64_t i = 0; i < g.n1; ++i)
        u[g.idx(i, j, k)] = std::sin(tp * i / g.n1) * std::cos(tp * 2 * j / g.n2);

  // eigenvalue of the centered second difference built from first differences
  double s1 = std::sin(tp / g.n1) / g.h, s2 = std::sin(tp * 2 / g.n2) / g.h;
  double lam = s1 * s1 + s2 * s2;
  ScalarField src(g);
  for (std::size_t s = 0; s < g.size(); ++s) src[s] = lam * u[s];

  ScalarField sol = poisson_centered(src);
  for (std::size_t s = 0; s < g.size(); ++s)
    CHECK(std::fabs(sol[s] - u[s]) <= 1e-12);
}

TEST_CASE("synthetic gradient omega decomposes as (0, f, 0)") {
  Grid g(16, 16, 16, 1.0 / 16, Boundary::Periodic);
  const double tp = 2.0 * M_PI;
  // exact centered gradient of a smooth scalar, so the discrete decomposition
  // must place everything in df
  ScalarField f0(g);
  for (std::int64_t k = 0; k < g.n3; ++k)
    for (std::int64_t j = 0; j < g.n2; ++j)
      for (std::int64_t i = 0; i < g.n1; ++i)
        f0[g.idx(i, j, k)] = std::sin(tp * i / g.n1) * std::cos(tp * j / g.n2) +
                             0.3 * std::sin(tp * 2 * k / g.n3);
  std::array<ScalarField, 3> omega;
  for (auto& w : omega) w = ScalarField(g);
  auto wrap = [&](std::int64_t i, std::int64_t n) { return (i + n) % n; };
  for (std::int64_t k = 0; k < g.n3; ++k)
    for (std::int64_t j = 0; j < g.n2; ++j)
      for (std::int64_t i = 0; i < g.n1; ++i) {
        std::size_t s = g.idx(i, j, k);
        omega[0][s] = (f0[g.idx(wrap(i + 1, g.n1), j, k)] -
                       f0[g.idx(wrap(i - 1, g.n1), j, k)]) / (2 * g.h);
        omega[1][s] = (f0[g.idx(i, wrap(j + 1, g.n2), k)] -
                       f0[g.idx(i, wrap(j - 1, g.n2), k)]) / (2 * g.h);
        omega[2][s] = (f0[g.idx(i, j, wrap(k + 1, g.n3))] -
                       f0[g.idx(i, j, wrap(k - 1, g.n3))]) / (2 * g.h);
      }

  HodgeSplit hs = hodge_decompose(g, omega);
  for (int a = 0; a < 3; ++a) CHECK(std::fabs(hs.h[a]) <= 1e-12);
  double w = g.h * g.h * g.h;
  CHECK(std::sqrt(l2_one_form(hs.dstar_alpha, w)) <= 1e-10);
  for (std::size_t s = 0; s < g.size(); ++s)
    for (int a = 0; a < 3; ++a)
      CHECK(std::fabs(hs.df[a][s] - omega[a][s]) <= 1e-10);
  // f matches f0 up to its mean
  double mean = 0;
  for (double v : f0.v) mean += v;
  mean /= (double)g.size();
  for (std::size_t s = 0; s < g.size(); ++s)
    CHECK(std::fabs(hs.f[s] - (f0[s] - mean)) <= 1e-10);
}

TEST_CASE("random smooth omega: reconstruction, orthogonality, Pythagoras") {
  Grid g(12, 16, 12, 0.1, Boundary::Periodic);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  const double tp = 2.0 * M_PI;
  std::array<ScalarField, 3> omega;
  for (auto& w : omega) w = ScalarField(g);
  // band-limited random field: a handful of low modes per component
  for (int a = 0; a < 3; ++a)
    for (int m = 0; m < 6; ++m) {
      int f1 = (int)(rng() % 3), f2 = (int)(rng() % 3), f3 = (int)(rng() % 3);
      double c = amp(rng), ph1 = amp(rng) * M_PI, ph2 = amp(rng) * M_PI;
      for (std::int64_t k = 0; k < g.n3; ++k)
        for (std::int64_t j = 0; j < g.n2; ++j)
          for (std::int64_t i = 0; i < g.n1; ++i)
            omega[a][g.idx(i, j, k)] +=
                c * std::sin(tp * f1 * i / g.n1 + ph1) *
                std::cos(tp * (f2 * j / (double)g.n2 + f3 * k / (double)g.n3) + ph2);
    }

  HodgeSplit hs = hodge_decompose(g, omega);
  const double w = g.h * g.h * g.h;

  std::array<ScalarField, 3> hc, resid;
  for (int a = 0; a < 3; ++a) {
    hc[a] = ScalarField(g);
    resid[a] = ScalarField(g);
    for (std::size_t s = 0; s < g.size(); ++s) {
      hc[a][s] = hs.h[a];
      resid[a][s] = omega[a][s] - hs.h[a] - hs.df[a][s] - hs.dstar_alpha[a][s];
    }
  }
  double total = std::sqrt(l2_one_form(omega, w));
  CHECK(total > 0.1);  // guard against a degenerate draw
  CHECK(std::sqrt(l2_one_form(resid, w)) <= 1e-10 * total);

  // mutual orthogonality
  CHECK(std::fabs(pair_one_forms(hc, hs.df, w)) <= 1e-10 * total * total);
  CHECK(std::fabs(pair_one_forms(hc, hs.dstar_alpha, w)) <= 1e-10 * total * total);
  CHECK(std::fabs(pair_one_forms(hs.df, hs.dstar_alpha, w)) <= 1e-10 * total * total);

  // Pythagoras
  double sum = l2_one_form(hc, w) + l2_one_form(hs.df, w) + l2_one_form(hs.dstar_alpha, w);
  CHECK(sum == doctest::Approx(total * total).epsilon(1e-10));

  // df and d*alpha have zero mean componentwise
  for (int a = 0; a < 3; ++a) {
    double m1 = 0, m2 = 0;
    for (std::size_t s = 0; s < g.size(); ++s) {
      m1 += hs.df[a][s];
      m2 += hs.dstar_alpha[a][s];
    }
    CHECK(std::fabs(m1) / (double)g.size() <= 1e-12);
    CHECK(std::fabs(m2) / (double)g.size() <= 1e-12);
  }
}

TEST_CASE("longitudinal form of the reducible pair is purely harmonic") {
  Grid g(16, 16, 8, 1.0 / 16, Boundary::Periodic, 1);
  Configuration red = reducible_pair(g);
  EnergyParams p(0.5, 1.0);

  HodgeSplit hs = hodge_longitudinal(red, p);
  double w = g.h * g.h * g.h;
  double hn2 = hs.h[0] * hs.h[0] + hs.h[1] * hs.h[1] + hs.h[2] * hs.h[2];
  CHECK(hn2 > 1e-6);
  CHECK(std::sqrt(l2_one_form(hs.df, w)) <= 1e-10 * std::sqrt(hn2));
  CHECK(std::sqrt(l2_one_form(hs.dstar_alpha, w)) <= 1e-10 * std::sqrt(hn2));

  // |h|^2 equals the mean of eps |<F,Phi>|^2 over the box
  TwoForm F = curvature(red);
  double acc = 0;
  for (std::size_t s = 0; s < g.size(); ++s) {
    double v2 = 0;
    for (int a = 0; a < 3; ++a) {
      double c = inner(star_two(F, s, a), red.phi.get(s));
      v2 += c * c;
    }
    acc += p.epsilon * v2;
  }
  acc /= (double)g.size();
  CHECK(hn2 == doctest::Approx(acc).epsilon(1e-10));
}

TEST_CASE("spectral ops reject twisted or Dirichlet grids") {
  std::array<ScalarField, 3> omega;
  Grid gd(8, 8, 8, 0.1, Boundary::Dirichlet);
  for (auto& w : omega) w = ScalarField(gd);
  CHECK_THROWS_AS(hodge_decompose(gd, omega), ValidationError);
  CHECK_THROWS_AS(poisson_centered(ScalarField(gd)), ValidationError);

  Grid gt(8, 8, 8, 0.1, Boundary::Periodic, 1);
  for (auto& w : omega) w = ScalarField(gt);
  CHECK_THROWS_AS(hodge_decompose(gt, omega), ValidationError);
}
