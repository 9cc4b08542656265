#pragma once
#include <cstddef>
#include <cstdint>
#include <vector>
#include "ymh/su2.hpp"
#include "ymh/errors.hpp"

namespace ymh {

enum class Boundary { Periodic, Dirichlet };

// Flat 3-domain. Site (i,j,k) sits at (i*h, j*h, k*h). For periodic grids the
// period is n*h per axis; Dirichlet grids occupy [0,(n-1)*h] with the face
// sites acting as the frozen boundary closure. twist_n is the abelian flux
// quantum applied on the x-wrap (periodic only).
struct Grid {
  std::int64_t n1 = 0, n2 = 0, n3 = 0;
  double h = 0;
  Boundary boundary = Boundary::Periodic;
  std::int64_t twist_n = 0;

  Grid() = default;
  Grid(std::int64_t a, std::int64_t b, std::int64_t c, double spacing,
       Boundary bc, std::int64_t twist = 0)
      : n1(a), n2(b), n3(c), h(spacing), boundary(bc), twist_n(twist) {
    if (n1 < 4 || n2 < 4 || n3 < 4) throw ValidationError("grid dims must be >= 4");
    if (h <= 0) throw ValidationError("grid spacing must be > 0");
    if (boundary == Boundary::Dirichlet && twist_n != 0)
      throw ValidationError("twist requires periodic boundary");
  }

  std::size_t size() const {
    return static_cast<std::size_t>(n1) * n2 * n3;
  }
  std::size_t idx(std::int64_t i, std::int64_t j, std::int64_t k) const {
    return (static_cast<std::size_t>(k) * n2 + j) * n1 + i;
  }
  double len(int axis) const {
    std::int64_t n = axis == 0 ? n1 : axis == 1 ? n2 : n3;
    return boundary == Boundary::Periodic ? n * h : (n - 1) * h;
  }
  // geometric center of the domain
  void center(double c[3]) const {
    c[0] = 0.5 * len(0);
    c[1] = 0.5 * len(1);
    c[2] = 0.5 * len(2);
    if (boundary == Boundary::Periodic) {
      // align with a site-cell center convention: period midpoint
      c[0] = 0.5 * n1 * h; c[1] = 0.5 * n2 * h; c[2] = 0.5 * n3 * h;
    }
  }
  bool on_boundary(std::int64_t i, std::int64_t j, std::int64_t k) const {
    if (boundary == Boundary::Periodic) return false;
    return i == 0 || i == n1 - 1 || j == 0 || j == n2 - 1 || k == 0 || k == n3 - 1;
  }
  bool same_dims(const Grid& o) const {
    return n1 == o.n1 && n2 == o.n2 && n3 == o.n3;
  }
};

struct ScalarField {
  Grid grid;
  std::vector<double> v;
  ScalarField() = default;
  explicit ScalarField(const Grid& g) : grid(g), v(g.size(), 0.0) {}
  double& operator[](std::size_t s) { return v[s]; }
  double operator[](std::size_t s) const { return v[s]; }
};

// su(2)-valued per-site field (Higgs and friends)
struct Su2Field {
  Grid grid;
  std::vector<double> v;  // 3 coefficients per site
  Su2Field() = default;
  explicit Su2Field(const Grid& g) : grid(g), v(3 * g.size(), 0.0) {}
  Su2 get(std::size_t s) const { return {v[3 * s], v[3 * s + 1], v[3 * s + 2]}; }
  void set(std::size_t s, const Su2& a) {
    v[3 * s] = a.c1; v[3 * s + 1] = a.c2; v[3 * s + 2] = a.c3;
  }
  void add(std::size_t s, const Su2& a) {
    v[3 * s] += a.c1; v[3 * s + 1] += a.c2; v[3 * s + 2] += a.c3;
  }
};

// su(2)-valued 1-form: per site, directions x,y,z each an Su2
struct OneForm {
  Grid grid;
  std::vector<double> v;  // 9 per site: dir-major (x,y,z) x 3 coefficients
  OneForm() = default;
  explicit OneForm(const Grid& g) : grid(g), v(9 * g.size(), 0.0) {}
  Su2 get(std::size_t s, int d) const {
    std::size_t o = 9 * s + 3 * d;
    return {v[o], v[o + 1], v[o + 2]};
  }
  void set(std::size_t s, int d, const Su2& a) {
    std::size_t o = 9 * s + 3 * d;
    v[o] = a.c1; v[o + 1] = a.c2; v[o + 2] = a.c3;
  }
  void add(std::size_t s, int d, const Su2& a) {
    std::size_t o = 9 * s + 3 * d;
    v[o] += a.c1; v[o + 1] += a.c2; v[o + 2] += a.c3;
  }
};

// su(2)-valued 2-form stored canonically as the (xy, yz, zx) components
struct TwoForm {
  Grid grid;
  std::vector<double> v;  // 9 per site: plane-major (xy,yz,zx) x 3 coefficients
  TwoForm() = default;
  explicit TwoForm(const Grid& g) : grid(g), v(9 * g.size(), 0.0) {}
  Su2 get(std::size_t s, int plane) const {
    std::size_t o = 9 * s + 3 * plane;
    return {v[o], v[o + 1], v[o + 2]};
  }
  void set(std::size_t s, int plane, const Su2& a) {
    std::size_t o = 9 * s + 3 * plane;
    v[o] = a.c1; v[o + 1] = a.c2; v[o + 2] = a.c3;
  }
};

// The pair (A, Phi). Immutable by convention once built; flow makes copies.
struct Configuration {
  Grid grid;
  OneForm A;
  Su2Field phi;
  Configuration() = default;
  explicit Configuration(const Grid& g) : grid(g), A(g), phi(g) {}
};

struct EnergyParams {
  double epsilon = 1.0;
  double lambda = 1.0;
  EnergyParams() = default;
  EnergyParams(double eps, double lam) : epsilon(eps), lambda(lam) {
    if (eps <= 0) throw ValidationError("epsilon must be > 0");
    if (lam < 0) throw ValidationError("lambda must be >= 0");
  }
  double mu_min() const { return lambda < 1.0 ? lambda : 1.0; }
};

struct Ball {
  double center[3];
  double r;
};

}  // namespace ymh
