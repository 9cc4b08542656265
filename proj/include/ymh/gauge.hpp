#pragma once
#include <cmath>
#include <vector>
#include "ymh/fields.hpp"

namespace ymh {

// Unit quaternion representing an SU(2) element; T_a corresponds to -u_a/2 so
// that exp of the su(2) coefficient triple c has half-angle |c|/2.
struct Quat {
  double w = 1, x = 0, y = 0, z = 0;
};

inline Quat qmul(const Quat& a, const Quat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}
inline Quat qconj(const Quat& a) { return {a.w, -a.x, -a.y, -a.z}; }
inline double qnorm(const Quat& a) {
  return std::sqrt(a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z);
}

// Closed-form exponential: exp(c . T) as a unit quaternion.
Quat exp_su2(const Su2& c);

// Adjoint action g X g^-1 on su(2) coefficients (a rotation).
Su2 adjoint(const Quat& q, const Su2& v);

struct GaugeField {
  Grid grid;
  std::vector<double> q;  // 4 per site (w,x,y,z)
  GaugeField() = default;
  explicit GaugeField(const Grid& g) : grid(g), q(4 * g.size()) {
    for (std::size_t s = 0; s < g.size(); ++s) q[4 * s] = 1.0;  // identity
  }
  Quat get(std::size_t s) const {
    return {q[4 * s], q[4 * s + 1], q[4 * s + 2], q[4 * s + 3]};
  }
  void set(std::size_t s, const Quat& v) {
    q[4 * s] = v.w; q[4 * s + 1] = v.x; q[4 * s + 2] = v.y; q[4 * s + 3] = v.z;
  }
};

// (A, Phi) -> (g dg^-1 + g A g^-1, g Phi g^-1), dg^-1 by centered differences
Configuration apply_gauge(const Configuration& cfg, const GaugeField& g);

struct CoulombResult {
  Configuration cfg;
  double dstar_norm = 0;  // final ||d*A||_L2
  int iterations = 0;
  bool converged = false;
};
// Iterative linearized Coulomb projection toward d*A = 0 (periodic, untwisted)
CoulombResult coulomb_project(const Configuration& cfg, double tol, int max_iter);

// ||d*A||_L2 with centered differences, abelian codifferential
double dstar_A_norm(const Configuration& cfg);

// Constant-flux reducible solution on the twisted torus:
// A_y = (2 pi n/(Lx Ly)) x T3, Phi = T3
Configuration reducible_pair(const Grid& grid);

}  // namespace ymh
