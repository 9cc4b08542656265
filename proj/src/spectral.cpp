#include "ymh/spectral.hpp"
#include "ymh/errors.hpp"
#include <complex>
#include <fftw3.h>

namespace ymh {

namespace {

using cd = std::complex<double>;
using std::int64_t;

struct Fft {
  const Grid& g;
  std::size_t nreal, ncplx;
  std::vector<double> re;
  std::vector<cd> co;
  fftw_plan fwd, bwd;

  explicit Fft(const Grid& grid) : g(grid) {
    if (g.boundary != Boundary::Periodic || g.twist_n != 0)
      throw ValidationError("spectral ops require an untwisted periodic grid");
    nreal = g.size();
    ncplx = (std::size_t)g.n3 * g.n2 * (g.n1 / 2 + 1);
    re.resize(nreal);
    co.resize(ncplx);
    fwd = fftw_plan_dft_r2c_3d((int)g.n3, (int)g.n2, (int)g.n1, re.data(),
                               reinterpret_cast<fftw_complex*>(co.data()), FFTW_ESTIMATE);
    bwd = fftw_plan_dft_c2r_3d((int)g.n3, (int)g.n2, (int)g.n1,
                               reinterpret_cast<fftw_complex*>(co.data()), re.data(),
                               FFTW_ESTIMATE);
  }
  ~Fft() {
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }
  std::vector<cd> forward(const ScalarField& f) {
    re = f.v;
    fftw_execute(fwd);
    return co;
  }
  ScalarField inverse(const std::vector<cd>& spec) {
    co = spec;
    fftw_execute(bwd);
    ScalarField out(g);
    const double inv = 1.0 / (double)nreal;
    for (std::size_t s = 0; s < nreal; ++s) out.v[s] = re[s] * inv;
    return out;
  }
  // centered-difference symbols s_a = sin(2 pi f_a / n_a)/h at a complex-array
  // index; mode index layout is (k, j, i) with i halved
  void symbols(std::size_t m, double s[3]) const {
    std::size_t nx = (std::size_t)(g.n1 / 2 + 1);
    int64_t i = (int64_t)(m % nx);
    int64_t j = (int64_t)((m / nx) % (std::size_t)g.n2);
    int64_t k = (int64_t)(m / (nx * (std::size_t)g.n2));
    // exact zero at DC and Nyquist: sin(pi) in floating point is ~1e-16, and
    // dividing by its square would amplify roundoff by ~1e30
    auto sym = [](int64_t f, int64_t n, double h) {
      if (f == 0 || 2 * f == n) return 0.0;
      return std::sin(2.0 * M_PI * f / n) / h;
    };
    s[0] = sym(i, g.n1, g.h);
    s[1] = sym(j, g.n2, g.h);
    s[2] = sym(k, g.n3, g.h);
  }
};

}  // namespace

ScalarField poisson_centered(const ScalarField& src) {
  Fft fft(src.grid);
  std::vector<cd> spec = fft.forward(src);
  for (std::size_t m = 0; m < fft.ncplx; ++m) {
    double s[3];
    fft.symbols(m, s);
    double sym = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
    spec[m] = sym > 1e-300 ? spec[m] / sym : cd{0, 0};
  }
  return fft.inverse(spec);
}

HodgeSplit hodge_decompose(const Grid& g, const std::array<ScalarField, 3>& omega) {
  Fft fft(g);
  std::array<std::vector<cd>, 3> W;
  for (int a = 0; a < 3; ++a) W[a] = fft.forward(omega[a]);

  HodgeSplit out;
  const double invN = 1.0 / (double)g.size();
  for (int a = 0; a < 3; ++a) out.h[a] = W[a][0].real() * invN;

  std::vector<cd> fh(fft.ncplx, cd{0, 0});
  std::array<std::vector<cd>, 3> dfh, al, da;
  for (int a = 0; a < 3; ++a) {
    dfh[a].assign(fft.ncplx, cd{0, 0});
    al[a].assign(fft.ncplx, cd{0, 0});
    da[a].assign(fft.ncplx, cd{0, 0});
  }
  const cd I{0, 1};
  for (std::size_t m = 1; m < fft.ncplx; ++m) {
    double s[3];
    fft.symbols(m, s);
    double sym = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
    if (sym <= 1e-300) continue;  // kernel modes of the centered difference
    cd D[3] = {I * s[0], I * s[1], I * s[2]};
    cd f = (std::conj(D[0]) * W[0][m] + std::conj(D[1]) * W[1][m] +
            std::conj(D[2]) * W[2][m]) / sym;
    fh[m] = f;
    cd t[3];
    for (int a = 0; a < 3; ++a) {
      dfh[a][m] = D[a] * f;
      t[a] = W[a][m] - dfh[a][m];
    }
    // alpha planes (xy, yz, zx)
    al[0][m] = (D[0] * t[1] - D[1] * t[0]) / sym;
    al[1][m] = (D[1] * t[2] - D[2] * t[1]) / sym;
    al[2][m] = (D[2] * t[0] - D[0] * t[2]) / sym;
    // (d*alpha)_x = d_y a_xy - d_z a_zx, etc.
    da[0][m] = D[1] * al[0][m] - D[2] * al[2][m];
    da[1][m] = D[2] * al[1][m] - D[0] * al[0][m];
    da[2][m] = D[0] * al[2][m] - D[1] * al[1][m];
  }
  out.f = fft.inverse(fh);
  for (int a = 0; a < 3; ++a) {
    out.alpha[a] = fft.inverse(al[a]);
    out.df[a] = fft.inverse(dfh[a]);
    out.dstar_alpha[a] = fft.inverse(da[a]);
  }
  return out;
}

}  // namespace ymh
