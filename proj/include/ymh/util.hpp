#pragma once
#include <cstddef>
#include <span>
#include <vector>

namespace ymh {

// Deterministic pairwise summation (fixed order, reproducible bit-for-bit).
inline double pairwise_sum(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n <= 8) {
    double s = 0;
    for (double t : x) s += t;
    return s;
  }
  std::size_t half = n / 2;
  return pairwise_sum(x.subspan(0, half)) + pairwise_sum(x.subspan(half));
}

inline double pairwise_sum(const std::vector<double>& x) {
  return pairwise_sum(std::span<const double>(x.data(), x.size()));
}

// An accumulator that buffers terms and sums them pairwise.
class PairwiseAcc {
 public:
  void add(double t) { buf_.push_back(t); }
  double total() const { return pairwise_sum(buf_); }
  void reserve(std::size_t n) { buf_.reserve(n); }

 private:
  std::vector<double> buf_;
};

struct LinFit {
  double slope, intercept, r2;
};

// Least-squares line fit y = slope*x + intercept with R^2.
inline LinFit linear_fit(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i]; sy += y[i];
    sxx += x[i] * x[i]; sxy += x[i] * y[i]; syy += y[i] * y[i];
  }
  double d = n * sxx - sx * sx;
  LinFit f{};
  f.slope = (n * sxy - sx * sy) / d;
  f.intercept = (sy - f.slope * sx) / n;
  double ss_tot = syy - sy * sy / n;
  double ss_res = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double e = y[i] - (f.slope * x[i] + f.intercept);
    ss_res += e * e;
  }
  f.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return f;
}

}  // namespace ymh
