#include "interp.hpp"

#include <algorithm>
#include <cstddef>

#include "bskdv/errors.hpp"

namespace bskdv::detail {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 3 || y_.size() != n) throw invalid_param("CubicSpline: need >= 3 points");
  d2_.assign(n, 0.0);
  std::vector<double> u(n, 0.0);
  // tridiagonal sweep for the second derivatives, natural ends
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double sig = (x_[i] - x_[i - 1]) / (x_[i + 1] - x_[i - 1]);
    const double p = sig * d2_[i - 1] + 2.0;
    d2_[i] = (sig - 1.0) / p;
    const double slope = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]) -
                         (y_[i] - y_[i - 1]) / (x_[i] - x_[i - 1]);
    u[i] = (6.0 * slope / (x_[i + 1] - x_[i - 1]) - sig * u[i - 1]) / p;
  }
  for (std::size_t i = n - 1; i-- > 1;) d2_[i] = d2_[i] * d2_[i + 1] + u[i];
  d2_[0] = d2_[n - 1] = 0.0;
}

double CubicSpline::operator()(double q) const {
  const std::size_t n = x_.size();
  if (q <= x_.front()) q = x_.front();
  if (q >= x_.back()) q = x_.back();
  const auto it = std::upper_bound(x_.begin(), x_.end(), q);
  std::size_t hi = std::min<std::size_t>(std::size_t(it - x_.begin()), n - 1);
  if (hi == 0) hi = 1;
  const std::size_t lo = hi - 1;
  const double h = x_[hi] - x_[lo];
  const double a = (x_[hi] - q) / h;
  const double b = (q - x_[lo]) / h;
  return a * y_[lo] + b * y_[hi] +
         ((a * a * a - a) * d2_[lo] + (b * b * b - b) * d2_[hi]) * h * h / 6.0;
}

}  // namespace bskdv::detail
