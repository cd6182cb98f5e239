#pragma once
#include <vector>

namespace bskdv::detail {

// natural cubic spline through strictly increasing abscissae
class CubicSpline {
 public:
  CubicSpline(std::vector<double> x, std::vector<double> y);
  double operator()(double q) const;

 private:
  std::vector<double> x_, y_, d2_;
};

}  // namespace bskdv::detail
