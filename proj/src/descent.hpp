#pragma once
#include "bskdv/solve.hpp"

// shared projected-descent driver: step along the negative Riesz gradient,
// reproject onto the manifold, backtrack until sufficient decrease
namespace bskdv::detail {

struct DescentResult {
  State s;
  SolveReport rep;
};

DescentResult run_descent(const Params& p, State init, const SolveOptions& opts);

// positive Gaussian bump amp * exp(-|x|^2 / (2 sigma^2)) on any grid
Field gaussian_bump(const GridPtr& grid, double amp, double sigma);

}  // namespace bskdv::detail
