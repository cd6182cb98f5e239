#pragma once
#include <memory>
#include <vector>

#include "bskdv/grid.hpp"

namespace bskdv {

// Discrete Laplacian.
//   line:   Fourier multiplier -k^2
//   radial: conservative flux form over the shell volumes, zero flux at the
//           origin, Dirichlet closure (odd ghost) at r = R
Field apply_laplacian(const Field& f);

// composition of the discrete Laplacian with itself
Field apply_bilaplacian(const Field& f);

// (Delta^2 + lambda)^{-1} on one grid; factorization built once and reused
class ShiftedSolver {
 public:
  ShiftedSolver(GridPtr grid, double lambda);
  ~ShiftedSolver();
  ShiftedSolver(const ShiftedSolver&) = delete;
  ShiftedSolver& operator=(const ShiftedSolver&) = delete;

  Field solve(const Field& rhs) const;
  double lambda() const { return lambda_; }
  const GridPtr& grid() const { return grid_; }

 private:
  GridPtr grid_;
  double lambda_;
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// cached convenience wrapper; factorizations are shared per (grid, lambda)
Field solve_shifted_bilaplacian(const Field& rhs, double lambda);
std::shared_ptr<const ShiftedSolver> shifted_solver(GridPtr grid, double lambda);

// <a,b>_lambda = integral(Delta a * Delta b) + lambda * integral(a b)
double inner_product(const Field& a, const Field& b, double lambda);
double norm_sq(const Field& a, double lambda);

// translate a line profile by +a (periodic, trigonometric)
Field line_shift(const Field& f, double a);

// x -> profile(scale * x) resampled onto the source grid.
// line: band-limited evaluation; radial: cubic spline, even at the origin,
// zero beyond the truncation radius. Rejects scalings that would push
// a non-negligible part of the profile outside the domain.
Field rescale_profile(const Field& f, double scale);

}  // namespace bskdv
