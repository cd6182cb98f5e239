#pragma once
#include <cmath>
#include <random>

#include "bskdv/functional.hpp"
#include "bskdv/grid.hpp"

namespace testutil {

inline bskdv::GridPtr line_grid(std::size_t n = 256, double L = 20.0) {
  return bskdv::make_grid(bskdv::GridKind::line, n, L, 1);
}

inline bskdv::GridPtr radial_grid(std::size_t n = 128, double R = 15.0, int dimN = 3) {
  return bskdv::make_grid(bskdv::GridKind::radial, n, R, dimN);
}

// superposition of a few bumps; decays well inside the domain
inline bskdv::Field random_field(bskdv::GridPtr grid, std::mt19937_64& rng, double amp = 1.0) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0), width(0.6, 2.5);
  const double extent = grid->extent;
  bskdv::Field f(grid);
  for (int b = 0; b < 3; ++b) {
    const double a = amp * unit(rng);
    const double c = 0.35 * extent * (grid->kind == bskdv::GridKind::line ? unit(rng) : 0.5 * (unit(rng) + 1.0));
    const double w = width(rng);
    for (std::size_t i = 0; i < grid->n; ++i) {
      const double x = grid->nodes[i] - c;
      f.values[i] += a * std::exp(-x * x / (2.0 * w * w));
    }
  }
  return f;
}

inline bskdv::State random_state(bskdv::GridPtr grid, std::mt19937_64& rng, double amp = 1.0) {
  return bskdv::State(random_field(grid, rng, amp), random_field(grid, rng, amp));
}

// random state pushed onto the manifold; retries until the projection exists
inline bskdv::State random_on_manifold(const bskdv::Params& p, bskdv::GridPtr grid,
                                       std::mt19937_64& rng) {
  for (int tries = 0; tries < 100; ++tries) {
    try {
      return bskdv::nehari_project(p, random_state(grid, rng));
    } catch (const std::exception&) {
    }
  }
  throw std::runtime_error("random_on_manifold: no projectable sample in 100 draws");
}

inline double rel_diff(double a, double b) {
  const double scale = std::max({1e-300, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) / scale;
}

}  // namespace testutil
