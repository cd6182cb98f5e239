#include <cmath>

#include "bskdv/errors.hpp"
#include "bskdv/wave.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bskdv;
namespace tu = testutil;

TEST_CASE("wave reconstruction needs a line grid") {
  auto g = tu::radial_grid(64, 8.0, 3);
  State s{Field(g), Field(g)};
  CHECK_THROWS_AS(reconstruct_wave(s, 0.5, 1.0, 1.0), invalid_param);
}

TEST_CASE("time zero returns the stationary pair") {
  std::mt19937_64 rng(201);
  auto g = tu::line_grid(128, 10.0);
  State s = tu::random_state(g, rng);
  auto [fr, fi, gv] = reconstruct_wave(s, 0.0, 1.3, 0.7);
  for (std::size_t i = 0; i < g->n; ++i) {
    CHECK(fr[i] == s.u[i]);
    CHECK(fi[i] == 0.0);
    CHECK(gv[i] == doctest::Approx(s.v[i]).epsilon(1e-12));
  }
}

TEST_CASE("phase rotation preserves the modulus") {
  std::mt19937_64 rng(211);
  auto g = tu::line_grid(128, 10.0);
  State s = tu::random_state(g, rng);
  for (double t : {0.3, 1.7, 12.9}) {
    auto [fr, fi, gv] = reconstruct_wave(s, t, 2.1, 0.9);
    for (std::size_t i = 0; i < g->n; ++i) {
      const double mod = std::sqrt(fr[i] * fr[i] + fi[i] * fi[i]);
      CHECK(mod == doctest::Approx(std::fabs(s.u[i])).epsilon(1e-12));
    }
  }
}

TEST_CASE("first component rotates with the stated frequency") {
  std::mt19937_64 rng(221);
  auto g = tu::line_grid(128, 10.0);
  State s = tu::random_state(g, rng);
  const double l1 = 1.7, t = 0.5;
  auto [fr, fi, gv] = reconstruct_wave(s, t, l1, 1.0);
  for (std::size_t i = 0; i < g->n; ++i) {
    CHECK(fr[i] == doctest::Approx(std::cos(l1 * t) * s.u[i]).epsilon(1e-14));
    CHECK(fi[i] == doctest::Approx(std::sin(l1 * t) * s.u[i]).epsilon(1e-14));
  }
}

TEST_CASE("second component translates; a one-cell shift is an index roll") {
  std::mt19937_64 rng(231);
  auto g = tu::line_grid(128, 10.0);
  State s = tu::random_state(g, rng);
  const double l2 = 0.8;
  const double t = g->spacing() / l2;
  auto [fr, fi, gv] = reconstruct_wave(s, t, 1.0, l2);
  for (std::size_t i = 0; i < g->n; ++i) {
    const std::size_t j = (i + g->n - 1) % g->n;
    CHECK(std::fabs(gv[i] - s.v[j]) < 1e-10);
  }
}
