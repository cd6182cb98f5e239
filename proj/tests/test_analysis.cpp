#include <cmath>
#include <cstdio>
#include <random>

#include "bskdv/analysis.hpp"
#include "bskdv/errors.hpp"
#include "bskdv/functional.hpp"
#include "bskdv/operators.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bskdv;
namespace tu = testutil;

namespace {

struct Baseline {
  GridPtr grid;
  Field V;        // unit-shift scalar ground state
  Field h_tilde;  // normalized threshold minimizer
  double lambda_crit = 0.0;
};

const Baseline& baseline() {
  static Baseline b = [] {
    Baseline out;
    out.grid = tu::line_grid(2048, 40.0);
    SolveOptions opts;
    opts.tol_grad = 1e-9;
    auto [V, rep] = solve_scalar_ground(1.0, out.grid, opts);
    REQUIRE(rep.converged);
    out.V = std::move(V);
    auto [crit, h] = lambda_threshold(out.grid, 1.0, out.V, opts);
    out.lambda_crit = crit;
    out.h_tilde = std::move(h);
    return out;
  }();
  return b;
}

Params params_with_beta(double beta, double l2 = 1.0) {
  Params p;
  p.lambda1 = 1.0;
  p.lambda2 = l2;
  p.beta = beta;
  p.dimN = 1;
  return p;
}

}  // namespace

TEST_CASE("threshold of a constant weight is exact") {
  auto g = tu::line_grid(256, 10.0);
  Field c(g);
  for (auto& v : c.values) v = 4.0;
  SolveOptions opts;
  auto [crit, h] = lambda_threshold(g, 2.0, c, opts);
  CHECK(crit == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(tu::rel_diff(norm_sq(h, 2.0), 1.0) < 1e-9);
}

TEST_CASE("threshold minimizer attains the infimum") {
  const auto& b = baseline();
  Field wh(b.grid);
  for (std::size_t i = 0; i < b.grid->n; ++i) wh[i] = b.V[i] * b.h_tilde[i] * b.h_tilde[i];
  const double denom = integrate(wh);
  CHECK(tu::rel_diff(norm_sq(b.h_tilde, 1.0), b.lambda_crit * denom) < 1e-9);
}

TEST_CASE("no sampled direction beats the threshold quotient") {
  const auto& b = baseline();
  std::mt19937_64 rng(181);
  int tested = 0;
  for (int rep = 0; rep < 500; ++rep) {
    Field phi = tu::random_field(b.grid, rng);
    Field wphi(b.grid);
    for (std::size_t i = 0; i < b.grid->n; ++i) wphi[i] = b.V[i] * phi[i] * phi[i];
    const double denom = integrate(wphi);
    if (denom <= 1e-12) continue;
    const double quotient = norm_sq(phi, 1.0) / denom;
    CHECK(quotient >= b.lambda_crit * (1.0 - 1e-8));
    ++tested;
  }
  CHECK(tested >= 300);
}

TEST_CASE("rest point flips from minimum to saddle across the threshold") {
  const auto& b = baseline();
  const double crit = b.lambda_crit;

  SUBCASE("weak coupling keeps a local minimum") {
    for (double beta : {0.5 * crit, 0.9 * crit}) {
      auto cls = classify_semitrivial(params_with_beta(beta), b.V, crit, b.h_tilde);
      CHECK(cls.verdict == "local-min");
      CHECK(cls.witness_value > 0.0);
      CHECK(cls.tangent_samples >= 200);
      CHECK(cls.min_tangent_value > 0.0);
    }
  }
  SUBCASE("strong coupling exposes a descent direction") {
    for (double beta : {1.1 * crit, 2.0 * crit}) {
      auto cls = classify_semitrivial(params_with_beta(beta), b.V, crit, b.h_tilde);
      CHECK(cls.verdict == "saddle");
      CHECK(cls.witness_value < 0.0);
      CHECK(cls.min_tangent_value < 0.0);
    }
  }
}

TEST_CASE("witness value matches the closed form") {
  const auto& b = baseline();
  const double crit = b.lambda_crit;
  Field wh(b.grid);
  for (std::size_t i = 0; i < b.grid->n; ++i) wh[i] = b.V[i] * b.h_tilde[i] * b.h_tilde[i];
  const double denom = integrate(wh);
  for (double beta : {0.3, 0.7, 1.4}) {
    auto cls = classify_semitrivial(params_with_beta(beta), b.V, crit, b.h_tilde);
    CHECK(tu::rel_diff(cls.witness_value, norm_sq(b.h_tilde, 1.0) - beta * denom) < 1e-8);
    CHECK(cls.witness_value ==
          doctest::Approx((crit - beta) * denom).epsilon(1e-6));
  }
}

TEST_CASE("cross directions are tangent at the rest point") {
  const auto& b = baseline();
  std::mt19937_64 rng(191);
  Params p = params_with_beta(0.8);
  State rest{Field(b.grid), b.V};
  for (int rep = 0; rep < 5; ++rep) {
    Field h1 = tu::random_field(b.grid, rng);
    State cross{h1, Field(b.grid)};
    const double scale = std::sqrt(state_norm_sq(p, cross));
    CHECK(std::fabs(nehari_directional(p, rest, cross)) <= 1e-10 * std::max(1.0, scale));

    // a general direction feels only the single-component constraint
    State h = tu::random_state(b.grid, rng);
    double jprime = 2.0 * inner_product(b.V, h.v, 1.0);
    for (std::size_t i = 0; i < b.grid->n; ++i)
      jprime -= 1.5 * b.grid->weights[i] * std::fabs(b.V[i]) * b.V[i] * h.v[i];
    const double hn = std::sqrt(state_norm_sq(p, h));
    CHECK(std::fabs(nehari_directional(p, rest, h) - jprime) <= 1e-10 * std::max(1.0, hn));
  }
}

TEST_CASE("candidate scaling root on synthetic moments") {
  auto g = tu::line_grid(64, 5.0);
  Field dummy(g);
  for (std::size_t i = 0; i < g->n; ++i)
    dummy[i] = std::exp(-g->nodes[i] * g->nodes[i]);
  auto rep = coupled_candidate(1.0, 1.0, 2.0, params_with_beta(1.0), dummy);
  REQUIRE(rep.t_star.has_value());
  CHECK(*rep.t_star == doctest::Approx(std::sqrt(6.0) - 2.0).epsilon(1e-12));
}

TEST_CASE("constructed candidate sits on the manifold at unit shift") {
  const auto& b = baseline();
  const double A = integrate_product(b.V, b.V);
  const double B = [&] {
    Field sq(b.grid);
    for (std::size_t i = 0; i < b.grid->n; ++i) sq[i] = b.V[i] * b.V[i];
    return integrate_product(sq, sq);
  }();
  const double C = integrate_product(b.V, b.V, b.V);
  for (double beta : {0.2, 1.0}) {
    Params p = params_with_beta(beta);
    auto rep = coupled_candidate(A, B, C, p, b.V);
    REQUIRE(rep.t_star.has_value());
    State w = *rep.t_star * State(b.V, b.V);
    const double psi = nehari_value(p, w);
    CHECK(std::fabs(psi) <= 1e-9 * std::max(1.0, state_norm_sq(p, w)));
    CHECK(tu::rel_diff(rep.phi_w, rep.phi_w_grid) < 1e-6);
  }
}

TEST_CASE("analytic candidate energy matches the grid after rescaling") {
  const auto& b = baseline();
  const double A = integrate_product(b.V, b.V);
  const double B = [&] {
    Field sq(b.grid);
    for (std::size_t i = 0; i < b.grid->n; ++i) sq[i] = b.V[i] * b.V[i];
    return integrate_product(sq, sq);
  }();
  const double C = integrate_product(b.V, b.V, b.V);
  const double beta = 0.2 * baseline().lambda_crit;

  auto sweep = candidate_sweep(params_with_beta(beta), b.V, 0.01, 16.0);
  REQUIRE(sweep.lambda2_threshold.has_value());
  CHECK(sweep.monotone);
  CHECK(*sweep.lambda2_threshold > 0.5);
  CHECK(*sweep.lambda2_threshold < 1.5);

  for (double l2 : {1.0, 2.0 * *sweep.lambda2_threshold}) {
    auto rep = coupled_candidate(A, B, C, params_with_beta(beta, l2), b.V);
    REQUIRE(rep.t_star.has_value());
    CHECK(std::isfinite(rep.phi_w_grid));
    CHECK(tu::rel_diff(rep.phi_w, rep.phi_w_grid) < 1e-6);
    CHECK(rep.inequality_holds);
    CHECK(rep.phi_w < rep.phi_v2);
  }
}

TEST_CASE("sweep rows are ordered and the threshold splits them") {
  const auto& b = baseline();
  const double beta = 0.2 * b.lambda_crit;
  auto sweep = candidate_sweep(params_with_beta(beta), b.V, 0.01, 16.0);
  REQUIRE(!sweep.rows.empty());
  REQUIRE(sweep.lambda2_threshold.has_value());
  const double thr = *sweep.lambda2_threshold;
  for (std::size_t i = 1; i < sweep.rows.size(); ++i)
    CHECK(sweep.rows[i].lambda2 > sweep.rows[i - 1].lambda2);
  for (const auto& row : sweep.rows) {
    if (row.lambda2 > thr * (1.0 + 1e-6)) CHECK(row.holds);
    if (row.lambda2 < thr * (1.0 - 1e-6)) CHECK(!row.holds);
  }
}

TEST_CASE("sweep csv is written with stable formatting") {
  const auto& b = baseline();
  auto sweep = candidate_sweep(params_with_beta(0.1), b.V, 0.5, 2.0);
  const std::string path = "sweep_format_test.csv";
  write_sweep_csv(path, sweep);
  std::FILE* f = std::fopen(path.c_str(), "rb");
  REQUIRE(f != nullptr);
  char head[64] = {0};
  REQUIRE(std::fgets(head, sizeof head, f) != nullptr);
  std::fclose(f);
  std::remove(path.c_str());
  CHECK(std::string(head).rfind("lambda2,", 0) == 0);
}

TEST_CASE("two beads reduce the pass level to the endpoint maximum") {
  const auto& b = baseline();
  Params p = params_with_beta(2.0 * b.lambda_crit);
  State a{Field(b.grid), b.V};
  SolveOptions opts;
  opts.tol_grad = 1e-7;
  auto [gs, rep] = solve_coupled_ground(p, b.grid, opts);
  REQUIRE(rep.converged);
  auto mp = mountain_pass_estimate(p, a, gs, 2, opts);
  CHECK(mp.bead_count == 2);
  CHECK(mp.level_m == doctest::Approx(std::max(mp.endpoint_energy_a, mp.endpoint_energy_b))
                          .epsilon(1e-12));
  CHECK(mp.converged);
}

TEST_CASE("pass level dominates both endpoints") {
  const auto& b = baseline();
  Params p = params_with_beta(2.0 * b.lambda_crit);
  State a{Field(b.grid), b.V};
  SolveOptions opts;
  opts.tol_grad = 1e-7;
  auto [gs, rep] = solve_coupled_ground(p, b.grid, opts);
  REQUIRE(rep.converged);
  auto mp = mountain_pass_estimate(p, a, gs, 9, opts);
  CHECK(mp.level_m >= mp.endpoint_energy_a - 1e-12);
  CHECK(mp.level_m >= mp.endpoint_energy_b - 1e-12);
  CHECK(mp.iterations > 0);
}

TEST_CASE("mountain pass rejects off-manifold endpoints") {
  const auto& b = baseline();
  Params p = params_with_beta(1.0);
  State a{Field(b.grid), b.V};
  State off = 2.0 * a;
  SolveOptions opts;
  CHECK_THROWS_AS(mountain_pass_estimate(p, a, off, 5, opts), invalid_param);
}
