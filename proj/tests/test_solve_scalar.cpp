#include <cmath>

#include "bskdv/functional.hpp"
#include "bskdv/operators.hpp"
#include "bskdv/solve.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bskdv;
namespace tu = testutil;

namespace {

struct ScalarRun {
  Field V;
  SolveReport rep;
};

// production-scale ground state at unit shift, solved once
const ScalarRun& unit_run() {
  static ScalarRun run = [] {
    SolveOptions opts;
    opts.tol_grad = 1e-9;
    auto [V, rep] = solve_scalar_ground(1.0, tu::line_grid(2048, 40.0), opts);
    return ScalarRun{std::move(V), rep};
  }();
  return run;
}

double sup_abs(const Field& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::fabs(v));
  return m;
}

// integral of |f|^p; the tails oscillate, and every identity below uses the
// absolute moment, not the signed one
double abs_moment(const Field& f, int pw) {
  double a = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    a += f.grid->weights[i] * std::pow(std::fabs(f[i]), pw);
  return a;
}

}  // namespace

TEST_CASE("scalar solve converges with a small residual") {
  const auto& r = unit_run();
  CHECK(r.rep.converged);
  CHECK(r.rep.grad_norm <= 1e-9);
  CHECK(r.rep.residual_sup < 1e-7);
}

TEST_CASE("scalar ground state satisfies its own constraint") {
  const auto& r = unit_run();
  const double nsq = norm_sq(r.V, 1.0);
  const double cubic = abs_moment(r.V, 3);
  CHECK(tu::rel_diff(nsq, 0.5 * std::fabs(cubic)) < 1e-8);
  // the constraint forces the cubic moment above twice the mass
  CHECK(cubic > 2.0 * integrate_product(r.V, r.V) * (1.0 - 1e-6));
}

TEST_CASE("scalar energy equals a twelfth of the cubic moment") {
  const auto& r = unit_run();
  Params p;
  p.lambda1 = 1.0;
  p.lambda2 = 1.0;
  p.beta = 0.0;
  p.dimN = 1;
  State s{Field(r.V.grid), r.V};
  const double phi = energy(p, s).phi;
  CHECK(tu::rel_diff(phi, abs_moment(r.V, 3) / 12.0) < 1e-8);
  CHECK(tu::rel_diff(phi, r.rep.final_energy) < 1e-8);
}

TEST_CASE("scalar profile is positive and even-peaked") {
  const auto& r = unit_run();
  const std::size_t mid = r.V.size() / 2;
  CHECK(r.V[mid] > 0.5);
  CHECK(sup_abs(r.V) == doctest::Approx(std::fabs(r.V[mid])).epsilon(1e-6));
}

TEST_CASE("unit rescale returns the same profile") {
  const auto& r = unit_run();
  Field same = rescale_ground(r.V, 1.0, 1);
  const double scale = sup_abs(r.V);
  for (std::size_t i = 0; i < r.V.size(); ++i)
    CHECK(std::fabs(same[i] - r.V[i]) < 1e-10 * scale);
}

TEST_CASE("rescaled profile matches a direct solve at the new shift") {
  const auto& r = unit_run();
  Field predicted = rescale_ground(r.V, 4.0, 1);
  SolveOptions opts;
  opts.tol_grad = 1e-9;
  auto [direct, rep] = solve_scalar_ground(4.0, r.V.grid, opts);
  REQUIRE(rep.converged);
  double err = 0.0;
  for (std::size_t i = 0; i < direct.size(); ++i)
    err = std::max(err, std::fabs(predicted[i] - direct[i]));
  CHECK(err / sup_abs(direct) < 1e-3);
}

TEST_CASE("moment scaling factors") {
  CHECK(scaled_moment(1.0, 3.0, 16.0, 1) == doctest::Approx(2048.0).epsilon(1e-12));
  CHECK(scaled_moment(3.7, 4.0, 1.0, 5) == doctest::Approx(3.7).epsilon(1e-15));
  CHECK(scaled_moment(2.0, 2.0, 9.0, 4) == doctest::Approx(18.0).epsilon(1e-12));
}

TEST_CASE("scalar solve works on the radial grid") {
  SolveOptions opts;
  opts.tol_grad = 1e-8;
  auto [V, rep] = solve_scalar_ground(1.0, tu::radial_grid(512, 25.0, 3), opts);
  CHECK(rep.converged);
  CHECK(tu::rel_diff(norm_sq(V, 1.0), 0.5 * std::fabs(abs_moment(V, 3))) < 1e-7);
  CHECK(V[0] > 0.0);
}
