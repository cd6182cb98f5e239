#pragma once
#include <optional>
#include <string>
#include <vector>

#include "bskdv/solve.hpp"

namespace bskdv {

// nature of the semi-trivial state (0, V2) as a constrained critical point
struct Classification {
  double lambda_crit = 0.0;  // critical coupling
  double beta = 0.0;
  std::string verdict;       // "local-min" | "saddle" | "marginal"
  double witness_value = 0.0;     // Hessian form along the extremal direction (h~, 0)
  int tangent_samples = 0;
  double min_tangent_value = 0.0; // smallest sampled Hessian value, witness included
};

// analytic candidate w = t (V2, V2) compared against the semi-trivial level
struct CandidateReport {
  std::optional<double> t_star;  // positive root of the projection quadratic
  double phi_w = 0.0;            // closed-form energy of the candidate
  double phi_v2 = 0.0;           // semi-trivial level (1/12) lambda2^{3-N/4} int V^3
  bool inequality_holds = false; // candidate lies strictly below the semi-trivial level
  std::optional<double> lambda2_threshold;
  double moment_A = 0.0;  // int V^2
  double moment_B = 0.0;  // int V^4
  double moment_C = 0.0;  // int V^3, signed; the fold correction comes from V itself
  double phi_w_grid = 0.0;  // direct grid energy of the constructed candidate
};

struct SweepRow {
  double lambda2 = 0.0;
  double t_star = 0.0;  // NaN when no positive root exists
  double phi_w = 0.0;
  double phi_v2 = 0.0;
  bool holds = false;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // sorted by lambda2
  std::optional<double> lambda2_threshold;
  bool monotone = true;
};

struct MountainPassReport {
  double level_m = 0.0;
  int bead_count = 0;
  State argmax_state;
  double endpoint_energy_a = 0.0;
  double endpoint_energy_b = 0.0;
  double saddle_grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

// smallest value of ||phi||_1^2 / int V2 phi^2: power iteration on the compact
// map phi -> (Delta^2 + lambda1)^{-1} (V2 phi); returns the threshold and the
// normalized minimizer
std::pair<double, Field> lambda_threshold(GridPtr grid, double lambda1, const Field& V2,
                                          const SolveOptions& opts);

// Hessian tests of (0, V2) on the manifold: witness direction plus >= 200
// random tangent samples; deterministic
Classification classify_semitrivial(const Params& p, const Field& V2, double lambda_crit,
                                    const Field& h_tilde);

// closed-form candidate from the unit-profile moments A = int V^2, B = int V^4,
// C = int V^3; cross-checks the analytic energy against the grid when possible
CandidateReport coupled_candidate(double A, double B, double C, const Params& p, const Field& V);

// geometric sweep in lambda2 with bisection refinement of the least lambda2
// where the candidate drops below the semi-trivial level
SweepResult candidate_sweep(const Params& p, const Field& V, double lo, double hi);

void write_sweep_csv(const std::string& path, const SweepResult& sweep);

// string-method estimate of the lowest mountain-pass level between two
// on-manifold endpoints; the argmax bead is refined by a climbing step
MountainPassReport mountain_pass_estimate(const Params& p, const State& endpoint_a,
                                          const State& endpoint_b, int beads,
                                          const SolveOptions& opts);

}  // namespace bskdv
