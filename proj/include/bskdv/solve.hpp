#pragma once
#include <cstdint>
#include <optional>

#include "bskdv/functional.hpp"

namespace bskdv {

struct SolveOptions {
  int max_iters = 10000;
  double tol_grad = 1e-7;       // on-manifold gradient norm target
  double tol_energy = 1e-12;    // relative energy stall target
  double step0 = 1.0;           // initial trial step of the backtracking search
  double armijo = 1e-4;         // sufficient-decrease parameter
  int multistart = 3;           // independent starts for the coupled solver
  std::uint64_t seed = 1234567; // randomized starts draw from here
};

struct SolveReport {
  bool converged = false;
  int iters = 0;
  double final_energy = 0.0;        // constrained energy at the last iterate
  double grad_norm = 0.0;           // norm of the projected gradient
  double residual_sup = 0.0;        // sup norm of the strong-form residual
  double nehari_floor = 0.0;        // smallest projection factor seen
  bool sign_fix_applied = false;    // whether |.| replacement changed the state
  double sign_fix_t = 1.0;          // reprojection factor after the sign fix
  double t_history_max = 0.0;       // largest projection factor seen
  double max_energy_increase = 0.0; // largest inter-iterate energy rise
  int stalled_steps = 0;            // backtracking failures absorbed as stalls
};

// ground state of the single-component problem at shift lambda; the state is
// the v component alone, driven on its own constraint ||v||^2 = (1/2) int |v|^3
std::pair<Field, SolveReport> solve_scalar_ground(double lambda, GridPtr grid, const SolveOptions& opts);

// unit-shift profile rescaled to shift lambda2: V2(x) = lambda2 * V(lambda2^{1/4} x)
Field rescale_ground(const Field& V, double lambda2, int dimN);

// moment of the rescaled profile from the unit-shift moment:
// int V2^p = lambda2^{p - N/4} * int V^p
double scaled_moment(double moment_p, double p, double lambda2, int dimN);

// ground state of the coupled system on the Nehari manifold; multistart
// projected descent, optional explicit initial state overrides the multistart
std::pair<State, SolveReport> solve_coupled_ground(const Params& p, GridPtr grid, const SolveOptions& opts,
                                                   std::optional<State> init = std::nullopt);

}  // namespace bskdv
