#pragma once
#include "bskdv/state.hpp"

namespace bskdv {

// states are accepted as on-manifold when |nehari_value| <= kNehariTol * norm_sq
inline constexpr double kNehariTol = 1e-9;

// energy of a state, with every ingredient the identities need
EnergyBreakdown energy(const Params& p, const State& s);

// value of the Nehari functional Psi at s
double nehari_value(const Params& p, const State& s);

// derivative of Psi at s in the direction s itself
double nehari_derivative_diag(const Params& p, const State& s);

// derivative of Psi at s in an arbitrary direction h
double nehari_directional(const Params& p, const State& s, const State& h);

// Riesz gradient of the energy in the product inner product
State gradient(const Params& p, const State& s);

// Riesz representative of Psi'(s), used to project onto the manifold tangent
State nehari_gradient(const Params& p, const State& s);

// second derivative of the energy at s applied to (h, h)
double hessian_form(const Params& p, const State& s, const State& h);

// scale s onto the Nehari manifold; also returns the factor used
State nehari_project(const Params& p, const State& s, double* t_out = nullptr);

// energy restricted to the manifold: (1/6)||s||^2 + (1/12) integral u^4;
// rejects states that fail the kNehariTol membership test
double constrained_energy(const Params& p, const State& s);

bool on_manifold(const Params& p, const State& s);

double state_norm_sq(const Params& p, const State& s);
double state_inner(const Params& p, const State& a, const State& b);

// pointwise strong-form residuals of the two coupled equations
State strong_residual(const Params& p, const State& s);
double strong_residual_sup(const Params& p, const State& s);

}  // namespace bskdv
