#include "bskdv/functional.hpp"

#include <cmath>

#include "bskdv/errors.hpp"
#include "bskdv/operators.hpp"

namespace bskdv {

void Params::validate() const {
  if (!(lambda1 > 0.0) || !std::isfinite(lambda1)) throw invalid_param("lambda1 must be positive");
  if (!(lambda2 > 0.0) || !std::isfinite(lambda2)) throw invalid_param("lambda2 must be positive");
  if (!std::isfinite(beta)) throw invalid_param("beta must be finite");
  if (dimN < 1 || dimN > 7) throw invalid_param("dimension must be in 1..7");
}

State::State(Field uu, Field vv) : u(std::move(uu)), v(std::move(vv)) {
  require_same_grid(u, v);
}

State operator+(const State& a, const State& b) { return State(a.u + b.u, a.v + b.v); }
State operator-(const State& a, const State& b) { return State(a.u - b.u, a.v - b.v); }
State operator*(double c, const State& a) { return State(c * a.u, c * a.v); }
void axpy(double c, const State& x, State& y) {
  axpy(c, x.u, y.u);
  axpy(c, x.v, y.v);
}

namespace {

double quartic_moment(const Field& u) {
  double s = 0.0;
  const auto& w = u.grid->weights;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double x = u.values[i];
    s += w[i] * x * x * x * x;
  }
  return s;
}

double cubic_abs_moment(const Field& v) {
  double s = 0.0;
  const auto& w = v.grid->weights;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = v.values[i];
    s += w[i] * std::fabs(x) * x * x;
  }
  return s;
}

double cross_moment(const Field& u, const Field& v) {
  double s = 0.0;
  const auto& w = u.grid->weights;
  for (std::size_t i = 0; i < u.size(); ++i) s += w[i] * u.values[i] * u.values[i] * v.values[i];
  return s;
}

}  // namespace

EnergyBreakdown energy(const Params& p, const State& s) {
  p.validate();
  EnergyBreakdown e;
  const double nu = norm_sq(s.u, p.lambda1);
  const double nv = norm_sq(s.v, p.lambda2);
  e.norm_sq = nu + nv;
  e.quartic = quartic_moment(s.u);
  e.cubic_abs = cubic_abs_moment(s.v);
  e.cross = cross_moment(s.u, s.v);
  e.i1 = 0.5 * nu - 0.25 * e.quartic;
  e.i2 = 0.5 * nv - e.cubic_abs / 6.0;
  e.coupling = -0.5 * p.beta * e.cross;
  e.phi = e.i1 + e.i2 + e.coupling;
  return e;
}

double nehari_value(const Params& p, const State& s) {
  const EnergyBreakdown e = energy(p, s);
  return e.norm_sq - e.quartic - 0.5 * e.cubic_abs - 1.5 * p.beta * e.cross;
}

double nehari_derivative_diag(const Params& p, const State& s) {
  const EnergyBreakdown e = energy(p, s);
  return 2.0 * e.norm_sq - 4.0 * e.quartic - 1.5 * e.cubic_abs - 4.5 * p.beta * e.cross;
}

double nehari_directional(const Params& p, const State& s, const State& h) {
  p.validate();
  require_same_grid(s.u, h.u);
  require_same_grid(s.v, h.v);
  // Psi'(s)[h] = 2<s,h> - 4 int u^3 h_u - (3/2) int |v| v h_v - 3 beta int (u v h_u + u^2 h_v / 2)
  const double pair = state_inner(p, s, h);
  const auto& w = s.grid()->weights;
  double quart = 0.0, cube = 0.0, cross_u = 0.0, cross_v = 0.0;
  for (std::size_t i = 0; i < s.u.size(); ++i) {
    const double u = s.u.values[i], v = s.v.values[i];
    quart += w[i] * u * u * u * h.u.values[i];
    cube += w[i] * std::fabs(v) * v * h.v.values[i];
    cross_u += w[i] * u * v * h.u.values[i];
    cross_v += w[i] * u * u * h.v.values[i];
  }
  return 2.0 * pair - 4.0 * quart - 1.5 * cube - 1.5 * p.beta * (2.0 * cross_u + cross_v);
}

double state_norm_sq(const Params& p, const State& s) {
  return norm_sq(s.u, p.lambda1) + norm_sq(s.v, p.lambda2);
}

double state_inner(const Params& p, const State& a, const State& b) {
  return inner_product(a.u, b.u, p.lambda1) + inner_product(a.v, b.v, p.lambda2);
}

State gradient(const Params& p, const State& s) {
  p.validate();
  // Riesz gradient: u - K1(u^3 + beta u v), v - K2(|v| v / 2 + beta u^2 / 2)
  Field fu(s.grid()), fv(s.grid());
  for (std::size_t i = 0; i < s.u.size(); ++i) {
    const double u = s.u.values[i], v = s.v.values[i];
    fu.values[i] = u * u * u + p.beta * u * v;
    fv.values[i] = 0.5 * std::fabs(v) * v + 0.5 * p.beta * u * u;
  }
  Field gu = s.u - shifted_solver(s.grid(), p.lambda1)->solve(fu);
  Field gv = s.v - shifted_solver(s.grid(), p.lambda2)->solve(fv);
  return State(std::move(gu), std::move(gv));
}

State nehari_gradient(const Params& p, const State& s) {
  p.validate();
  Field fu(s.grid()), fv(s.grid());
  for (std::size_t i = 0; i < s.u.size(); ++i) {
    const double u = s.u.values[i], v = s.v.values[i];
    fu.values[i] = 4.0 * u * u * u + 3.0 * p.beta * u * v;
    fv.values[i] = 1.5 * std::fabs(v) * v + 1.5 * p.beta * u * u;
  }
  Field gu = 2.0 * s.u - shifted_solver(s.grid(), p.lambda1)->solve(fu);
  Field gv = 2.0 * s.v - shifted_solver(s.grid(), p.lambda2)->solve(fv);
  return State(std::move(gu), std::move(gv));
}

double hessian_form(const Params& p, const State& s, const State& h) {
  p.validate();
  require_same_grid(s.u, h.u);
  require_same_grid(s.v, h.v);
  const double nh = state_norm_sq(p, h);
  const auto& w = s.grid()->weights;
  double acc = 0.0;
  for (std::size_t i = 0; i < s.u.size(); ++i) {
    const double u = s.u.values[i], v = s.v.values[i];
    const double hu = h.u.values[i], hv = h.v.values[i];
    acc += w[i] * (3.0 * u * u * hu * hu + std::fabs(v) * hv * hv +
                   p.beta * (v * hu * hu + 2.0 * u * hu * hv));
  }
  return nh - acc;
}

State nehari_project(const Params& p, const State& s, double* t_out) {
  p.validate();
  const EnergyBreakdown e = energy(p, s);
  const double A = e.norm_sq;
  if (A <= 0.0) throw numerical_error("nehari_project: zero state has no projection");
  const double B = e.quartic;
  const double C = 0.5 * e.cubic_abs + 1.5 * p.beta * e.cross;
  // Psi(t s) = 0 with t > 0: B t^2 + C t - A = 0
  double t;
  if (B > 0.0) {
    const double disc = C * C + 4.0 * A * B;
    t = 2.0 * A / (C + std::sqrt(disc));
  } else if (C > 0.0) {
    t = A / C;
  } else {
    throw numerical_error("nehari_project: no positive projection root");
  }
  if (!(t > 0.0) || !std::isfinite(t)) throw numerical_error("nehari_project: no positive projection root");
  if (t_out) *t_out = t;
  return t * s;
}

bool on_manifold(const Params& p, const State& s) {
  const double a = state_norm_sq(p, s);
  if (a <= 0.0) return false;
  return std::fabs(nehari_value(p, s)) <= kNehariTol * a;
}

double constrained_energy(const Params& p, const State& s) {
  const EnergyBreakdown e = energy(p, s);
  const double psi = e.norm_sq - e.quartic - 0.5 * e.cubic_abs - 1.5 * p.beta * e.cross;
  if (e.norm_sq <= 0.0 || std::fabs(psi) > kNehariTol * e.norm_sq)
    throw invalid_param("constrained_energy: state is not on the manifold");
  return e.norm_sq / 6.0 + e.quartic / 12.0;
}

State strong_residual(const Params& p, const State& s) {
  p.validate();
  Field ru = apply_bilaplacian(s.u);
  Field rv = apply_bilaplacian(s.v);
  for (std::size_t i = 0; i < s.u.size(); ++i) {
    const double u = s.u.values[i], v = s.v.values[i];
    ru.values[i] += p.lambda1 * u - u * u * u - p.beta * u * v;
    rv.values[i] += p.lambda2 * v - 0.5 * std::fabs(v) * v - 0.5 * p.beta * u * u;
  }
  return State(std::move(ru), std::move(rv));
}

double strong_residual_sup(const Params& p, const State& s) {
  const State r = strong_residual(p, s);
  double m = 0.0;
  for (double x : r.u.values) m = std::max(m, std::fabs(x));
  for (double x : r.v.values) m = std::max(m, std::fabs(x));
  return m;
}

}  // namespace bskdv
