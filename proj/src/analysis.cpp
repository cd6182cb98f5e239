#include "bskdv/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>

#include "bskdv/errors.hpp"
#include "bskdv/operators.hpp"

namespace bskdv {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double cubic_signed(const Field& v) {  // int |v| v^2
  double s = 0.0;
  const auto& w = v.grid->weights;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += w[i] * std::fabs(v.values[i]) * v.values[i] * v.values[i];
  return s;
}

double moment_pow(const Field& v, int p) {
  double s = 0.0;
  const auto& w = v.grid->weights;
  for (std::size_t i = 0; i < v.size(); ++i) s += w[i] * std::pow(v.values[i], p);
  return s;
}

// derivative of the scalar constraint at V2 in the direction h
double scalar_constraint_derivative(double lambda2, const Field& V2, const Field& h) {
  double cube = 0.0;
  const auto& w = V2.grid->weights;
  for (std::size_t i = 0; i < V2.size(); ++i)
    cube += w[i] * std::fabs(V2.values[i]) * V2.values[i] * h.values[i];
  return 2.0 * inner_product(V2, h, lambda2) - 1.5 * cube;
}

// smooth random direction: a handful of Gaussian bumps, not white noise
Field random_bumps(const GridPtr& grid, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(3, 6);
  std::uniform_real_distribution<double> amp(-1.0, 1.0), width(0.5, 2.0), unit(0.0, 1.0);
  Field f(grid);
  const int nb = count(rng);
  for (int b = 0; b < nb; ++b) {
    const double a = amp(rng);
    const double sig = width(rng);
    double center;
    if (grid->kind == GridKind::line)
      center = (2.0 * unit(rng) - 1.0) * 0.6 * grid->extent;
    else
      center = unit(rng) * 0.5 * grid->extent;
    const double inv = 1.0 / (2.0 * sig * sig);
    for (std::size_t i = 0; i < grid->n; ++i) {
      const double d = grid->nodes[i] - center;
      f.values[i] += a * std::exp(-d * d * inv);
    }
  }
  return f;
}

}  // namespace

std::pair<double, Field> lambda_threshold(GridPtr grid, double lambda1, const Field& V2,
                                          const SolveOptions& opts) {
  if (!(lambda1 > 0.0) || !std::isfinite(lambda1)) throw invalid_param("lambda_threshold: lambda1 must be positive");
  if (!same_grid(*grid, *V2.grid)) throw grid_mismatch("lambda_threshold: V2 on a different grid");
  double vmax = 0.0;
  for (double x : V2.values) vmax = std::max(vmax, x);
  if (!(vmax > 0.0)) throw invalid_param("lambda_threshold: V2 must be positive somewhere");

  auto solver = shifted_solver(grid, lambda1);
  Field phi = V2;
  {
    const double nn = norm_sq(phi, lambda1);
    if (!(nn > 0.0)) throw invalid_param("lambda_threshold: degenerate start");
    phi *= 1.0 / std::sqrt(nn);
  }

  // power iteration on phi -> K1(V2 phi); with ||phi||_1 = 1 the Rayleigh
  // quotient of the compact map is exactly int V2 phi^2
  double rho_prev = 0.0;
  const int max_iters = std::max(opts.max_iters, 1000);
  for (int iter = 0; iter < max_iters; ++iter) {
    double rho = 0.0;
    const auto& w = grid->weights;
    for (std::size_t i = 0; i < grid->n; ++i) rho += w[i] * V2.values[i] * phi.values[i] * phi.values[i];
    if (!(rho > 0.0)) throw numerical_error("lambda_threshold: nonpositive quotient, invalid V2");
    if (iter > 0 && std::fabs(rho - rho_prev) < 1e-10 * std::fabs(rho))
      return {1.0 / rho, phi};
    rho_prev = rho;

    Field rhs(grid);
    for (std::size_t i = 0; i < grid->n; ++i) rhs.values[i] = V2.values[i] * phi.values[i];
    phi = solver->solve(rhs);
    const double nn = norm_sq(phi, lambda1);
    if (!(nn > 0.0)) throw numerical_error("lambda_threshold: iterate collapsed");
    phi *= 1.0 / std::sqrt(nn);
  }
  throw numerical_error("lambda_threshold: power iteration did not converge");
}

Classification classify_semitrivial(const Params& p, const Field& V2, double lambda_crit,
                                    const Field& h_tilde) {
  p.validate();
  require_same_grid(V2, h_tilde);
  const GridPtr grid = V2.grid;
  const State v2(Field(grid), V2);
  Classification c;
  c.lambda_crit = lambda_crit;
  c.beta = p.beta;

  c.witness_value = hessian_form(p, v2, State(h_tilde, Field(grid)));
  const double tol = 1e-8 * norm_sq(V2, p.lambda2);

  const double denom = scalar_constraint_derivative(p.lambda2, V2, V2);
  if (std::fabs(denom) < 1e-14 * norm_sq(V2, p.lambda2))
    throw numerical_error("classify_semitrivial: degenerate profile, cannot project tangents");

  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);  // fixed: classification is deterministic
  const int samples = 200;
  double min_val = c.witness_value;
  for (int k = 0; k < samples; ++k) {
    Field h1 = random_bumps(grid, rng);
    Field h2 = random_bumps(grid, rng);
    const double coef = scalar_constraint_derivative(p.lambda2, V2, h2) / denom;
    axpy(-coef, V2, h2);
    State h(std::move(h1), std::move(h2));
    const double nn = state_norm_sq(p, h);
    if (!(nn > 1e-14)) {
      --k;
      continue;
    }
    h = (1.0 / std::sqrt(nn)) * h;
    min_val = std::min(min_val, hessian_form(p, v2, h));
  }
  c.tangent_samples = samples;
  c.min_tangent_value = min_val;

  if (c.witness_value < -tol)
    c.verdict = "saddle";
  else if (c.witness_value > tol && min_val > tol)
    c.verdict = "local-min";
  else
    c.verdict = "marginal";
  return c;
}

CandidateReport coupled_candidate(double A, double B, double C, const Params& p, const Field& V) {
  p.validate();
  if (!(B > 0.0)) throw invalid_param("coupled_candidate: needs a positive fourth moment");
  CandidateReport r;
  r.moment_A = A;
  r.moment_B = B;
  r.moment_C = C;
  const double l1 = p.lambda1, l2 = p.lambda2;
  const double expo = 0.25 * double(p.dimN);

  // The computed profile can undershoot zero in its oscillatory tail, which
  // splits the cubic mass: int |V|^3 feeds the single-component terms while
  // the signed int V^3 feeds the coupling term.  For V >= 0 the two coincide
  // and everything below reduces to the single-moment formulas.
  double fold = 0.0;
  for (std::size_t i = 0; i < V.size(); ++i)
    if (V.values[i] < 0.0) {
      const double m = -V.values[i];
      fold += 2.0 * V.grid->weights[i] * m * m * m;
    }
  const double Cf = C + fold;

  r.phi_v2 = std::pow(l2, 3.0 - expo) * Cf / 12.0;
  r.phi_w = kNaN;
  r.phi_w_grid = kNaN;

  // projection condition for w = t (V2, V2):
  // lambda2 B t^2 + (Cf + 3 beta C)/2 t - (Cf + (lambda1 - lambda2)/lambda2 A) = 0
  const double qa = l2 * B;
  const double qb = 0.5 * (Cf + 3.0 * p.beta * C);
  const double qd = Cf + (l1 - l2) / l2 * A;
  if (!(qd > 0.0)) return r;  // no positive root; report stays empty

  const double t = 2.0 * qd / (qb + std::sqrt(qb * qb + 4.0 * qa * qd));
  r.t_star = t;
  const double t2 = t * t;
  r.phi_w = t2 * (std::pow(l2, 3.0 - expo) * Cf + (l1 - l2) * std::pow(l2, 2.0 - expo) * A) / 6.0 +
            t2 * t2 * std::pow(l2, 4.0 - expo) * B / 12.0;
  r.inequality_holds = t2 * qd + 0.5 * t2 * t2 * l2 * B - 0.5 * Cf < 0.0;

  try {
    Field V2g = rescale_ground(V, l2, p.dimN);
    const State w(t * V2g, t * V2g);
    r.phi_w_grid = energy(p, w).phi;
  } catch (const std::exception&) {
    // synthetic moments or a profile that cannot be rescaled: keep NaN
  }
  return r;
}

SweepResult candidate_sweep(const Params& p, const Field& V, double lo, double hi) {
  if (!(lo > 0.0) || !(hi > lo)) throw invalid_param("candidate_sweep: need 0 < lo < hi");
  const double A = moment_pow(V, 2);
  const double B = moment_pow(V, 4);
  const double C = moment_pow(V, 3);

  auto eval = [&](double l2) {
    Params q = p;
    q.lambda2 = l2;
    const CandidateReport r = coupled_candidate(A, B, C, q, V);
    SweepRow row;
    row.lambda2 = l2;
    row.t_star = r.t_star ? *r.t_star : kNaN;
    row.phi_w = r.phi_w;
    row.phi_v2 = r.phi_v2;
    row.holds = r.inequality_holds;
    return row;
  };

  SweepResult out;
  for (double x = lo; x <= hi * (1.0 + 1e-12); x *= 2.0) out.rows.push_back(eval(x));
  if (out.rows.back().lambda2 < hi * (1.0 - 1e-12)) out.rows.push_back(eval(hi));

  // bracket the first flip, then bisect
  std::optional<std::size_t> first_true;
  for (std::size_t i = 0; i < out.rows.size(); ++i)
    if (out.rows[i].holds) {
      first_true = i;
      break;
    }
  if (first_true) {
    if (*first_true == 0) {
      out.lambda2_threshold = out.rows.front().lambda2;
    } else {
      double a = out.rows[*first_true - 1].lambda2;
      double b = out.rows[*first_true].lambda2;
      for (int k = 0; k < 20; ++k) {
        const double mid = 0.5 * (a + b);
        const SweepRow row = eval(mid);
        out.rows.push_back(row);
        (row.holds ? b : a) = mid;
      }
      out.lambda2_threshold = b;
    }
  }

  std::sort(out.rows.begin(), out.rows.end(),
            [](const SweepRow& x, const SweepRow& y) { return x.lambda2 < y.lambda2; });
  bool seen_true = false;
  out.monotone = true;
  for (const auto& row : out.rows) {
    if (row.holds) seen_true = true;
    else if (seen_true) out.monotone = false;
  }
  return out;
}

void write_sweep_csv(const std::string& path, const SweepResult& sweep) {
  std::ofstream out(path);
  if (!out) throw numerical_error("cannot open for writing: " + path);
  out << "lambda2,t_star,phi_w,phi_v2,holds\n";
  char buf[160];
  for (const auto& r : sweep.rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%d\n", r.lambda2, r.t_star, r.phi_w,
                  r.phi_v2, r.holds ? 1 : 0);
    out << buf;
  }
}

namespace {

// gradient with the constraint-normal component removed
State constrained_gradient(const Params& p, const State& s, double* norm_out) {
  const State g = gradient(p, s);
  const State psi = nehari_gradient(p, s);
  const double pn = state_norm_sq(p, psi);
  State gc = g;
  if (pn > 0.0) axpy(-state_inner(p, g, psi) / pn, psi, gc);
  if (norm_out) *norm_out = std::sqrt(std::max(0.0, state_norm_sq(p, gc)));
  return gc;
}

}  // namespace

MountainPassReport mountain_pass_estimate(const Params& p, const State& endpoint_a,
                                          const State& endpoint_b, int beads,
                                          const SolveOptions& opts) {
  p.validate();
  if (beads < 2) throw invalid_param("mountain_pass_estimate: need at least 2 beads");
  require_same_grid(endpoint_a.u, endpoint_b.u);
  require_same_grid(endpoint_a.v, endpoint_b.v);
  if (!on_manifold(p, endpoint_a) || !on_manifold(p, endpoint_b))
    throw invalid_param("mountain_pass_estimate: endpoints must sit on the manifold");

  const std::size_t m = std::size_t(beads);
  std::vector<State> path;
  path.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (i == 0) {
      path.push_back(endpoint_a);
      continue;
    }
    if (i + 1 == m) {
      path.push_back(endpoint_b);
      continue;
    }
    const double th = double(i) / double(m - 1);
    State lerp = (1.0 - th) * endpoint_a + th * endpoint_b;
    try {
      path.push_back(nehari_project(p, lerp));
    } catch (const numerical_error&) {
      throw numerical_error("mountain_pass_estimate: projection failure on a bead");
    }
  }

  std::vector<double> E(m);
  for (std::size_t i = 0; i < m; ++i) E[i] = constrained_energy(p, path[i]);

  MountainPassReport rep;
  rep.bead_count = beads;
  rep.endpoint_energy_a = E.front();
  rep.endpoint_energy_b = E.back();

  auto argmax = [&]() {
    std::size_t k = 0;
    for (std::size_t i = 1; i < m; ++i)
      if (E[i] > E[k]) k = i;
    return k;
  };

  int iters = 0;
  bool string_done = (m == 2);
  if (!string_done) {
    const int phase1_cap = std::min(opts.max_iters, 300);
    double emax_prev = E[argmax()];
    int stall = 0;
    for (int it = 0; it < phase1_cap; ++it, ++iters) {
      // relax every interior bead transverse to the string
      for (std::size_t i = 1; i + 1 < m; ++i) {
        State tau = path[i + 1] - path[i - 1];
        const double tn = state_norm_sq(p, tau);
        State g = gradient(p, path[i]);
        if (tn > 0.0) axpy(-state_inner(p, g, tau) / tn, tau, g);
        const double gn2 = state_norm_sq(p, g);
        if (!(gn2 > 0.0)) continue;
        double alpha = opts.step0;
        for (int k = 0; k < 25; ++k, alpha *= 0.5) {
          State trial = path[i];
          axpy(-alpha, g, trial);
          State proj;
          try {
            proj = nehari_project(p, trial);
          } catch (const numerical_error&) {
            continue;
          }
          const double Et = constrained_energy(p, proj);
          if (Et <= E[i] - opts.armijo * alpha * gn2) {
            path[i] = std::move(proj);
            E[i] = Et;
            break;
          }
        }
      }

      // even arclength redistribution, endpoints pinned
      std::vector<double> arc(m, 0.0);
      for (std::size_t i = 1; i < m; ++i) {
        const State d = path[i] - path[i - 1];
        arc[i] = arc[i - 1] + std::sqrt(std::max(0.0, state_norm_sq(p, d)));
      }
      if (arc.back() > 0.0) {
        std::vector<State> fresh;
        fresh.reserve(m);
        fresh.push_back(path.front());
        for (std::size_t i = 1; i + 1 < m; ++i) {
          const double target = arc.back() * double(i) / double(m - 1);
          std::size_t j = 1;
          while (j + 1 < m && arc[j] < target) ++j;
          const double seg = arc[j] - arc[j - 1];
          const double th = seg > 0.0 ? (target - arc[j - 1]) / seg : 0.0;
          State lerp = (1.0 - th) * path[j - 1] + th * path[j];
          try {
            fresh.push_back(nehari_project(p, lerp));
          } catch (const numerical_error&) {
            fresh.push_back(path[i]);  // keep the old bead if the interpolant degenerates
          }
        }
        fresh.push_back(path.back());
        path = std::move(fresh);
        for (std::size_t i = 0; i < m; ++i) E[i] = constrained_energy(p, path[i]);
      }

      const double emax = E[argmax()];
      if (std::fabs(emax - emax_prev) < 1e-10 * std::max(1.0, std::fabs(emax)))
        ++stall;
      else
        stall = 0;
      emax_prev = emax;
      if (stall >= 5) {
        string_done = true;
        break;
      }
    }
  }

  // climb the argmax bead to the saddle along the string direction
  std::size_t k = argmax();
  double gn = 0.0;
  bool climbed = false;
  if (k > 0 && k + 1 < m) {
    const State tau_raw = path[k + 1] - path[k - 1];
    const double saddle_tol = 1e-4;
    double alpha = 0.25 * opts.step0;
    State bead = path[k];
    State gc = constrained_gradient(p, bead, &gn);
    const int climb_cap = 3000;
    for (int it = 0; it < climb_cap && gn > saddle_tol; ++it, ++iters) {
      const State psi = nehari_gradient(p, bead);
      const double pn = state_norm_sq(p, psi);
      State tau = tau_raw;
      if (pn > 0.0) axpy(-state_inner(p, tau, psi) / pn, psi, tau);
      const double tn = state_norm_sq(p, tau);
      State dir = gc;
      if (tn > 0.0) axpy(-2.0 * state_inner(p, gc, tau) / tn, tau, dir);

      bool accepted = false;
      for (int h = 0; h < 50; ++h) {
        State trial = bead;
        axpy(-alpha, dir, trial);
        State proj;
        try {
          proj = nehari_project(p, trial);
        } catch (const numerical_error&) {
          alpha *= 0.5;
          continue;
        }
        double gn_new = 0.0;
        State gc_new = constrained_gradient(p, proj, &gn_new);
        if (gn_new < gn) {
          bead = std::move(proj);
          gc = std::move(gc_new);
          gn = gn_new;
          alpha = std::min(alpha * 1.25, opts.step0);
          accepted = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!accepted || alpha < 1e-13) break;
    }
    path[k] = bead;
    E[k] = constrained_energy(p, bead);
    climbed = gn <= saddle_tol;
    k = argmax();
  } else {
    constrained_gradient(p, path[k], &gn);
    climbed = true;  // no interior maximum to refine
  }

  rep.level_m = E[k];
  rep.argmax_state = path[k];
  constrained_gradient(p, path[k], &rep.saddle_grad_norm);
  rep.iterations = iters;
  // the saddle refinement is the deliverable; the string phase only feeds it
  rep.converged = climbed;
  (void)string_done;
  return rep;
}

}  // namespace bskdv
