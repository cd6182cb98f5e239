// Batch front-end: one subcommand per analysis, file bundles per run.
// Exit codes: 0 success, 1 config error, 2 non-convergence, 3 missing prerequisite.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bskdv/analysis.hpp"
#include "bskdv/errors.hpp"
#include "bskdv/functional.hpp"
#include "bskdv/operators.hpp"
#include "bskdv/report_json.hpp"
#include "bskdv/solve.hpp"
#include "bskdv/wave.hpp"

namespace fs = std::filesystem;
using namespace bskdv;

namespace {

struct missing_prerequisite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Cfg {
  std::string config_path;
  std::string out = ".";
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  double beta = 1.0;
  int dim = 1;
  int n = 2048;
  double L = 40.0;
  long long seed = 1234567;
  double tol_grad = 1e-7;
  int max_iters = 10000;
  int multistart = 3;
  double beta_rel = 0.2;      // candidate: beta as a fraction of Lambda
  std::string sweep = "1:4096";
  int beads = 17;
  std::string init = "default";  // ground: default | semitrivial | random
  double synthetic_const = 0.0;  // lambda: replace V2 by this constant when > 0
  std::string state_dir;
  std::string state_b_dir;
  double time = 0.0;
};

// config-file entry bound to the CLI option of the same key; the option wins
// when given on the command line
struct Binding {
  std::string key;
  CLI::Option* opt;
  std::function<void(const std::string&)> set;
};

void parse_into(const std::string& raw, double& target) { target = std::stod(raw); }
void parse_into(const std::string& raw, int& target) { target = std::stoi(raw); }
void parse_into(const std::string& raw, long long& target) { target = std::stoll(raw); }
void parse_into(const std::string& raw, std::string& target) { target = raw; }

template <class T>
Binding make_binding(const std::string& key, CLI::Option* opt, T& var) {
  return {key, opt, [key, &var](const std::string& raw) {
            try {
              parse_into(raw, var);
            } catch (const std::exception&) {
              throw invalid_param("config: bad value for '" + key + "': " + raw);
            }
          }};
}

void add_common(CLI::App* sub, Cfg& c, std::vector<Binding>& b) {
  sub->add_option("--config", c.config_path, "key = value file; command-line flags override it");
  auto reg = [&](const char* flag, const char* key, auto& var, const char* help) {
    b.push_back(make_binding(key, sub->add_option(flag, var, help), var));
  };
  reg("--out", "out", c.out, "output directory (created if absent)");
  reg("--lambda1", "lambda1", c.lambda1, "first spectral shift, > 0");
  reg("--lambda2", "lambda2", c.lambda2, "second spectral shift, > 0");
  reg("--beta", "beta", c.beta, "coupling strength");
  reg("--dim", "dim", c.dim, "spatial dimension 1..7 (1 = periodic line, else radial)");
  reg("--n", "n", c.n, "grid nodes");
  reg("--L", "L", c.L, "half-length of the line box or radial truncation radius");
  reg("--seed", "seed", c.seed, "seed for multistart jitter");
  reg("--tol-grad", "tol_grad", c.tol_grad, "projected-gradient norm target");
  reg("--max-iters", "max_iters", c.max_iters, "descent iteration cap");
  reg("--multistart", "multistart", c.multistart, "number of descent starts");
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

void apply_config_file(const Cfg& c, std::vector<Binding>& binds) {
  if (c.config_path.empty()) return;
  std::ifstream in(c.config_path);
  if (!in) throw invalid_param("config: cannot open " + c.config_path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw invalid_param("config: line " + std::to_string(lineno) + " is not 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    Binding* hit = nullptr;
    for (auto& b : binds)
      if (b.key == key) {
        hit = &b;
        break;
      }
    if (!hit) throw invalid_param("config: unknown key '" + key + "'");
    if (hit->opt->count() == 0) hit->set(val);
  }
}

GridPtr grid_of(const Cfg& c) {
  return make_grid(c.dim == 1 ? GridKind::line : GridKind::radial, c.n, c.L, c.dim);
}

Params params_of(const Cfg& c) {
  Params p;
  p.lambda1 = c.lambda1;
  p.lambda2 = c.lambda2;
  p.beta = c.beta;
  p.dimN = c.dim;
  p.validate();
  return p;
}

SolveOptions opts_of(const Cfg& c) {
  SolveOptions o;
  o.tol_grad = c.tol_grad;
  o.max_iters = c.max_iters;
  o.multistart = c.multistart;
  o.seed = static_cast<unsigned long long>(c.seed);
  return o;
}

fs::path ensure_out(const Cfg& c) {
  fs::path dir(c.out);
  fs::create_directories(dir);
  return dir;
}

void echo_config(KvWriter& kv, const Cfg& c, const std::string& command) {
  kv.add("config.command", command);
  kv.add("config.lambda1", c.lambda1);
  kv.add("config.lambda2", c.lambda2);
  kv.add("config.beta", c.beta);
  kv.add("config.dim", c.dim);
  kv.add("config.n", c.n);
  kv.add("config.L", c.L);
  kv.add("config.seed", c.seed);
  kv.add("config.tol_grad", c.tol_grad);
  kv.add("config.max_iters", c.max_iters);
  kv.add("config.multistart", c.multistart);
  kv.add("config.out", c.out);
}

void add_report(KvWriter& kv, const SolveReport& r) {
  kv.add("converged", r.converged);
  kv.add("iters", r.iters);
  kv.add("grad_norm", r.grad_norm);
  kv.add("residual_sup", r.residual_sup);
  kv.add("nehari_floor", r.nehari_floor);
  kv.add("sign_fix_applied", r.sign_fix_applied);
  kv.add("sign_fix_t", r.sign_fix_t);
  kv.add("t_history_max", r.t_history_max);
  kv.add("max_energy_increase", r.max_energy_increase);
  kv.add("stalled_steps", r.stalled_steps);
}

double field_min(const Field& f) {
  double m = f.values.empty() ? 0.0 : f.values[0];
  for (double x : f.values) m = std::min(m, x);
  return m;
}
double field_max(const Field& f) {
  double m = f.values.empty() ? 0.0 : f.values[0];
  for (double x : f.values) m = std::max(m, x);
  return m;
}
double sup_abs(const Field& f) {
  double m = 0.0;
  for (double x : f.values) m = std::max(m, std::fabs(x));
  return m;
}

void write_log(const fs::path& dir, const std::vector<std::string>& lines) {
  std::ofstream out(dir / "log.txt");
  for (const auto& l : lines) out << l << "\n";
}

Field constant_field(GridPtr grid, double value) {
  Field f(grid);
  for (auto& x : f.values) x = value;
  return f;
}

Field moment_powers(const Field& f, int p) {
  Field g = f;
  for (auto& x : g.values) x = std::pow(x, p);
  return g;
}

// ---------------------------------------------------------------- commands

int cmd_scalar(const Cfg& c) {
  params_of(c);
  auto grid = grid_of(c);
  auto [V, rep] = solve_scalar_ground(c.lambda2, grid, opts_of(c));
  const auto dir = ensure_out(c);
  write_field_csv((dir / "V2.csv").string(), V);

  KvWriter kv;
  echo_config(kv, c, "scalar");
  kv.add("energy", rep.final_energy);
  kv.add("v_min", field_min(V));
  kv.add("v_max", field_max(V));
  kv.add("moment_2", integrate_product(V, V));
  kv.add("moment_3", integrate(moment_powers(V, 3)));
  kv.add("moment_4", integrate_product(V, moment_powers(V, 3)));
  add_report(kv, rep);
  kv.write((dir / "summary.json").string());

  write_log(dir, {"scalar ground state at lambda2 = " + std::to_string(c.lambda2),
                  rep.converged ? "converged in " + std::to_string(rep.iters) + " iterations"
                                : "did not converge"});
  return rep.converged ? 0 : 2;
}

int cmd_lambda(const Cfg& c) {
  params_of(c);
  auto grid = grid_of(c);
  const auto opts = opts_of(c);
  const auto dir = ensure_out(c);
  std::vector<std::string> log;

  Field V2(grid);
  bool solved = false;
  if (c.synthetic_const > 0.0) {
    V2 = constant_field(grid, c.synthetic_const);
    log.push_back("synthetic constant weight " + std::to_string(c.synthetic_const));
  } else {
    auto [V, rep] = solve_scalar_ground(c.lambda2, grid, opts);
    if (!rep.converged) {
      write_log(dir, {"scalar stage did not converge"});
      return 2;
    }
    V2 = std::move(V);
    solved = true;
    log.push_back("scalar stage converged in " + std::to_string(rep.iters) + " iterations");
  }
  auto [Lam, h] = lambda_threshold(grid, c.lambda1, V2, opts);

  write_field_csv((dir / "V2.csv").string(), V2);
  write_field_csv((dir / "h.csv").string(), h);

  KvWriter kv;
  echo_config(kv, c, "lambda");
  kv.add("synthetic_const", c.synthetic_const);
  kv.add("Lambda", Lam);
  kv.add("phi_v2", solved ? norm_sq(V2, c.lambda2) / 6.0 : 0.0);
  kv.add("quotient_at_minimizer", inner_product(h, h, c.lambda1) / integrate_product(V2, h, h));
  kv.write((dir / "summary.json").string());

  log.push_back("threshold computed");
  write_log(dir, log);
  return 0;
}

int cmd_ground(const Cfg& c) {
  const Params p = params_of(c);
  auto grid = grid_of(c);
  const auto opts = opts_of(c);
  const auto dir = ensure_out(c);
  std::vector<std::string> log;

  SolveOptions scalar_opts = opts;
  scalar_opts.tol_grad = std::max(opts.tol_grad, 1e-9);
  auto [V2, vrep] = solve_scalar_ground(p.lambda2, grid, scalar_opts);
  if (!vrep.converged) {
    write_log(dir, {"scalar stage did not converge"});
    return 2;
  }
  const double phi_v2 = norm_sq(V2, p.lambda2) / 6.0;
  auto [Lam, h] = lambda_threshold(grid, p.lambda1, V2, opts);

  std::optional<State> init;
  if (c.init == "semitrivial") {
    init = State(Field(grid), V2);
  } else if (c.init == "random") {
    std::mt19937_64 rng(static_cast<unsigned long long>(c.seed));
    std::uniform_real_distribution<double> jitter(0.5, 2.0);
    Field bu(grid), bv(grid);
    const double w1 = std::pow(p.lambda1, -0.25), w2 = std::pow(p.lambda2, -0.25);
    const double a1 = 2.0 * p.lambda1 * jitter(rng), a2 = 2.0 * p.lambda2 * jitter(rng);
    for (std::size_t i = 0; i < grid->n; ++i) {
      const double x = grid->nodes[i];
      bu.values[i] = a1 * std::exp(-x * x / (2.0 * w1 * w1));
      bv.values[i] = a2 * std::exp(-x * x / (2.0 * w2 * w2));
    }
    init = State(std::move(bu), std::move(bv));
  } else if (c.init != "default") {
    throw invalid_param("init must be one of: default, semitrivial, random");
  }

  auto [s, rep] = solve_coupled_ground(p, grid, opts, std::move(init));
  write_field_csv((dir / "u.csv").string(), s.u);
  write_field_csv((dir / "v.csv").string(), s.v);

  const double su = sup_abs(s.u), sv = sup_abs(s.v);
  const bool semi_trivial = su <= 1e-10 * std::max(1.0, sv);
  const double psi = nehari_value(p, s);

  KvWriter kv;
  echo_config(kv, c, "ground");
  kv.add("init", c.init);
  kv.add("phi", rep.final_energy);
  kv.add("phi_v2", phi_v2);
  kv.add("Lambda", Lam);
  kv.add("both_components_nonzero", su > 1e-8 && sv > 1e-8);
  kv.add("semi_trivial", semi_trivial);
  kv.add("psi_value", psi);
  kv.add("psi_rel", std::fabs(psi) / std::max(1e-300, state_norm_sq(p, s)));
  kv.add("u_min", field_min(s.u));
  kv.add("u_max", field_max(s.u));
  kv.add("v_min", field_min(s.v));
  kv.add("v_max", field_max(s.v));
  add_report(kv, rep);
  kv.write((dir / "summary.json").string());

  log.push_back("coupled ground state, init = " + c.init);
  log.push_back(rep.converged ? "converged in " + std::to_string(rep.iters) + " iterations"
                              : "did not converge");
  if (semi_trivial) log.push_back("state is semi-trivial (first component vanishes)");
  write_log(dir, log);
  return rep.converged ? 0 : 2;
}

int cmd_classify(const Cfg& c) {
  const Params p = params_of(c);
  auto grid = grid_of(c);
  const auto opts = opts_of(c);
  const auto dir = ensure_out(c);

  auto [V2, vrep] = solve_scalar_ground(p.lambda2, grid, opts);
  if (!vrep.converged) {
    write_log(dir, {"scalar stage did not converge"});
    return 2;
  }
  auto [Lam, h] = lambda_threshold(grid, p.lambda1, V2, opts);
  const Classification cls = classify_semitrivial(p, V2, Lam, h);

  write_field_csv((dir / "V2.csv").string(), V2);
  write_field_csv((dir / "h.csv").string(), h);

  KvWriter kv;
  echo_config(kv, c, "classify");
  kv.add("Lambda", cls.lambda_crit);
  kv.add("phi_v2", norm_sq(V2, p.lambda2) / 6.0);
  kv.add("verdict", cls.verdict);
  kv.add("witness_value", cls.witness_value);
  kv.add("tangent_samples", cls.tangent_samples);
  kv.add("min_tangent_value", cls.min_tangent_value);
  kv.write((dir / "summary.json").string());

  write_log(dir, {"semi-trivial state classified: " + cls.verdict});
  return 0;
}

int cmd_candidate(const Cfg& c) {
  Params p = params_of(c);
  auto grid = grid_of(c);
  const auto opts = opts_of(c);
  const auto dir = ensure_out(c);

  const auto colon = c.sweep.find(':');
  if (colon == std::string::npos) throw invalid_param("sweep must be 'lo:hi'");
  double lo = 0.0, hi = 0.0;
  try {
    lo = std::stod(c.sweep.substr(0, colon));
    hi = std::stod(c.sweep.substr(colon + 1));
  } catch (const std::exception&) {
    throw invalid_param("sweep must be 'lo:hi' with numeric bounds");
  }
  if (!(lo > 0.0) || !(hi >= lo)) throw invalid_param("sweep bounds must satisfy 0 < lo <= hi");
  if (!(c.beta_rel > 0.0)) throw invalid_param("beta-rel must be positive");

  auto [V, vrep] = solve_scalar_ground(1.0, grid, opts);
  if (!vrep.converged) {
    write_log(dir, {"scalar stage did not converge"});
    return 2;
  }
  auto [Lam, h] = lambda_threshold(grid, p.lambda1, V, opts);
  p.beta = c.beta_rel * Lam;

  const double A = integrate_product(V, V);
  const double B = integrate_product(V, moment_powers(V, 3));
  const double C = integrate(moment_powers(V, 3));

  const SweepResult sw = candidate_sweep(p, V, lo, hi);
  write_sweep_csv((dir / "sweep.csv").string(), sw);
  write_field_csv((dir / "V.csv").string(), V);

  // single-point report at twice the threshold, the value downstream runs use
  p.lambda2 = sw.lambda2_threshold ? 2.0 * *sw.lambda2_threshold : hi;
  const CandidateReport rep = coupled_candidate(A, B, C, p, V);

  KvWriter kv;
  echo_config(kv, c, "candidate");
  kv.add("beta_rel", c.beta_rel);
  kv.add("sweep_lo", lo);
  kv.add("sweep_hi", hi);
  kv.add("beta", p.beta);
  kv.add("Lambda", Lam);
  kv.add("moment_A", rep.moment_A);
  kv.add("moment_B", rep.moment_B);
  kv.add("moment_C", rep.moment_C);
  if (sw.lambda2_threshold)
    kv.add("lambda2_threshold", *sw.lambda2_threshold);
  else
    kv.add_null("lambda2_threshold");
  kv.add("monotone", sw.monotone);
  kv.add("rows", static_cast<long long>(sw.rows.size()));
  kv.add("lambda2_evaluated", p.lambda2);
  if (rep.t_star)
    kv.add("t_star", *rep.t_star);
  else
    kv.add_null("t_star");
  kv.add("phi_w", rep.phi_w);
  kv.add("phi_v2", rep.phi_v2);
  kv.add("phi_w_grid", rep.phi_w_grid);
  kv.add("inequality_holds", rep.inequality_holds);
  kv.write((dir / "summary.json").string());

  write_log(dir, {"candidate sweep over lambda2 in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]",
                  sw.lambda2_threshold ? "threshold found" : "no threshold in range"});
  return 0;
}

State load_state(const fs::path& dir, GridPtr grid) {
  const fs::path fu = dir / "u.csv", fv = dir / "v.csv";
  if (!fs::exists(fu) || !fs::exists(fv))
    throw missing_prerequisite("state files not found: " + fu.string() + ", " + fv.string());
  return State(read_field_csv(fu.string(), grid), read_field_csv(fv.string(), grid));
}

int cmd_mp(const Cfg& c) {
  const Params p = params_of(c);
  auto grid = grid_of(c);
  const auto opts = opts_of(c);
  const auto dir = ensure_out(c);

  if (c.state_b_dir.empty()) throw invalid_param("mp requires --state-b DIR (a prior ground run)");
  State b = load_state(c.state_b_dir, grid);
  b = nehari_project(p, b);  // CSV round-off takes the stored state slightly off the manifold

  auto [V2, vrep] = solve_scalar_ground(p.lambda2, grid, opts);
  if (!vrep.converged) {
    write_log(dir, {"scalar stage did not converge"});
    return 2;
  }
  const State a(Field(grid), V2);

  const MountainPassReport mp = mountain_pass_estimate(p, a, b, c.beads, opts);
  write_field_csv((dir / "argmax_u.csv").string(), mp.argmax_state.u);
  write_field_csv((dir / "argmax_v.csv").string(), mp.argmax_state.v);

  KvWriter kv;
  echo_config(kv, c, "mp");
  kv.add("beads", c.beads);
  kv.add("state_b", c.state_b_dir);
  kv.add("phi_v2", norm_sq(V2, p.lambda2) / 6.0);
  kv.add("level_m", mp.level_m);
  kv.add("bead_count", mp.bead_count);
  kv.add("endpoint_energy_a", mp.endpoint_energy_a);
  kv.add("endpoint_energy_b", mp.endpoint_energy_b);
  kv.add("saddle_grad_norm", mp.saddle_grad_norm);
  kv.add("iterations", mp.iterations);
  kv.add("converged", mp.converged);
  kv.write((dir / "summary.json").string());

  write_log(dir, {"mountain-pass estimate with " + std::to_string(c.beads) + " beads",
                  mp.converged ? "saddle refinement converged" : "saddle refinement did not converge"});
  return mp.converged ? 0 : 2;
}

int cmd_reconstruct(const Cfg& c) {
  params_of(c);
  auto grid = grid_of(c);
  const auto dir = ensure_out(c);

  if (c.state_dir.empty()) throw invalid_param("reconstruct requires --state DIR (a prior ground run)");
  const State s = load_state(c.state_dir, grid);
  auto [f_real, f_imag, g] = reconstruct_wave(s, c.time, c.lambda1, c.lambda2);

  write_field_csv((dir / "f_real.csv").string(), f_real);
  write_field_csv((dir / "f_imag.csv").string(), f_imag);
  write_field_csv((dir / "g.csv").string(), g);

  KvWriter kv;
  echo_config(kv, c, "reconstruct");
  kv.add("state", c.state_dir);
  kv.add("t", c.time);
  kv.write((dir / "summary.json").string());

  write_log(dir, {"wave snapshot at t = " + std::to_string(c.time)});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solitary ground states of a bi-harmonic Schrodinger-KdV system"};
  app.require_subcommand(1);

  Cfg c;
  std::vector<Binding> binds_scalar, binds_lambda, binds_ground, binds_classify, binds_candidate,
      binds_mp, binds_reconstruct;

  auto* sc_scalar = app.add_subcommand("scalar", "single-component ground profile V2");
  add_common(sc_scalar, c, binds_scalar);

  auto* sc_lambda = app.add_subcommand("lambda", "critical coupling threshold");
  add_common(sc_lambda, c, binds_lambda);
  binds_lambda.push_back(make_binding("synthetic_const",
                              sc_lambda->add_option("--synthetic-const", c.synthetic_const,
                                                    "use V2 = const > 0 instead of the solved profile"),
                              c.synthetic_const));

  auto* sc_ground = app.add_subcommand("ground", "coupled ground state");
  add_common(sc_ground, c, binds_ground);
  binds_ground.push_back(make_binding(
      "init", sc_ground->add_option("--init", c.init, "start family: default | semitrivial | random"),
      c.init));

  auto* sc_classify = app.add_subcommand("classify", "nature of the semi-trivial state");
  add_common(sc_classify, c, binds_classify);

  auto* sc_candidate = app.add_subcommand("candidate", "closed-form coupled candidate vs semi-trivial level");
  add_common(sc_candidate, c, binds_candidate);
  binds_candidate.push_back(
      make_binding("beta_rel",
           sc_candidate->add_option("--beta-rel", c.beta_rel, "beta as a fraction of Lambda"), c.beta_rel));
  binds_candidate.push_back(make_binding(
      "sweep", sc_candidate->add_option("--sweep", c.sweep, "lambda2 sweep range lo:hi"), c.sweep));

  auto* sc_mp = app.add_subcommand("mp", "mountain-pass level estimate");
  add_common(sc_mp, c, binds_mp);
  binds_mp.push_back(
      make_binding("beads", sc_mp->add_option("--beads", c.beads, "string discretization points"), c.beads));
  binds_mp.push_back(make_binding(
      "state_b", sc_mp->add_option("--state-b", c.state_b_dir, "directory of a prior ground run"),
      c.state_b_dir));

  auto* sc_reconstruct = app.add_subcommand("reconstruct", "standing/traveling wave snapshot");
  add_common(sc_reconstruct, c, binds_reconstruct);
  binds_reconstruct.push_back(make_binding(
      "state", sc_reconstruct->add_option("--state", c.state_dir, "directory of a prior ground run"),
      c.state_dir));
  binds_reconstruct.push_back(
      make_binding("t", sc_reconstruct->add_option("--t", c.time, "snapshot time"), c.time));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (sc_scalar->parsed()) {
      apply_config_file(c, binds_scalar);
      return cmd_scalar(c);
    }
    if (sc_lambda->parsed()) {
      apply_config_file(c, binds_lambda);
      return cmd_lambda(c);
    }
    if (sc_ground->parsed()) {
      apply_config_file(c, binds_ground);
      return cmd_ground(c);
    }
    if (sc_classify->parsed()) {
      apply_config_file(c, binds_classify);
      return cmd_classify(c);
    }
    if (sc_candidate->parsed()) {
      apply_config_file(c, binds_candidate);
      return cmd_candidate(c);
    }
    if (sc_mp->parsed()) {
      apply_config_file(c, binds_mp);
      return cmd_mp(c);
    }
    if (sc_reconstruct->parsed()) {
      apply_config_file(c, binds_reconstruct);
      return cmd_reconstruct(c);
    }
  } catch (const missing_prerequisite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const invalid_param& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const grid_mismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const numerical_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
