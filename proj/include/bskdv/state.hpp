#pragma once
#include "bskdv/grid.hpp"

namespace bskdv {

// model parameters; the existence theory covers 1 <= N <= 7 with positive shifts
struct Params {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  double beta = 1.0;
  int dimN = 1;

  void validate() const;
  // the existence theory assumes beta > 0; other values compute but are flagged
  bool outside_theory_range() const { return !(beta > 0.0); }
};

// a point of the product space: u paired with v, both on one grid
struct State {
  Field u;
  Field v;

  State() = default;
  State(Field uu, Field vv);
  const GridPtr& grid() const { return u.grid; }
};

State operator+(const State& a, const State& b);
State operator-(const State& a, const State& b);
State operator*(double c, const State& a);
void axpy(double c, const State& x, State& y);

struct EnergyBreakdown {
  double phi = 0.0;       // full energy
  double i1 = 0.0;        // scalar part in u
  double i2 = 0.0;        // scalar part in v
  double coupling = 0.0;  // -(beta/2) * cross
  double norm_sq = 0.0;   // ||u||_1^2 + ||v||_2^2
  double quartic = 0.0;   // integral u^4
  double cubic_abs = 0.0; // integral |v|^3
  double cross = 0.0;     // integral u^2 v
};

}  // namespace bskdv
