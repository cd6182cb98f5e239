#include "bskdv/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bskdv/errors.hpp"

namespace bskdv {

double unit_sphere_area(int dimN) {
  // omega_N = 2 pi^{N/2} / Gamma(N/2)
  return 2.0 * std::pow(M_PI, 0.5 * dimN) / std::tgamma(0.5 * dimN);
}

GridPtr make_grid(GridKind kind, std::size_t n, double extent, int dimN) {
  if (n < 8) throw invalid_param("make_grid: need at least 8 nodes");
  if (!(extent > 0.0) || !std::isfinite(extent)) throw invalid_param("make_grid: extent must be positive");
  if (kind == GridKind::line) {
    if (dimN != 1) throw invalid_param("make_grid: line grid requires dimN = 1");
  } else {
    if (dimN < 2 || dimN > 7) throw invalid_param("make_grid: radial grid requires 2 <= dimN <= 7");
  }

  auto g = std::make_shared<GridSpec>();
  g->kind = kind;
  g->n = n;
  g->extent = extent;
  g->dimN = dimN;
  g->nodes.resize(n);
  g->weights.resize(n);

  if (kind == GridKind::line) {
    const double h = 2.0 * extent / double(n);
    for (std::size_t i = 0; i < n; ++i) {
      g->nodes[i] = -extent + h * double(i);
      g->weights[i] = h;
    }
  } else {
    // cell faces a_i = i*dr, b_i = (i+1)*dr; weight = exact shell volume,
    // so the weights telescope to the measure of the ball and double as the
    // control volumes of the flux-form operators.
    const double dr = extent / double(n);
    const double omega = unit_sphere_area(dimN);
    for (std::size_t i = 0; i < n; ++i) {
      const double a = dr * double(i);
      const double b = dr * double(i + 1);
      g->nodes[i] = 0.5 * (a + b);
      g->weights[i] = omega * (std::pow(b, dimN) - std::pow(a, dimN)) / double(dimN);
    }
  }
  return g;
}

bool same_grid(const GridSpec& a, const GridSpec& b) {
  return a.kind == b.kind && a.n == b.n && a.extent == b.extent && a.dimN == b.dimN;
}

Field::Field(GridPtr g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
  if (values.size() != grid->n) throw grid_mismatch("Field: value count does not match grid");
}

void require_same_grid(const Field& a, const Field& b) {
  if (!a.grid || !b.grid || !same_grid(*a.grid, *b.grid))
    throw grid_mismatch("fields live on different grids");
}

double integrate(const Field& f) {
  double s = 0.0;
  const auto& w = f.grid->weights;
  for (std::size_t i = 0; i < f.size(); ++i) s += w[i] * f.values[i];
  return s;
}

double integrate_product(const Field& f, const Field& g) {
  require_same_grid(f, g);
  double s = 0.0;
  const auto& w = f.grid->weights;
  for (std::size_t i = 0; i < f.size(); ++i) s += w[i] * f.values[i] * g.values[i];
  return s;
}

double integrate_product(const Field& f, const Field& g, const Field& h) {
  require_same_grid(f, g);
  require_same_grid(f, h);
  double s = 0.0;
  const auto& w = f.grid->weights;
  for (std::size_t i = 0; i < f.size(); ++i) s += w[i] * f.values[i] * g.values[i] * h.values[i];
  return s;
}

Field operator+(const Field& a, const Field& b) {
  require_same_grid(a, b);
  Field r(a.grid);
  for (std::size_t i = 0; i < a.size(); ++i) r.values[i] = a.values[i] + b.values[i];
  return r;
}

Field operator-(const Field& a, const Field& b) {
  require_same_grid(a, b);
  Field r(a.grid);
  for (std::size_t i = 0; i < a.size(); ++i) r.values[i] = a.values[i] - b.values[i];
  return r;
}

Field operator*(double c, const Field& a) {
  Field r(a.grid);
  for (std::size_t i = 0; i < a.size(); ++i) r.values[i] = c * a.values[i];
  return r;
}

Field& operator+=(Field& a, const Field& b) {
  require_same_grid(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a.values[i] += b.values[i];
  return a;
}

Field& operator-=(Field& a, const Field& b) {
  require_same_grid(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a.values[i] -= b.values[i];
  return a;
}

Field& operator*=(Field& a, double c) {
  for (auto& v : a.values) v *= c;
  return a;
}

void axpy(double c, const Field& x, Field& y) {
  require_same_grid(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) y.values[i] += c * x.values[i];
}

void write_field_csv(const std::string& path, const Field& f) {
  std::ofstream out(path);
  if (!out) throw numerical_error("cannot open for writing: " + path);
  out << "coord,value\n";
  char buf[64];
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", f.grid->nodes[i], f.values[i]);
    out << buf;
  }
  if (!out) throw numerical_error("write failed: " + path);
}

Field read_field_csv(const std::string& path, GridPtr grid) {
  std::ifstream in(path);
  if (!in) throw numerical_error("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line)) throw numerical_error("empty field file: " + path);
  Field f(std::move(grid));
  std::size_t i = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw numerical_error("malformed row in " + path);
    if (i >= f.size()) throw grid_mismatch("field file has more rows than grid nodes: " + path);
    f.values[i++] = std::stod(line.substr(comma + 1));
  }
  if (i != f.size()) throw grid_mismatch("field file row count does not match grid: " + path);
  return f;
}

}  // namespace bskdv
