#pragma once
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace bskdv {

enum class GridKind { line, radial };

// Discretization of the truncated domain.
//   line:   periodic [-L, L), n uniform nodes, trapezoid==uniform weights h
//   radial: cell-centered r_i=(i+1/2)R/n on (0,R], weights = exact shell volumes
// Immutable after construction; fields keep a shared_ptr to their grid.
struct GridSpec {
  GridKind kind;
  std::size_t n;
  double extent;  // L (half-period) or R (ball radius)
  int dimN;       // ambient dimension, 1 for line, 2..7 for radial
  std::vector<double> nodes;
  std::vector<double> weights;

  double spacing() const { return kind == GridKind::line ? 2.0 * extent / double(n) : extent / double(n); }
};

using GridPtr = std::shared_ptr<const GridSpec>;

GridPtr make_grid(GridKind kind, std::size_t n, double extent, int dimN);

bool same_grid(const GridSpec& a, const GridSpec& b);

// surface measure of the unit sphere in R^N
double unit_sphere_area(int dimN);

// Grid function: values at the grid nodes.
struct Field {
  GridPtr grid;
  std::vector<double> values;

  Field() = default;
  explicit Field(GridPtr g) : grid(std::move(g)), values(grid->n, 0.0) {}
  Field(GridPtr g, std::vector<double> v);

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
};

// quadrature: sum_i w_i f_i
double integrate(const Field& f);
// sum_i w_i f_i g_i  (and the cubic variant used all over the functional)
double integrate_product(const Field& f, const Field& g);
double integrate_product(const Field& f, const Field& g, const Field& h);

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(double c, const Field& a);
Field& operator+=(Field& a, const Field& b);
Field& operator-=(Field& a, const Field& b);
Field& operator*=(Field& a, double c);
void axpy(double c, const Field& x, Field& y);  // y += c*x

// CSV persistence: header "coord,value", one row per node, %.17g
void write_field_csv(const std::string& path, const Field& f);
// reads values only; grid geometry comes from the descriptor the caller supplies
Field read_field_csv(const std::string& path, GridPtr grid);

void require_same_grid(const Field& a, const Field& b);

}  // namespace bskdv
