#include "bskdv/operators.hpp"

#include <cmath>
#include <list>
#include <mutex>

#include "bskdv/errors.hpp"
#include "fft_line.hpp"
#include "interp.hpp"

extern "C" {
void dpbtrf_(const char* uplo, const int* n, const int* kd, double* ab, const int* ldab, int* info);
void dpbtrs_(const char* uplo, const int* n, const int* kd, const int* nrhs, const double* ab,
             const int* ldab, double* b, const int* ldb, int* info);
}

namespace bskdv {
namespace {

// tridiagonal rows of the conservative radial Laplacian:
// flux A_i (f_{i+1}-f_i)/dr across face b_i, divided by the cell volume;
// zero flux at the origin, odd ghost (f = -f_{n-1}) past r = R
struct RadialTri {
  std::vector<double> lo, di, up;
};

RadialTri radial_tri(const GridSpec& g) {
  const std::size_t n = g.n;
  const double dr = g.extent / double(n);
  const double omega = unit_sphere_area(g.dimN);
  std::vector<double> face(n);  // A_i at outer face of cell i
  for (std::size_t i = 0; i < n; ++i) face[i] = omega * std::pow(dr * double(i + 1), g.dimN - 1);
  RadialTri t;
  t.lo.assign(n, 0.0);
  t.di.assign(n, 0.0);
  t.up.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double vol = g.weights[i];
    const double inner = i == 0 ? 0.0 : face[i - 1];
    if (i + 1 < n) {
      t.up[i] = face[i] / (dr * vol);
      t.di[i] = -(face[i] + inner) / (dr * vol);
    } else {
      t.di[i] = -(2.0 * face[i] + inner) / (dr * vol);
    }
    if (i > 0) t.lo[i] = inner / (dr * vol);
  }
  return t;
}

Field tri_apply(const RadialTri& t, const Field& f) {
  Field r(f.grid);
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    double acc = t.di[i] * f.values[i];
    if (i > 0) acc += t.lo[i] * f.values[i - 1];
    if (i + 1 < n) acc += t.up[i] * f.values[i + 1];
    r.values[i] = acc;
  }
  return r;
}

}  // namespace

Field apply_laplacian(const Field& f) {
  if (f.grid->kind == GridKind::line)
    return detail::apply_multiplier(f, [](double k) { return -k * k; });
  return tri_apply(radial_tri(*f.grid), f);
}

Field apply_bilaplacian(const Field& f) {
  if (f.grid->kind == GridKind::line)
    return detail::apply_multiplier(f, [](double k) { return k * k * k * k; });
  const RadialTri t = radial_tri(*f.grid);
  return tri_apply(t, tri_apply(t, f));
}

struct ShiftedSolver::Impl {
  // radial path: banded Cholesky of the volume-symmetrized matrix
  std::vector<double> band;   // lower band, column major, ldab = 3
  std::vector<double> scale;  // sqrt of the cell volumes
  RadialTri tri;
  int n = 0;

  Field base_solve(const Field& rhs) const {
    const int kd = 2, ldab = 3, nrhs = 1;
    Field x(rhs.grid);
    for (int i = 0; i < n; ++i) x.values[i] = scale[i] * rhs.values[i];
    int info = 0;
    const char uplo = 'L';
    dpbtrs_(&uplo, &n, &kd, &nrhs, band.data(), &ldab, x.values.data(), &n, &info);
    if (info != 0) throw numerical_error("banded solve failed, info=" + std::to_string(info));
    for (int i = 0; i < n; ++i) x.values[i] /= scale[i];
    return x;
  }
};

ShiftedSolver::ShiftedSolver(GridPtr grid, double lambda) : grid_(std::move(grid)), lambda_(lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw invalid_param("ShiftedSolver: lambda must be positive");
  if (grid_->kind == GridKind::line) return;  // multiplier path needs no setup

  const std::size_t n = grid_->n;
  impl_ = std::make_unique<Impl>();
  impl_->tri = radial_tri(*grid_);
  const RadialTri& t = impl_->tri;
  impl_->n = int(n);
  impl_->scale.resize(n);
  for (std::size_t i = 0; i < n; ++i) impl_->scale[i] = std::sqrt(grid_->weights[i]);

  // M = T*T + lambda I is pentadiagonal; symmetrize S = D^{1/2} M D^{-1/2}
  const int kd = 2, ldab = kd + 1;
  impl_->band.assign(std::size_t(ldab) * n, 0.0);
  auto& ab = impl_->band;
  const auto& s = impl_->scale;
  for (std::size_t j = 0; j < n; ++j) {
    double m0 = t.di[j] * t.di[j] + lambda;
    if (j > 0) m0 += t.lo[j] * t.up[j - 1];
    if (j + 1 < n) m0 += t.up[j] * t.lo[j + 1];
    ab[0 + j * ldab] = m0;
    if (j + 1 < n) {
      const double m1 = t.lo[j + 1] * (t.di[j] + t.di[j + 1]);
      ab[1 + j * ldab] = s[j + 1] * m1 / s[j];
    }
    if (j + 2 < n) {
      const double m2 = t.lo[j + 2] * t.lo[j + 1];
      ab[2 + j * ldab] = s[j + 2] * m2 / s[j];
    }
  }
  int nn = int(n), kdd = kd, ld = ldab, info = 0;
  const char uplo = 'L';
  dpbtrf_(&uplo, &nn, &kdd, ab.data(), &ld, &info);
  if (info != 0) throw numerical_error("banded Cholesky factorization failed, info=" + std::to_string(info));
}

ShiftedSolver::~ShiftedSolver() = default;

Field ShiftedSolver::solve(const Field& rhs) const {
  if (!same_grid(*rhs.grid, *grid_)) throw grid_mismatch("ShiftedSolver: rhs on a different grid");
  if (grid_->kind == GridKind::line) {
    const double lam = lambda_;
    return detail::apply_multiplier(rhs, [lam](double k) {
      const double k2 = k * k;
      return 1.0 / (k2 * k2 + lam);
    });
  }
  // the factored system is ill-conditioned like k^4/lambda; two rounds of
  // iterative refinement bring the roundtrip residual back to rounding level
  Field x = impl_->base_solve(rhs);
  for (int pass = 0; pass < 2; ++pass) {
    Field res = tri_apply(impl_->tri, tri_apply(impl_->tri, x));
    for (int i = 0; i < impl_->n; ++i)
      res.values[i] = rhs.values[i] - (res.values[i] + lambda_ * x.values[i]);
    const Field corr = impl_->base_solve(res);
    for (int i = 0; i < impl_->n; ++i) x.values[i] += corr.values[i];
  }
  return x;
}

namespace {

struct SolverCacheEntry {
  std::weak_ptr<const GridSpec> grid;
  const GridSpec* key;
  double lambda;
  std::shared_ptr<const ShiftedSolver> solver;
};

std::mutex g_solver_mutex;
std::list<SolverCacheEntry>& solver_cache() {
  static std::list<SolverCacheEntry> cache;
  return cache;
}

}  // namespace

std::shared_ptr<const ShiftedSolver> shifted_solver(GridPtr grid, double lambda) {
  std::lock_guard<std::mutex> lock(g_solver_mutex);
  auto& cache = solver_cache();
  for (auto it = cache.begin(); it != cache.end();) {
    auto sp = it->grid.lock();
    if (!sp) {
      it = cache.erase(it);
      continue;
    }
    if (sp.get() == grid.get() && it->lambda == lambda) return it->solver;
    ++it;
  }
  auto solver = std::make_shared<const ShiftedSolver>(grid, lambda);
  cache.push_back({grid, grid.get(), lambda, solver});
  if (cache.size() > 32) cache.pop_front();
  return solver;
}

Field solve_shifted_bilaplacian(const Field& rhs, double lambda) {
  return shifted_solver(rhs.grid, lambda)->solve(rhs);
}

double inner_product(const Field& a, const Field& b, double lambda) {
  require_same_grid(a, b);
  const Field la = apply_laplacian(a);
  const Field lb = apply_laplacian(b);
  return integrate_product(la, lb) + lambda * integrate_product(a, b);
}

double norm_sq(const Field& a, double lambda) {
  const Field la = apply_laplacian(a);
  return integrate_product(la, la) + lambda * integrate_product(a, a);
}

Field line_shift(const Field& f, double a) {
  return detail::spectral_shift(f, a);
}

namespace {

// index of the outermost node where |f| still exceeds the support threshold
std::ptrdiff_t support_index(const Field& f) {
  double fmax = 0.0;
  for (double v : f.values) fmax = std::max(fmax, std::fabs(v));
  if (fmax == 0.0) return -1;
  const double thresh = 1e-12 * fmax;
  std::ptrdiff_t idx = -1;
  if (f.grid->kind == GridKind::radial) {
    for (std::size_t i = 0; i < f.size(); ++i)
      if (std::fabs(f.values[i]) > thresh) idx = std::ptrdiff_t(i);
  } else {
    for (std::size_t i = 0; i < f.size(); ++i)
      if (std::fabs(f.values[i]) > thresh) {
        const double ax = std::fabs(f.grid->nodes[i]);
        if (idx < 0 || ax > std::fabs(f.grid->nodes[std::size_t(idx)])) idx = std::ptrdiff_t(i);
      }
  }
  return idx;
}

}  // namespace

Field rescale_profile(const Field& f, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw invalid_param("rescale_profile: scale must be positive");
  const std::ptrdiff_t si = support_index(f);
  if (si < 0) return Field(f.grid);  // identically zero
  const double supp = std::fabs(f.grid->nodes[std::size_t(si)]);
  if (supp / scale > f.grid->extent * (1.0 + 1e-12))
    throw invalid_param("rescale_profile: rescaled profile does not fit in the truncated domain");

  Field out(f.grid);
  if (f.grid->kind == GridKind::line) {
    std::vector<double> pts;
    std::vector<std::size_t> which;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double q = scale * f.grid->nodes[i];
      if (std::fabs(q) <= supp + 1e-12) {
        pts.push_back(q);
        which.push_back(i);
      }
    }
    const auto vals = detail::trig_eval(f, pts);
    for (std::size_t j = 0; j < which.size(); ++j) out.values[which[j]] = vals[j];
    return out;
  }

  // radial: spline with an even extension through the origin
  const std::size_t ghost = std::min<std::size_t>(3, f.size());
  std::vector<double> xs, ys;
  xs.reserve(f.size() + ghost);
  ys.reserve(f.size() + ghost);
  for (std::size_t j = ghost; j-- > 0;) {
    xs.push_back(-f.grid->nodes[j]);
    ys.push_back(f.values[j]);
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    xs.push_back(f.grid->nodes[i]);
    ys.push_back(f.values[i]);
  }
  detail::CubicSpline sp(std::move(xs), std::move(ys));
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double q = scale * f.grid->nodes[i];
    out.values[i] = q > supp ? 0.0 : sp(q);
  }
  return out;
}

}  // namespace bskdv
