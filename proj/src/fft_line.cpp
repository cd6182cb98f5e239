#include "fft_line.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

#include "bskdv/errors.hpp"

namespace bskdv::detail {
namespace {

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

// plan creation is not thread safe; executes on private buffers are
std::mutex g_plan_mutex;
std::map<std::size_t, PlanPair>& plan_cache() {
  static std::map<std::size_t, PlanPair> cache;
  return cache;
}

PlanPair get_plans(std::size_t n) {
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto& cache = plan_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<double> re(n);
  std::vector<fftw_complex> co(n / 2 + 1);
  PlanPair p;
  p.fwd = fftw_plan_dft_r2c_1d(int(n), re.data(), co.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft_c2r_1d(int(n), co.data(), re.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!p.fwd || !p.bwd) throw numerical_error("fftw plan creation failed");
  cache[n] = p;
  return p;
}

std::vector<fftw_complex> forward(const Field& f) {
  const std::size_t n = f.size();
  PlanPair p = get_plans(n);
  std::vector<double> in(f.values);
  std::vector<fftw_complex> out(n / 2 + 1);
  fftw_execute_dft_r2c(p.fwd, in.data(), out.data());
  return out;
}

Field backward(std::vector<fftw_complex> coef, const GridPtr& grid) {
  const std::size_t n = grid->n;
  PlanPair p = get_plans(n);
  Field r(grid);
  fftw_execute_dft_c2r(p.bwd, coef.data(), r.values.data());
  const double scale = 1.0 / double(n);
  for (auto& v : r.values) v *= scale;
  return r;
}

void check_line(const Field& f) {
  if (f.grid->kind != GridKind::line) throw invalid_param("spectral kernel needs a line grid");
}

}  // namespace

Field apply_multiplier(const Field& f, const std::function<double(double)>& m) {
  check_line(f);
  auto coef = forward(f);
  const double L = f.grid->extent;
  for (std::size_t j = 0; j < coef.size(); ++j) {
    const double k = M_PI * double(j) / L;
    const double mj = m(k);
    coef[j][0] *= mj;
    coef[j][1] *= mj;
  }
  return backward(std::move(coef), f.grid);
}

Field spectral_shift(const Field& f, double a) {
  check_line(f);
  auto coef = forward(f);
  const double L = f.grid->extent;
  const std::size_t nyq = coef.size() - 1;
  for (std::size_t j = 0; j < coef.size(); ++j) {
    const double phase = -M_PI * double(j) / L * a;
    const double c = std::cos(phase), s = std::sin(phase);
    if (j == nyq && f.size() % 2 == 0) {
      // Nyquist coefficient must stay real for a real signal
      coef[j][0] *= c;
      coef[j][1] = 0.0;
    } else {
      const double re = coef[j][0], im = coef[j][1];
      coef[j][0] = re * c - im * s;
      coef[j][1] = re * s + im * c;
    }
  }
  return backward(std::move(coef), f.grid);
}

std::vector<double> trig_eval(const Field& f, const std::vector<double>& pts) {
  check_line(f);
  auto coef = forward(f);
  const std::size_t n = f.size();
  const double L = f.grid->extent;
  const std::size_t nyq = n / 2;
  std::vector<double> out(pts.size(), 0.0);
  for (std::size_t p = 0; p < pts.size(); ++p) {
    const double t = pts[p] + L;  // node m sits at phase 2*pi*j*m/n with x_m = -L + m h
    double acc = coef[0][0];
    for (std::size_t j = 1; j < nyq; ++j) {
      const double th = M_PI * double(j) / L * t;
      acc += 2.0 * (coef[j][0] * std::cos(th) - coef[j][1] * std::sin(th));
    }
    if (n % 2 == 0)
      acc += coef[nyq][0] * std::cos(M_PI * double(nyq) / L * t);
    out[p] = acc / double(n);
  }
  return out;
}

}  // namespace bskdv::detail
