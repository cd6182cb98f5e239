#pragma once
#include <functional>
#include <vector>

#include "bskdv/grid.hpp"

// internal spectral kernels for the periodic line grid
namespace bskdv::detail {

// real-to-complex transform, apply m(k_j) with k_j = pi j / L, transform back
Field apply_multiplier(const Field& f, const std::function<double(double)>& m);

// translate the profile by +a (phase e^{-i k a}; Nyquist mode kept real)
Field spectral_shift(const Field& f, double a);

// evaluate the trigonometric interpolant of f at arbitrary points
std::vector<double> trig_eval(const Field& f, const std::vector<double>& pts);

}  // namespace bskdv::detail
