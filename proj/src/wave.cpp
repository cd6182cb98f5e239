#include "bskdv/wave.hpp"

#include <cmath>

#include "bskdv/errors.hpp"
#include "bskdv/operators.hpp"

namespace bskdv {

std::tuple<Field, Field, Field> reconstruct_wave(const State& s, double t, double lambda1,
                                                 double lambda2) {
  if (s.grid()->kind != GridKind::line)
    throw invalid_param("reconstruct_wave: the evolution pairing is one-dimensional, need a line grid");
  const double c = std::cos(lambda1 * t), si = std::sin(lambda1 * t);
  Field f_real = c * s.u;
  Field f_imag = si * s.u;
  Field g = line_shift(s.v, lambda2 * t);
  return {std::move(f_real), std::move(f_imag), std::move(g)};
}

}  // namespace bskdv
