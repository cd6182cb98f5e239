#pragma once
#include <tuple>

#include "bskdv/state.hpp"

namespace bskdv {

// snapshot of the standing/traveling pair generated by a stationary state:
// first component rotates in phase, second translates. Line grids only.
std::tuple<Field, Field, Field> reconstruct_wave(const State& s, double t, double lambda1,
                                                 double lambda2);

}  // namespace bskdv
