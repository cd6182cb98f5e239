#pragma once
#include <stdexcept>
#include <string>

namespace bskdv {

// bad user-facing inputs: parameters, grid descriptors, config values
struct invalid_param : std::invalid_argument {
  explicit invalid_param(const std::string& msg) : std::invalid_argument(msg) {}
};

// fields living on different grids combined in one expression
struct grid_mismatch : std::invalid_argument {
  explicit grid_mismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

// breakdowns inside the numerics: no projection root, factorization failure, ...
struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace bskdv
