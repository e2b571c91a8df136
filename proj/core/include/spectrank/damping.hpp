#pragma once

#include <cstddef>
#include <optional>

namespace spectrank {

// Damping configuration shared by the path-summation rankers. alpha may be
// negative; |alpha| * lambda0 < 1 is required wherever a series must
// converge. When lambda0 is unset it is resolved from the matrix: estimated
// by power iteration for nonnegative input, taken from the dense spectrum
// otherwise (and only below the dense cap). Callers working with stochastic
// matrices should pin lambda0 = 1.
struct DampingParams {
  double alpha = 0.85;
  std::optional<double> lambda0;
  double tol = 1e-9;
  std::size_t max_iter = 100000;
};

}  // namespace spectrank
