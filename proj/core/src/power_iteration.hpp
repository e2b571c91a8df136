#pragma once

// Internal shifted power iteration shared by the dominant-eigenvector
// rankers and the spectral radius estimator. Not installed.

#include <cmath>
#include <cstddef>
#include <vector>

#include "spectrank/score_vector.hpp"

namespace spectrank::detail {

struct PowerResult {
  ScoreVector vector;      // l1-normalized iterate at the converged step
  double value = 0.0;      // Rayleigh quotient of the unshifted operator
  double residual = 0.0;   // ||apply(x) - value*x||_1 with ||x||_1 = 1
  std::size_t iterations = 0;
  bool converged = false;
};

// Iterates x <- normalize_1(apply(x) + shift*x). The shift must be chosen so
// that the shifted operator has a genuinely dominant eigenvalue (for a
// nonnegative matrix, any positive multiple of the identity works); shift 0
// gives plain power iteration. Stops once the unshifted residual satisfies
// ||x A - rho x||_1 <= tol * max(1, |rho|).
template <typename Apply>
PowerResult power_iterate(const Apply& apply, ScoreVector x, double shift, double tol,
                          std::size_t max_iter) {
  PowerResult result;
  double self = dot(x, x);
  for (std::size_t iter = 0; iter <= max_iter; ++iter) {
    ScoreVector y = apply(x);
    double rho = self > 0.0 ? dot(x, y) / self : 0.0;
    double residual = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) residual += std::abs(y[i] - rho * x[i]);
    result.value = rho;
    result.residual = residual;
    result.iterations = iter;
    if (residual <= tol * std::max(1.0, std::abs(rho))) {
      result.converged = true;
      result.vector = std::move(x);
      return result;
    }
    if (iter == max_iter) break;
    double nrm = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      y[i] += shift * x[i];
      nrm += std::abs(y[i]);
    }
    if (nrm == 0.0) {
      // The shifted image vanished; only possible when the operator
      // annihilates x, so x already spans an eigenspace for 0.
      result.value = -shift;
      result.residual = 0.0;
      result.converged = true;
      result.vector = std::move(x);
      return result;
    }
    for (std::size_t i = 0; i < y.size(); ++i) y[i] /= nrm;
    x = std::move(y);
    self = dot(x, x);
  }
  result.vector = std::move(x);
  return result;
}

}  // namespace spectrank::detail
