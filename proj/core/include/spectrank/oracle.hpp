#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "spectrank/dense_matrix.hpp"
#include "spectrank/score_vector.hpp"

namespace spectrank {

// Dense, desk-scale brute-force routines used to cross-check the sparse
// rankers and the algebraic identities they rely on. Single-threaded.

// Limit in average of the powers of S, computed by dyadic doubling of the
// partial sums: sum_{k<2m} S^k = (I + S^m) sum_{k<m} S^k, so the average over
// m = 2^j powers needs only two multiplications per doubling and the O(1/m)
// averaging tail is reached in logarithmically many steps. Stops when
// consecutive dyadic averages differ by at most tol in the induced inf-norm;
// requires spectral radius 1 within 1e-6. The result R satisfies
// R*S ~= R, S*R ~= R and R*R ~= R.
DenseMatrix dense_cesaro(const DenseMatrix& s, double tol = 1e-10,
                         std::uint64_t n_max = (std::uint64_t{1} << 48));

struct ResolventCheck {
  double alpha = 0.0;
  double discrepancy = 0.0;     // max entrywise |direct resolvent - series|
  std::size_t series_terms = 0;
  bool series_converged = false;
};

// Evaluates (1-alpha)(I - alpha S)^{-1} two ways for each alpha: directly by
// LU solve, and through the Cesaro limit R and the deviation kernel
// Q = (I - S + R)^{-1} - R as R - sum_{k>=1} ((alpha-1)/alpha)^k Q^k. The
// series only converges for alpha close enough to 1; divergence is reported
// per alpha, not thrown.
std::vector<ResolventCheck> dense_resolvent_limit(const DenseMatrix& s,
                                                  const std::vector<double>& alphas,
                                                  double tol = 1e-10);

struct SpectrumReport {
  std::vector<std::complex<double>> eigenvalues;  // sorted by modulus, descending
  std::vector<double> residuals;                  // ||A v - lambda v||_2 per reported pair
  double matrix_norm = 0.0;                       // induced inf-norm of the input

  double spectral_radius() const {
    return eigenvalues.empty() ? 0.0 : std::abs(eigenvalues.front());
  }
};

// Full eigenvalue list of a real square matrix. Each reported eigenvalue is
// certified through its eigenvector residual, which bounds the smallest
// singular value of (A - lambda I) by ||A v - lambda v||_2 / ||v||_2; the
// check must pass within tol * ||A||.
SpectrumReport dense_spectrum(const DenseMatrix& a, double tol = 1e-8);

struct NeumannResult {
  ScoreVector sum;
  double tail_bound = 0.0;  // geometric bound on the dropped tail, inf-norm
  std::size_t terms = 0;    // number of terms beyond the leading v
};

// Truncated series v + v(alpha M) + v(alpha M)^2 + ...; the independent
// reference for the damped path-summation rankers. Requires
// |alpha| * rho(M) < 1 (checked against the dense spectrum).
NeumannResult neumann_sum(const DenseMatrix& m, const ScoreVector& v, double alpha,
                          std::size_t k_max = 100000, double tol = 1e-12);

// Solves x A = b by LU with full pivoting; throws SingularSolve.
ScoreVector dense_solve_left(const DenseMatrix& a, const ScoreVector& b);

struct PerronPair {
  ScoreVector vector;  // l1-normalized, nonnegative
  double value = 0.0;
};

// Right dominant eigenpair of a nonnegative dense matrix by shifted power
// iteration.
PerronPair dense_right_perron(const DenseMatrix& a, double tol = 1e-12,
                              std::size_t max_iter = 1000000);

}  // namespace spectrank
