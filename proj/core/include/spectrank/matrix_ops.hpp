#pragma once

#include <cstddef>

#include "spectrank/score_vector.hpp"
#include "spectrank/sparse_matrix.hpp"

namespace spectrank {

enum class NormalizeMode {
  Strict,           // null rows are an error
  DanglingUniform,  // null rows become the uniform row 1/n
  DanglingZero,     // null rows stay null (substochastic result)
};

// Divides every row by its l1 norm. Input must be nonnegative; null rows are
// handled per mode.
SparseMatrix row_normalize(const SparseMatrix& m, NormalizeMode mode);

// v * M. Accumulates row by row, columns ascending within each row, so
// sequential results are bit-reproducible.
ScoreVector vec_mat(const ScoreVector& v, const SparseMatrix& m);

// M * v, same fixed traversal order.
ScoreVector mat_vec(const SparseMatrix& m, const ScoreVector& v);

// Spectral radius of a nonnegative square matrix. Acyclic (nilpotent)
// matrices short-circuit to 0; otherwise power iteration runs on the
// diagonally shifted matrix M + cI with c = max row sum, which leaves the
// eigenvectors untouched, moves the dominant eigenvalue to lambda0 + c, and
// breaks the periodicity that makes plain iteration oscillate. The estimate
// satisfies |result - lambda0| <= tol * max(1, lambda0) whenever the shifted
// iteration converges; matrices with a defective dominant eigenvalue may
// exhaust max_iter instead (NoConvergence).
double spectral_radius_estimate(const SparseMatrix& m, double tol = 1e-9,
                                std::size_t max_iter = 100000);

// True when the digraph of stored entries has no directed cycle, i.e. the
// matrix is nilpotent and its spectral radius is exactly zero.
bool is_acyclic(const SparseMatrix& m);

namespace checks {
void require_square(const SparseMatrix& m, const char* what);
void require_nonnegative(const SparseMatrix& m, const char* what);
// Nonnegative with row sums <= 1+eps; strict additionally requires every row
// sum >= 1-eps (no substochastic rows).
void require_stochastic(const SparseMatrix& m, bool strict, const char* what, double eps = 1e-9);
}  // namespace checks

}  // namespace spectrank
