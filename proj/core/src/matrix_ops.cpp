#include "spectrank/matrix_ops.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "power_iteration.hpp"
#include "spectrank/error.hpp"

namespace spectrank {

namespace checks {

void require_square(const SparseMatrix& m, const char* what) {
  if (!m.is_square()) {
    fail(ErrorKind::NotSquare, std::string(what) + ": " + std::to_string(m.n_rows()) + "x" +
                                   std::to_string(m.n_cols()));
  }
}

void require_nonnegative(const SparseMatrix& m, const char* what) {
  if (!m.is_nonnegative()) {
    fail(ErrorKind::NegativeEntry, std::string(what) + " requires a nonnegative matrix");
  }
}

void require_stochastic(const SparseMatrix& m, bool strict, const char* what, double eps) {
  require_square(m, what);
  require_nonnegative(m, what);
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    double s = m.row_sum(i);
    if (s > 1.0 + eps || (strict && s < 1.0 - eps)) {
      fail(ErrorKind::NotStochastic,
           std::string(what) + ": row " + std::to_string(i) + " sums to " + std::to_string(s));
    }
  }
}

}  // namespace checks

SparseMatrix row_normalize(const SparseMatrix& m, NormalizeMode mode) {
  checks::require_nonnegative(m, "row_normalize");

  std::vector<std::size_t> offsets(1, 0);
  std::vector<std::size_t> cols;
  std::vector<double> values;
  offsets.reserve(m.n_rows() + 1);
  cols.reserve(m.nnz());
  values.reserve(m.nnz());

  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    double sum = m.row_sum(i);
    if (sum == 0.0) {
      switch (mode) {
        case NormalizeMode::Strict:
          fail(ErrorKind::NullRow, "row " + std::to_string(i) + " has zero l1 norm");
        case NormalizeMode::DanglingUniform: {
          double w = 1.0 / static_cast<double>(m.n_cols());
          for (std::size_t j = 0; j < m.n_cols(); ++j) {
            cols.push_back(j);
            values.push_back(w);
          }
          break;
        }
        case NormalizeMode::DanglingZero:
          break;
      }
    } else {
      auto rc = m.row_cols(i);
      auto rv = m.row_values(i);
      for (std::size_t k = 0; k < rc.size(); ++k) {
        cols.push_back(rc[k]);
        values.push_back(rv[k] / sum);
      }
    }
    offsets.push_back(values.size());
  }
  return SparseMatrix::from_csr(m.n_rows(), m.n_cols(), std::move(offsets), std::move(cols),
                                std::move(values));
}

ScoreVector vec_mat(const ScoreVector& v, const SparseMatrix& m) {
  if (v.size() != m.n_rows()) {
    fail(ErrorKind::DimensionMismatch, "vec_mat: vector length " + std::to_string(v.size()) +
                                           " vs " + std::to_string(m.n_rows()) + " rows");
  }
  ScoreVector out = ScoreVector::zeros(m.n_cols());
  auto offsets = m.row_offsets();
  auto cols = m.col_indices();
  auto vals = m.values();
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    double vi = v[i];
    if (vi == 0.0) continue;
    for (std::size_t k = offsets[i]; k < offsets[i + 1]; ++k) out[cols[k]] += vi * vals[k];
  }
  return out;
}

ScoreVector mat_vec(const SparseMatrix& m, const ScoreVector& v) {
  if (v.size() != m.n_cols()) {
    fail(ErrorKind::DimensionMismatch, "mat_vec: vector length " + std::to_string(v.size()) +
                                           " vs " + std::to_string(m.n_cols()) + " cols");
  }
  ScoreVector out = ScoreVector::zeros(m.n_rows());
  auto offsets = m.row_offsets();
  auto cols = m.col_indices();
  auto vals = m.values();
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    double acc = 0.0;
    for (std::size_t k = offsets[i]; k < offsets[i + 1]; ++k) acc += vals[k] * v[cols[k]];
    out[i] = acc;
  }
  return out;
}

bool is_acyclic(const SparseMatrix& m) {
  if (!m.is_square()) return false;
  std::size_t n = m.n_rows();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t col : m.col_indices()) indegree[col]++;

  std::vector<std::size_t> queue;
  queue.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) queue.push_back(i);
  }
  std::size_t removed = 0;
  while (removed < queue.size()) {
    std::size_t node = queue[removed++];
    for (std::size_t succ : m.row_cols(node)) {
      if (--indegree[succ] == 0) queue.push_back(succ);
    }
  }
  return removed == n;
}

double spectral_radius_estimate(const SparseMatrix& m, double tol, std::size_t max_iter) {
  checks::require_square(m, "spectral_radius_estimate");
  checks::require_nonnegative(m, "spectral_radius_estimate");
  if (tol <= 0.0) fail(ErrorKind::InvalidArgument, "tol must be positive");
  if (m.n_rows() == 0 || m.nnz() == 0) return 0.0;
  if (is_acyclic(m)) return 0.0;

  double shift = m.max_abs_row_sum();
  auto apply = [&m](const ScoreVector& x) { return vec_mat(x, m); };
  detail::PowerResult r = detail::power_iterate(apply, ScoreVector::uniform(m.n_rows()), shift,
                                                tol, max_iter);
  if (!r.converged) {
    fail(ErrorKind::NoConvergence, "spectral radius estimate did not stabilize after " +
                                       std::to_string(r.iterations) +
                                       " iterations (residual=" + std::to_string(r.residual) +
                                       ")");
  }
  return r.value;
}

}  // namespace spectrank
