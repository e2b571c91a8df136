#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spectrank/score_vector.hpp"

namespace spectrank {

struct Triplet {
  std::size_t row;
  std::size_t col;
  double value;
};

// Compressed sparse row matrix over the reals. Immutable after construction.
// Building sums duplicate coordinates and drops explicitly stored zeros, so
// stored entries are unique per row, column-sorted and finite. Negative
// entries are allowed.
class SparseMatrix {
 public:
  SparseMatrix() = default;

  static SparseMatrix from_triplets(std::size_t n_rows, std::size_t n_cols,
                                    std::vector<Triplet> entries);
  static SparseMatrix from_dense(const std::vector<std::vector<double>>& rows);
  // Adopts an already-assembled CSR structure; validates the invariants
  // (offsets monotone, columns sorted and unique per row, values finite).
  static SparseMatrix from_csr(std::size_t n_rows, std::size_t n_cols,
                               std::vector<std::size_t> row_offsets,
                               std::vector<std::size_t> col_indices, std::vector<double> values);

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cols() const { return n_cols_; }
  std::size_t nnz() const { return values_.size(); }
  bool is_square() const { return n_rows_ == n_cols_; }

  std::span<const std::size_t> row_offsets() const { return row_offsets_; }
  std::span<const std::size_t> col_indices() const { return col_indices_; }
  std::span<const double> values() const { return values_; }

  std::span<const std::size_t> row_cols(std::size_t i) const;
  std::span<const double> row_values(std::size_t i) const;
  double row_sum(std::size_t i) const;

  SparseMatrix transpose() const;
  SparseMatrix scaled(double factor) const;

  bool is_nonnegative() const;
  // max_i sum_j |m_ij|: the induced infinity norm, an upper bound on the
  // spectral radius.
  double max_abs_row_sum() const;

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<std::size_t> row_offsets_ = {0};
  std::vector<std::size_t> col_indices_;
  std::vector<double> values_;
};

}  // namespace spectrank
