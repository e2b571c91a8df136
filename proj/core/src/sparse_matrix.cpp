#include "spectrank/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spectrank/error.hpp"

namespace spectrank {

SparseMatrix SparseMatrix::from_triplets(std::size_t n_rows, std::size_t n_cols,
                                         std::vector<Triplet> entries) {
  for (const Triplet& t : entries) {
    if (t.row >= n_rows || t.col >= n_cols) {
      fail(ErrorKind::InvalidArgument, "triplet (" + std::to_string(t.row) + "," +
                                           std::to_string(t.col) + ") outside a " +
                                           std::to_string(n_rows) + "x" + std::to_string(n_cols) +
                                           " matrix");
    }
    if (!std::isfinite(t.value)) {
      fail(ErrorKind::NonFiniteValue, "non-finite entry at (" + std::to_string(t.row) + "," +
                                          std::to_string(t.col) + ")");
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  SparseMatrix m;
  m.n_rows_ = n_rows;
  m.n_cols_ = n_cols;
  m.row_offsets_.assign(n_rows + 1, 0);
  m.col_indices_.reserve(entries.size());
  m.values_.reserve(entries.size());

  std::size_t i = 0;
  for (std::size_t row = 0; row < n_rows; ++row) {
    while (i < entries.size() && entries[i].row == row) {
      double value = entries[i].value;
      std::size_t col = entries[i].col;
      ++i;
      while (i < entries.size() && entries[i].row == row && entries[i].col == col) {
        value += entries[i].value;  // duplicate coordinates sum
        ++i;
      }
      if (value != 0.0) {
        m.col_indices_.push_back(col);
        m.values_.push_back(value);
      }
    }
    m.row_offsets_[row + 1] = m.values_.size();
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<double>>& rows) {
  std::size_t n_rows = rows.size();
  std::size_t n_cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Triplet> entries;
  for (std::size_t i = 0; i < n_rows; ++i) {
    if (rows[i].size() != n_cols) fail(ErrorKind::InvalidArgument, "ragged dense input");
    for (std::size_t j = 0; j < n_cols; ++j) {
      if (rows[i][j] != 0.0) entries.push_back({i, j, rows[i][j]});
    }
  }
  return from_triplets(n_rows, n_cols, std::move(entries));
}

SparseMatrix SparseMatrix::from_csr(std::size_t n_rows, std::size_t n_cols,
                                    std::vector<std::size_t> row_offsets,
                                    std::vector<std::size_t> col_indices,
                                    std::vector<double> values) {
  if (row_offsets.size() != n_rows + 1 || row_offsets.front() != 0 ||
      row_offsets.back() != values.size() || col_indices.size() != values.size()) {
    fail(ErrorKind::InvalidArgument, "inconsistent CSR arrays");
  }
  for (std::size_t i = 0; i < n_rows; ++i) {
    if (row_offsets[i] > row_offsets[i + 1]) fail(ErrorKind::InvalidArgument, "offsets decrease");
    for (std::size_t k = row_offsets[i]; k < row_offsets[i + 1]; ++k) {
      if (col_indices[k] >= n_cols) fail(ErrorKind::InvalidArgument, "column index out of range");
      if (k > row_offsets[i] && col_indices[k - 1] >= col_indices[k]) {
        fail(ErrorKind::InvalidArgument,
             "columns not strictly increasing in row " + std::to_string(i));
      }
      if (!std::isfinite(values[k])) {
        fail(ErrorKind::NonFiniteValue, "non-finite entry in row " + std::to_string(i));
      }
    }
  }
  SparseMatrix m;
  m.n_rows_ = n_rows;
  m.n_cols_ = n_cols;
  m.row_offsets_ = std::move(row_offsets);
  m.col_indices_ = std::move(col_indices);
  m.values_ = std::move(values);
  return m;
}

std::span<const std::size_t> SparseMatrix::row_cols(std::size_t i) const {
  return {col_indices_.data() + row_offsets_[i], row_offsets_[i + 1] - row_offsets_[i]};
}

std::span<const double> SparseMatrix::row_values(std::size_t i) const {
  return {values_.data() + row_offsets_[i], row_offsets_[i + 1] - row_offsets_[i]};
}

double SparseMatrix::row_sum(std::size_t i) const {
  double s = 0.0;
  for (double v : row_values(i)) s += v;
  return s;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t;
  t.n_rows_ = n_cols_;
  t.n_cols_ = n_rows_;
  t.row_offsets_.assign(n_cols_ + 1, 0);
  for (std::size_t col : col_indices_) t.row_offsets_[col + 1]++;
  for (std::size_t i = 0; i < n_cols_; ++i) t.row_offsets_[i + 1] += t.row_offsets_[i];

  t.col_indices_.resize(values_.size());
  t.values_.resize(values_.size());
  std::vector<std::size_t> cursor(t.row_offsets_.begin(), t.row_offsets_.end() - 1);
  for (std::size_t row = 0; row < n_rows_; ++row) {
    for (std::size_t k = row_offsets_[row]; k < row_offsets_[row + 1]; ++k) {
      std::size_t pos = cursor[col_indices_[k]]++;
      t.col_indices_[pos] = row;
      t.values_[pos] = values_[k];
    }
  }
  return t;
}

SparseMatrix SparseMatrix::scaled(double factor) const {
  if (!std::isfinite(factor)) fail(ErrorKind::NonFiniteValue, "non-finite scale factor");
  SparseMatrix m = *this;
  if (factor == 0.0) {
    m.row_offsets_.assign(n_rows_ + 1, 0);
    m.col_indices_.clear();
    m.values_.clear();
    return m;
  }
  for (double& v : m.values_) v *= factor;
  return m;
}

bool SparseMatrix::is_nonnegative() const {
  for (double v : values_) {
    if (v < 0.0) return false;
  }
  return true;
}

double SparseMatrix::max_abs_row_sum() const {
  double best = 0.0;
  for (std::size_t i = 0; i < n_rows_; ++i) {
    double s = 0.0;
    for (double v : row_values(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

}  // namespace spectrank
