#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spectrank/score_vector.hpp"
#include "spectrank/sparse_matrix.hpp"

namespace spectrank {

// Largest dimension the dense verification routines accept by default.
inline constexpr std::size_t kDefaultOracleCap = 512;

// Square row-major dense matrix for the desk-scale verification routines.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static DenseMatrix from_sparse(const SparseMatrix& m, std::size_t cap = kDefaultOracleCap);

  std::size_t size() const { return n_; }
  double& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<const double> data() const { return data_; }
  double* raw() { return data_.data(); }
  const double* raw() const { return data_.data(); }

  DenseMatrix multiply(const DenseMatrix& other) const;
  DenseMatrix transpose() const;
  DenseMatrix plus_scaled(const DenseMatrix& other, double factor) const;  // this + factor*other
  void accumulate(const DenseMatrix& other, double factor);               // this += factor*other
  DenseMatrix scaled(double factor) const;

  ScoreVector apply_left(const ScoreVector& v) const;   // v * M
  ScoreVector apply_right(const ScoreVector& v) const;  // M * v

  double norm_inf() const;  // induced: max abs row sum
  double max_abs() const;   // entrywise
  double max_abs_diff(const DenseMatrix& other) const;
  bool all_finite() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

}  // namespace spectrank
