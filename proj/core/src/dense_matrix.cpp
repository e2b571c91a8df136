#include "spectrank/dense_matrix.hpp"

#include <Eigen/Core>

#include <cmath>
#include <string>

#include "spectrank/error.hpp"

namespace spectrank {

namespace {

using RowMajorMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMajorMatrix> map_of(const DenseMatrix& m) {
  return {m.raw(), static_cast<Eigen::Index>(m.size()), static_cast<Eigen::Index>(m.size())};
}

Eigen::Map<RowMajorMatrix> map_of(DenseMatrix& m) {
  return {m.raw(), static_cast<Eigen::Index>(m.size()), static_cast<Eigen::Index>(m.size())};
}

}  // namespace

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  DenseMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) fail(ErrorKind::NotSquare, "dense input must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (!std::isfinite(rows[i][j])) fail(ErrorKind::NonFiniteValue, "non-finite dense entry");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

DenseMatrix DenseMatrix::from_sparse(const SparseMatrix& s, std::size_t cap) {
  if (!s.is_square()) fail(ErrorKind::NotSquare, "cannot densify a rectangular matrix");
  if (s.n_rows() > cap) {
    fail(ErrorKind::TooLarge, "matrix of dimension " + std::to_string(s.n_rows()) +
                                  " exceeds the dense cap " + std::to_string(cap));
  }
  DenseMatrix m(s.n_rows());
  for (std::size_t i = 0; i < s.n_rows(); ++i) {
    auto cols = s.row_cols(i);
    auto vals = s.row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) m.at(i, cols[k]) = vals[k];
  }
  return m;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& other) const {
  if (n_ != other.n_) fail(ErrorKind::DimensionMismatch, "dense multiply of unequal dimensions");
  DenseMatrix out(n_);
  map_of(out).noalias() = map_of(*this) * map_of(other);
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(n_);
  map_of(out) = map_of(*this).transpose();
  return out;
}

DenseMatrix DenseMatrix::plus_scaled(const DenseMatrix& other, double factor) const {
  if (n_ != other.n_) fail(ErrorKind::DimensionMismatch, "dense sum of unequal dimensions");
  DenseMatrix out = *this;
  out.accumulate(other, factor);
  return out;
}

void DenseMatrix::accumulate(const DenseMatrix& other, double factor) {
  if (n_ != other.n_) fail(ErrorKind::DimensionMismatch, "dense sum of unequal dimensions");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += factor * other.data_[i];
}

DenseMatrix DenseMatrix::scaled(double factor) const {
  DenseMatrix out = *this;
  for (double& x : out.data_) x *= factor;
  return out;
}

ScoreVector DenseMatrix::apply_left(const ScoreVector& v) const {
  if (v.size() != n_) fail(ErrorKind::DimensionMismatch, "apply_left length mismatch");
  ScoreVector out = ScoreVector::zeros(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    double vi = v[i];
    if (vi == 0.0) continue;
    const double* row = data_.data() + i * n_;
    for (std::size_t j = 0; j < n_; ++j) out[j] += vi * row[j];
  }
  return out;
}

ScoreVector DenseMatrix::apply_right(const ScoreVector& v) const {
  if (v.size() != n_) fail(ErrorKind::DimensionMismatch, "apply_right length mismatch");
  ScoreVector out = ScoreVector::zeros(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const double* row = data_.data() + i * n_;
    double acc = 0.0;
    for (std::size_t j = 0; j < n_; ++j) acc += row[j] * v[j];
    out[i] = acc;
  }
  return out;
}

double DenseMatrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n_; ++j) s += std::abs(at(i, j));
    best = std::max(best, s);
  }
  return best;
}

double DenseMatrix::max_abs() const {
  double best = 0.0;
  for (double x : data_) best = std::max(best, std::abs(x));
  return best;
}

double DenseMatrix::max_abs_diff(const DenseMatrix& other) const {
  if (n_ != other.n_) fail(ErrorKind::DimensionMismatch, "dense diff of unequal dimensions");
  double best = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    best = std::max(best, std::abs(data_[i] - other.data_[i]));
  }
  return best;
}

bool DenseMatrix::all_finite() const {
  for (double x : data_) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace spectrank
