#include "spectrank/score_vector.hpp"

#include <cmath>
#include <string>

#include "spectrank/error.hpp"

namespace spectrank {

ScoreVector ScoreVector::uniform(std::size_t n) {
  return ScoreVector(std::vector<double>(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n)));
}

ScoreVector ScoreVector::unit(std::size_t n, std::size_t i) {
  ScoreVector v = ScoreVector::zeros(n);
  if (i >= n) fail(ErrorKind::InvalidArgument, "unit index " + std::to_string(i) + " out of range");
  v[i] = 1.0;
  return v;
}

double norm1(const ScoreVector& v) {
  double s = 0.0;
  for (double x : v.entries) s += std::abs(x);
  return s;
}

double norm2(const ScoreVector& v) {
  double s = 0.0;
  for (double x : v.entries) s += x * x;
  return std::sqrt(s);
}

double norm_inf(const ScoreVector& v) {
  double s = 0.0;
  for (double x : v.entries) s = std::max(s, std::abs(x));
  return s;
}

double dot(const ScoreVector& a, const ScoreVector& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "dot of unequal lengths");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double entry_sum(const ScoreVector& v) {
  double s = 0.0;
  for (double x : v.entries) s += x;
  return s;
}

double l1_diff(const ScoreVector& a, const ScoreVector& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "l1_diff of unequal lengths");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

double max_abs_diff(const ScoreVector& a, const ScoreVector& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "max_abs_diff of unequal lengths");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s = std::max(s, std::abs(a[i] - b[i]));
  return s;
}

ScoreVector axpy(const ScoreVector& a, double factor, const ScoreVector& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "axpy of unequal lengths");
  ScoreVector out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += factor * b[i];
  return out;
}

ScoreVector normalized_l1(const ScoreVector& v) {
  double n = norm1(v);
  if (n == 0.0) fail(ErrorKind::InvalidArgument, "cannot l1-normalize the zero vector");
  ScoreVector out = v;
  for (double& x : out.entries) x /= n;
  return out;
}

void check_finite(const ScoreVector& v, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) {
      fail(ErrorKind::NonFiniteValue,
           std::string(what) + " has non-finite entry at index " + std::to_string(i));
    }
  }
}

}  // namespace spectrank
