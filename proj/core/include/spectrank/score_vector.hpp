#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace spectrank {

// Node-indexed real scores. Plain value type consumed and produced by every
// ranker; entries must stay finite.
struct ScoreVector {
  std::vector<double> entries;

  ScoreVector() = default;
  explicit ScoreVector(std::vector<double> values) : entries(std::move(values)) {}

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  double& operator[](std::size_t i) { return entries[i]; }
  double operator[](std::size_t i) const { return entries[i]; }

  static ScoreVector zeros(std::size_t n) { return ScoreVector(std::vector<double>(n, 0.0)); }
  static ScoreVector ones(std::size_t n) { return ScoreVector(std::vector<double>(n, 1.0)); }
  static ScoreVector uniform(std::size_t n);
  static ScoreVector unit(std::size_t n, std::size_t i);
};

double norm1(const ScoreVector& v);
double norm2(const ScoreVector& v);
double norm_inf(const ScoreVector& v);
double dot(const ScoreVector& a, const ScoreVector& b);
double entry_sum(const ScoreVector& v);
double l1_diff(const ScoreVector& a, const ScoreVector& b);
double max_abs_diff(const ScoreVector& a, const ScoreVector& b);

// a + factor * b
ScoreVector axpy(const ScoreVector& a, double factor, const ScoreVector& b);

// v scaled to unit l1 norm; rejects the zero vector.
ScoreVector normalized_l1(const ScoreVector& v);

// Throws NonFiniteValue if any entry is NaN or infinite.
void check_finite(const ScoreVector& v, const char* what);

}  // namespace spectrank
