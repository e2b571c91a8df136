#pragma once

// Deterministic random fixtures and small helpers shared by the unit and
// acceptance suites.

#include <cstddef>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "spectrank/dense_matrix.hpp"
#include "spectrank/error.hpp"
#include "spectrank/matrix_ops.hpp"
#include "spectrank/oracle.hpp"
#include "spectrank/score_vector.hpp"
#include "spectrank/sparse_matrix.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

// ~density * n^2 entries with weights in (0, 1].
inline spectrank::SparseMatrix random_sparse(Rng& rng, std::size_t n, double density) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<spectrank::Triplet> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (coin(rng) < density) entries.push_back({i, j, 1.0 - coin(rng)});
    }
  }
  return spectrank::SparseMatrix::from_triplets(n, n, std::move(entries));
}

// Directed ring plus extra random chords, so the graph is strongly
// connected; an optional self-loop makes it aperiodic.
inline spectrank::SparseMatrix random_strongly_connected(Rng& rng, std::size_t n,
                                                         std::size_t extra_edges,
                                                         bool self_loop) {
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::uniform_int_distribution<std::size_t> node(0, n - 1);
  std::vector<spectrank::Triplet> entries;
  for (std::size_t i = 0; i < n; ++i) entries.push_back({i, (i + 1) % n, weight(rng)});
  if (self_loop) entries.push_back({0, 0, weight(rng)});
  for (std::size_t k = 0; k < extra_edges; ++k) {
    entries.push_back({node(rng), node(rng), weight(rng)});
  }
  return spectrank::SparseMatrix::from_triplets(n, n, std::move(entries));
}

inline spectrank::SparseMatrix random_stochastic(Rng& rng, std::size_t n, std::size_t extra_edges,
                                                 bool self_loop = true) {
  return spectrank::row_normalize(random_strongly_connected(rng, n, extra_edges, self_loop),
                                  spectrank::NormalizeMode::Strict);
}

// Strictly positive entries summing to one.
inline spectrank::ScoreVector random_distribution(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> weight(0.1, 1.0);
  spectrank::ScoreVector v = spectrank::ScoreVector::zeros(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = weight(rng);
    sum += v[i];
  }
  for (std::size_t i = 0; i < n; ++i) v[i] /= sum;
  return v;
}

inline spectrank::ScoreVector random_vector(Rng& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> value(lo, hi);
  spectrank::ScoreVector v = spectrank::ScoreVector::zeros(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = value(rng);
  return v;
}

inline spectrank::DenseMatrix random_dense_positive(Rng& rng, std::size_t n, double lo,
                                                    double hi) {
  std::uniform_real_distribution<double> value(lo, hi);
  spectrank::DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = value(rng);
  }
  return m;
}

// Stationary distribution of an irreducible chain: pi (P - I + U) = 1 with U
// the all-ones matrix, since pi P - pi = 0 and pi U = 1.
inline spectrank::ScoreVector stationary_distribution(const spectrank::DenseMatrix& p) {
  spectrank::DenseMatrix system(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      system.at(i, j) = p.at(i, j) - (i == j ? 1.0 : 0.0) + 1.0;
    }
  }
  return spectrank::dense_solve_left(system, spectrank::ScoreVector::ones(p.size()));
}

template <typename F>
spectrank::ErrorKind error_kind_of(F&& fn) {
  try {
    fn();
  } catch (const spectrank::Error& e) {
    return e.kind();
  }
  throw std::runtime_error("expected a spectrank::Error, none was thrown");
}

}  // namespace testsupport
