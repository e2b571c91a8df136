#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "spectrank/score_vector.hpp"

namespace spectrank {

// Tie-aware ordering derived from scores: groups partition the node set,
// best group first, indices ascending within a group. Nodes whose adjacent
// sorted scores differ by at most tie_tol are chained into one group, so a
// chained group can span more than tie_tol end to end.
struct Ranking {
  std::vector<std::vector<std::size_t>> groups;
  ScoreVector source_scores;
  double tie_tol = 1e-9;

  std::size_t n_nodes() const;
  // node index -> group position (0 = best)
  std::vector<std::size_t> group_of_node() const;
  bool same_order(const Ranking& other) const;
};

Ranking ranking_from_scores(const ScoreVector& scores, double tie_tol = 1e-9);

// Iteration summary attached to every iterative ranker result.
struct RankerReport {
  ScoreVector scores;
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = false;
  double lambda0 = std::numeric_limits<double>::quiet_NaN();
};

}  // namespace spectrank
