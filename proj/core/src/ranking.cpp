#include "spectrank/ranking.hpp"

#include <algorithm>
#include <cmath>

#include "spectrank/error.hpp"

namespace spectrank {

std::size_t Ranking::n_nodes() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.size();
  return n;
}

std::vector<std::size_t> Ranking::group_of_node() const {
  std::vector<std::size_t> out(n_nodes(), 0);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (std::size_t node : groups[g]) out[node] = g;
  }
  return out;
}

bool Ranking::same_order(const Ranking& other) const { return groups == other.groups; }

Ranking ranking_from_scores(const ScoreVector& scores, double tie_tol) {
  check_finite(scores, "ranking scores");
  if (tie_tol < 0.0) fail(ErrorKind::InvalidArgument, "tie_tol must be nonnegative");

  std::vector<std::size_t> order(scores.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&scores](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });

  Ranking ranking;
  ranking.source_scores = scores;
  ranking.tie_tol = tie_tol;
  for (std::size_t k = 0; k < order.size(); ++k) {
    bool chain = k > 0 && scores[order[k - 1]] - scores[order[k]] <= tie_tol;
    if (!chain) ranking.groups.emplace_back();
    ranking.groups.back().push_back(order[k]);
  }
  for (auto& g : ranking.groups) std::sort(g.begin(), g.end());
  return ranking;
}

}  // namespace spectrank
