#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spectrank/ranking.hpp"
#include "spectrank/score_vector.hpp"
#include "spectrank/sparse_matrix.hpp"

namespace spectrank {

struct LabeledGraph {
  SparseMatrix matrix;
  std::vector<std::string> labels;  // index-aligned, unique
};

// Tab-separated edges "src<TAB>dst[<TAB>weight]", '#' comment lines, UTF-8
// labels. Nodes are indexed by first appearance, duplicate edges sum their
// weights, the default weight is 1. With weighted=false a third column is a
// parse error.
LabeledGraph parse_edge_list(std::istream& in, bool weighted = true);

// MatrixMarket coordinate format, real/integer/pattern entries, general or
// symmetric (symmetric entries are mirrored); pattern entries get weight 1.
SparseMatrix parse_matrix_market(std::istream& in);

// TSV lines "rank<TAB>label<TAB>score" with competition ranking (tied nodes
// share a rank, the next group skips past them) and scores printed with 17
// significant digits so they round-trip exactly.
void write_ranking(const ScoreVector& scores, const Ranking& ranking,
                   const std::vector<std::string>& labels, std::ostream& out);

struct ParsedRanking {
  std::vector<std::string> labels;     // in file order (best first)
  std::vector<std::size_t> ranks;      // competition rank per line
  std::vector<double> scores;

  // Rebuilds tie groups from shared rank numbers, node index = line order.
  Ranking to_ranking() const;
};

ParsedRanking parse_ranking(std::istream& in);

// Kendall tau-b over the tie groups of two rankings of the same node set.
// Pairs tied in both rankings count toward neither the concordances nor the
// tie corrections; 1 exactly when all comparable pairs agree.
double kendall_tau(const Ranking& a, const Ranking& b);

// Aligns two parsed ranking files by label before comparing; throws
// NodeSetMismatch when the label sets differ.
double kendall_tau_labeled(const ParsedRanking& a, const ParsedRanking& b);

}  // namespace spectrank
