#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "spectrank/error.hpp"
#include "spectrank/io.hpp"
#include "spectrank/matrix_ops.hpp"
#include "spectrank/rankers.hpp"
#include "support/test_support.hpp"

using namespace spectrank;
using testsupport::error_kind_of;

TEST_SUITE_BEGIN("io");

TEST_CASE("edge list parsing") {
  std::istringstream in("a\tb\nb\ta\n");
  LabeledGraph graph = parse_edge_list(in);
  CHECK(graph.labels == std::vector<std::string>{"a", "b"});
  CHECK(graph.matrix.nnz() == 2);
  CHECK(graph.matrix.row_values(0)[0] == 1.0);

  std::istringstream duplicated("a\tb\na\tb\n");
  LabeledGraph doubled = parse_edge_list(duplicated);
  CHECK(doubled.matrix.nnz() == 1);
  CHECK(doubled.matrix.row_values(0)[0] == 2.0);

  std::istringstream weighted("# comment\nx\ty\t2.5\n\ny\tx\t0.25\n");
  LabeledGraph graph2 = parse_edge_list(weighted);
  CHECK(graph2.matrix.row_values(0)[0] == 2.5);
  CHECK(graph2.matrix.row_values(1)[0] == 0.25);
}

TEST_CASE("edge list rejects malformed lines") {
  {
    std::istringstream in("a\tb\tNaN\n");
    CHECK_THROWS_WITH_AS(parse_edge_list(in), "NonFiniteWeight: line 1: non-finite weight 'NaN'",
                         Error);
  }
  {
    std::istringstream in("only_one_field\n");
    CHECK(error_kind_of([&] { parse_edge_list(in); }) == ErrorKind::ParseError);
  }
  {
    std::istringstream in("a\tb\t1.0\n");
    CHECK(error_kind_of([&] { parse_edge_list(in, /*weighted=*/false); }) ==
          ErrorKind::ParseError);
  }
  {
    std::istringstream in("a\tb\tx\n");
    CHECK(error_kind_of([&] { parse_edge_list(in); }) == ErrorKind::ParseError);
  }
}

TEST_CASE("edge list is order-insensitive up to relabeling") {
  testsupport::Rng rng(61);
  std::vector<std::string> lines;
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < 12; ++j) {
      if (i != j && (i + 2 * j) % 3 == 0) {
        lines.push_back("n" + std::to_string(i) + "\tn" + std::to_string(j) + "\t" +
                        std::to_string(1.0 + ((i * 7 + j) % 5)));
      }
    }
  }
  std::string forward;
  for (const auto& line : lines) forward += line + "\n";
  std::shuffle(lines.begin(), lines.end(), rng);
  std::string shuffled;
  for (const auto& line : lines) shuffled += line + "\n";

  std::istringstream in_a(forward), in_b(shuffled);
  LabeledGraph a = parse_edge_list(in_a);
  LabeledGraph b = parse_edge_list(in_b);

  // Same scores per label after ranking both parses.
  auto scores_by_label = [](const LabeledGraph& g) {
    SparseMatrix p = row_normalize(g.matrix, NormalizeMode::DanglingUniform);
    RankerReport r = pagerank(p, ScoreVector::uniform(p.n_rows()), 0.85, 1e-12);
    std::vector<std::pair<std::string, double>> out;
    for (std::size_t i = 0; i < g.labels.size(); ++i) out.emplace_back(g.labels[i], r.scores[i]);
    std::sort(out.begin(), out.end());
    return out;
  };
  auto sa = scores_by_label(a);
  auto sb = scores_by_label(b);
  REQUIRE(sa.size() == sb.size());
  for (std::size_t i = 0; i < sa.size(); ++i) {
    CHECK(sa[i].first == sb[i].first);
    CHECK(sa[i].second == doctest::Approx(sb[i].second).epsilon(1e-12));
  }
}

TEST_CASE("matrix market parsing") {
  std::istringstream in(
      "%%MatrixMarket matrix coordinate real general\n"
      "% a 2-cycle\n"
      "2 2 2\n"
      "1 2 1.0\n"
      "2 1 1.0\n");
  SparseMatrix m = parse_matrix_market(in);
  CHECK(m.n_rows() == 2);
  CHECK(m.nnz() == 2);
  CHECK(m.row_cols(0)[0] == 1);

  std::istringstream pattern(
      "%%MatrixMarket matrix coordinate pattern general\n"
      "2 2 1\n"
      "1 2\n");
  SparseMatrix pat = parse_matrix_market(pattern);
  CHECK(pat.row_values(0)[0] == 1.0);

  std::istringstream symmetric(
      "%%MatrixMarket matrix coordinate real symmetric\n"
      "3 3 2\n"
      "2 1 0.5\n"
      "3 3 2.0\n");
  SparseMatrix sym = parse_matrix_market(symmetric);
  CHECK(sym.nnz() == 3);  // mirrored off-diagonal plus the diagonal entry
  CHECK(sym.row_values(0)[0] == 0.5);
  CHECK(sym.row_values(1)[0] == 0.5);
}

TEST_CASE("matrix market rejects unsupported qualifiers") {
  std::istringstream complex_field(
      "%%MatrixMarket matrix coordinate complex general\n"
      "1 1 1\n"
      "1 1 1.0 0.0\n");
  CHECK(error_kind_of([&] { parse_matrix_market(complex_field); }) ==
        ErrorKind::UnsupportedField);

  std::istringstream array_format("%%MatrixMarket matrix array real general\n1 1\n1.0\n");
  CHECK(error_kind_of([&] { parse_matrix_market(array_format); }) == ErrorKind::UnsupportedField);

  std::istringstream out_of_range(
      "%%MatrixMarket matrix coordinate real general\n"
      "2 2 1\n"
      "3 1 1.0\n");
  CHECK(error_kind_of([&] { parse_matrix_market(out_of_range); }) == ErrorKind::ParseError);
}

TEST_CASE("ranking output uses competition ranks and exact scores") {
  ScoreVector scores({2.0, 1.0});
  std::ostringstream out;
  write_ranking(scores, ranking_from_scores(scores), {"a", "b"}, out);
  CHECK(out.str() == "1\ta\t2\n2\tb\t1\n");

  ScoreVector tied({1.0, 1.0, 0.5});
  std::ostringstream tied_out;
  write_ranking(tied, ranking_from_scores(tied), {"a", "b", "c"}, tied_out);
  CHECK(tied_out.str() == "1\ta\t1\n1\tb\t1\n3\tc\t0.5\n");

  std::ostringstream empty_out;
  write_ranking(ScoreVector(), ranking_from_scores(ScoreVector()), {}, empty_out);
  CHECK(empty_out.str().empty());
}

TEST_CASE("written rankings parse back bit-exactly") {
  testsupport::Rng rng(62);
  for (int instance = 0; instance < 20; ++instance) {
    ScoreVector scores = testsupport::random_vector(rng, 17, -3.0, 3.0);
    if (instance % 3 == 0) scores[5] = scores[11];  // exercise exact ties
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < scores.size(); ++i) labels.push_back("n" + std::to_string(i));

    Ranking ranking = ranking_from_scores(scores);
    std::ostringstream out;
    write_ranking(scores, ranking, labels, out);

    std::istringstream in(out.str());
    ParsedRanking parsed = parse_ranking(in);
    REQUIRE(parsed.labels.size() == scores.size());
    // Same tie-group sizes in order; the parsed ranking numbers nodes by
    // line, so contents are checked through the label mapping below.
    Ranking reparsed = parsed.to_ranking();
    REQUIRE(reparsed.groups.size() == ranking.groups.size());
    for (std::size_t g = 0; g < ranking.groups.size(); ++g) {
      CHECK(reparsed.groups[g].size() == ranking.groups[g].size());
    }
    std::size_t line = 0;
    for (const auto& group : ranking.groups) {
      for (std::size_t node : group) {
        CHECK(parsed.labels[line] == labels[node]);
        CHECK(parsed.scores[line] == scores[node]);  // bitwise round-trip
        ++line;
      }
    }
  }
}

TEST_CASE("kendall tau on small rankings") {
  Ranking abc = ranking_from_scores(ScoreVector({3.0, 2.0, 1.0}));
  CHECK(kendall_tau(abc, abc) == 1.0);

  Ranking cba = ranking_from_scores(ScoreVector({1.0, 2.0, 3.0}));
  CHECK(kendall_tau(abc, cba) == -1.0);

  Ranking acb = ranking_from_scores(ScoreVector({3.0, 1.0, 2.0}));
  CHECK(kendall_tau(abc, acb) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  Ranking two = ranking_from_scores(ScoreVector({1.0, 2.0}));
  CHECK(error_kind_of([&] { kendall_tau(abc, two); }) == ErrorKind::NodeSetMismatch);
}

TEST_CASE("kendall tau handles ties through the correction") {
  Ranking strict = ranking_from_scores(ScoreVector({3.0, 2.0, 1.0}));
  Ranking pair_tied = ranking_from_scores(ScoreVector({3.0, 3.0, 1.0}));
  // Pairs: (0,1) tied only in the second; (0,2) and (1,2) concordant.
  CHECK(kendall_tau(strict, pair_tied) ==
        doctest::Approx(2.0 / std::sqrt(3.0 * 2.0)).epsilon(1e-12));

  Ranking all_tied = ranking_from_scores(ScoreVector({1.0, 1.0, 1.0}));
  CHECK(kendall_tau(all_tied, all_tied) == 1.0);
  CHECK(kendall_tau(strict, all_tied) == 0.0);
}

TEST_CASE("label-aligned comparison detects node set mismatches") {
  auto parsed = [](const std::string& text) {
    std::istringstream in(text);
    return parse_ranking(in);
  };
  ParsedRanking a = parsed("1\tx\t3\n2\ty\t2\n3\tz\t1\n");
  ParsedRanking same = parsed("1\tz\t9\n2\ty\t8\n3\tx\t7\n");
  CHECK(kendall_tau_labeled(a, same) == -1.0);

  ParsedRanking other = parsed("1\tx\t3\n2\ty\t2\n3\tw\t1\n");
  CHECK(error_kind_of([&] { kendall_tau_labeled(a, other); }) == ErrorKind::NodeSetMismatch);
}

TEST_SUITE_END();
