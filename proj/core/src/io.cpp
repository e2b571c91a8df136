#include "spectrank/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "spectrank/error.hpp"

namespace spectrank {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find('\t', start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(const std::string& text, std::size_t line_no, ErrorKind bad_number_kind) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [end, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || end != last) {
    fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad number '" + text + "'");
  }
  if (!std::isfinite(value)) {
    fail(bad_number_kind, "line " + std::to_string(line_no) + ": non-finite weight '" + text + "'");
  }
  return value;
}

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

LabeledGraph parse_edge_list(std::istream& in, bool weighted) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> index_of;
  std::vector<Triplet> edges;

  auto intern = [&](const std::string& label) {
    auto [it, inserted] = index_of.try_emplace(label, labels.size());
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (is_blank_or_comment(line)) continue;

    std::vector<std::string> fields = split_tabs(line);
    if (fields.size() < 2 || fields[0].empty() || fields[1].empty()) {
      fail(ErrorKind::ParseError,
           "line " + std::to_string(line_no) + ": expected src<TAB>dst[<TAB>weight]");
    }
    double weight = 1.0;
    if (fields.size() >= 3) {
      if (!weighted) {
        fail(ErrorKind::ParseError,
             "line " + std::to_string(line_no) + ": weight column in unweighted input");
      }
      if (fields.size() > 3) {
        fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": too many columns");
      }
      weight = parse_double(fields[2], line_no, ErrorKind::NonFiniteWeight);
    }
    std::size_t src = intern(fields[0]);
    std::size_t dst = intern(fields[1]);
    edges.push_back({src, dst, weight});
  }
  if (in.bad()) fail(ErrorKind::IoError, "stream failure while reading edge list");

  LabeledGraph graph;
  graph.matrix = SparseMatrix::from_triplets(labels.size(), labels.size(), std::move(edges));
  graph.labels = std::move(labels);
  return graph;
}

SparseMatrix parse_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) fail(ErrorKind::ParseError, "empty MatrixMarket stream");
  ++line_no;
  strip_cr(line);
  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket") {
    fail(ErrorKind::ParseError, "missing %%MatrixMarket banner");
  }
  object = lowercase(object);
  format = lowercase(format);
  field = lowercase(field);
  symmetry = lowercase(symmetry);
  if (object != "matrix" || format != "coordinate") {
    fail(ErrorKind::UnsupportedField, "only 'matrix coordinate' inputs are supported");
  }
  bool pattern = field == "pattern";
  if (field != "real" && field != "integer" && !pattern) {
    fail(ErrorKind::UnsupportedField, "unsupported field qualifier '" + field + "'");
  }
  bool symmetric = symmetry == "symmetric";
  if (symmetry != "general" && !symmetric) {
    fail(ErrorKind::UnsupportedField, "unsupported symmetry qualifier '" + symmetry + "'");
  }

  std::size_t n_rows = 0, n_cols = 0, declared = 0;
  bool have_size = false;
  std::vector<Triplet> entries;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty() || line[0] == '%') continue;
    std::istringstream fields(line);
    if (!have_size) {
      if (!(fields >> n_rows >> n_cols >> declared)) {
        fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad size line");
      }
      have_size = true;
      continue;
    }
    std::size_t row = 0, col = 0;
    if (!(fields >> row >> col)) {
      fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad coordinate entry");
    }
    if (row < 1 || row > n_rows || col < 1 || col > n_cols) {
      fail(ErrorKind::ParseError,
           "line " + std::to_string(line_no) + ": coordinate outside the declared size");
    }
    double value = 1.0;
    if (!pattern) {
      std::string token;
      if (!(fields >> token)) {
        fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": missing value");
      }
      value = parse_double(token, line_no, ErrorKind::NonFiniteWeight);
    }
    entries.push_back({row - 1, col - 1, value});
    if (symmetric && row != col) entries.push_back({col - 1, row - 1, value});
  }
  if (in.bad()) fail(ErrorKind::IoError, "stream failure while reading MatrixMarket input");
  if (!have_size) fail(ErrorKind::ParseError, "missing size line");

  return SparseMatrix::from_triplets(n_rows, n_cols, std::move(entries));
}

void write_ranking(const ScoreVector& scores, const Ranking& ranking,
                   const std::vector<std::string>& labels, std::ostream& out) {
  if (labels.size() != scores.size() || ranking.n_nodes() != scores.size()) {
    fail(ErrorKind::DimensionMismatch, "write_ranking: labels, scores and ranking disagree");
  }
  char buffer[64];
  std::size_t rank = 1;
  for (const auto& group : ranking.groups) {
    for (std::size_t node : group) {
      std::snprintf(buffer, sizeof(buffer), "%.17g", scores[node]);
      out << rank << '\t' << labels[node] << '\t' << buffer << '\n';
    }
    rank += group.size();  // competition ranking: 1,1,3
  }
  if (!out) fail(ErrorKind::IoError, "failed to write ranking");
}

Ranking ParsedRanking::to_ranking() const {
  Ranking ranking;
  ranking.source_scores = ScoreVector(scores);
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (i == 0 || ranks[i] != ranks[i - 1]) ranking.groups.emplace_back();
    ranking.groups.back().push_back(i);
  }
  return ranking;
}

ParsedRanking parse_ranking(std::istream& in) {
  ParsedRanking parsed;
  std::string line;
  std::size_t line_no = 0;
  std::size_t previous_rank = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (is_blank_or_comment(line)) continue;
    std::vector<std::string> fields = split_tabs(line);
    if (fields.size() != 3) {
      fail(ErrorKind::ParseError,
           "line " + std::to_string(line_no) + ": expected rank<TAB>label<TAB>score");
    }
    std::size_t rank = 0;
    auto [end, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), rank);
    if (ec != std::errc{} || end != fields[0].data() + fields[0].size() || rank == 0) {
      fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad rank number");
    }
    if (rank < previous_rank) {
      fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": ranks must not decrease");
    }
    previous_rank = rank;
    parsed.ranks.push_back(rank);
    parsed.labels.push_back(fields[1]);
    parsed.scores.push_back(parse_double(fields[2], line_no, ErrorKind::NonFiniteWeight));
  }
  if (in.bad()) fail(ErrorKind::IoError, "stream failure while reading ranking");
  return parsed;
}

double kendall_tau(const Ranking& a, const Ranking& b) {
  if (a.n_nodes() != b.n_nodes()) {
    fail(ErrorKind::NodeSetMismatch, "rankings cover " + std::to_string(a.n_nodes()) + " and " +
                                         std::to_string(b.n_nodes()) + " nodes");
  }
  std::vector<std::size_t> ga = a.group_of_node();
  std::vector<std::size_t> gb = b.group_of_node();
  const std::size_t n = ga.size();

  double concordant = 0.0, discordant = 0.0, ties_a = 0.0, ties_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto da = static_cast<double>(ga[i]) - static_cast<double>(ga[j]);
      auto db = static_cast<double>(gb[i]) - static_cast<double>(gb[j]);
      if (da == 0.0 && db == 0.0) continue;  // tied in both: not comparable
      if (da == 0.0) {
        ties_a += 1.0;
      } else if (db == 0.0) {
        ties_b += 1.0;
      } else if (da * db > 0.0) {
        concordant += 1.0;
      } else {
        discordant += 1.0;
      }
    }
  }
  double denom = std::sqrt((concordant + discordant + ties_a) *
                           (concordant + discordant + ties_b));
  if (denom == 0.0) {
    // No comparable pairs at all: identical (both fully tied) counts as
    // perfect agreement, one-sided full ties as no correlation.
    return ties_a == 0.0 && ties_b == 0.0 ? 1.0 : 0.0;
  }
  return (concordant - discordant) / denom;
}

double kendall_tau_labeled(const ParsedRanking& a, const ParsedRanking& b) {
  if (a.labels.size() != b.labels.size()) {
    fail(ErrorKind::NodeSetMismatch, "ranking files cover " + std::to_string(a.labels.size()) +
                                         " and " + std::to_string(b.labels.size()) + " nodes");
  }
  std::unordered_map<std::string, std::size_t> position_in_b;
  for (std::size_t i = 0; i < b.labels.size(); ++i) {
    if (!position_in_b.try_emplace(b.labels[i], i).second) {
      fail(ErrorKind::ParseError, "duplicate label '" + b.labels[i] + "'");
    }
  }
  {
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < a.labels.size(); ++i) {
      if (!seen.try_emplace(a.labels[i], i).second) {
        fail(ErrorKind::ParseError, "duplicate label '" + a.labels[i] + "'");
      }
    }
  }

  Ranking ra = a.to_ranking();
  Ranking rb_by_a_index;
  {
    // Renumber the second ranking so node i means the node holding label
    // a.labels[i]; group structure is preserved.
    Ranking rb = b.to_ranking();
    std::vector<std::size_t> b_index_to_a_index(b.labels.size());
    for (std::size_t i = 0; i < a.labels.size(); ++i) {
      auto it = position_in_b.find(a.labels[i]);
      if (it == position_in_b.end()) {
        fail(ErrorKind::NodeSetMismatch, "label '" + a.labels[i] + "' missing from second file");
      }
      b_index_to_a_index[it->second] = i;
    }
    rb_by_a_index.groups.reserve(rb.groups.size());
    for (const auto& group : rb.groups) {
      std::vector<std::size_t> mapped;
      mapped.reserve(group.size());
      for (std::size_t node : group) mapped.push_back(b_index_to_a_index[node]);
      std::sort(mapped.begin(), mapped.end());
      rb_by_a_index.groups.push_back(std::move(mapped));
    }
  }
  return kendall_tau(ra, rb_by_a_index);
}

}  // namespace spectrank
