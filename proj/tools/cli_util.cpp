#include "cli_util.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include "spectrank/dense_matrix.hpp"
#include "spectrank/error.hpp"
#include "spectrank/ranking.hpp"

namespace spectrank::cli {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::IoError, "cannot open '" + path + "'");
  return in;
}

}  // namespace

LabeledGraph load_graph(const InputOptions& options, const std::string& fallback) {
  std::ifstream in = open_input(options.path);
  LabeledGraph graph;
  if (options.format == "edgelist") {
    graph = parse_edge_list(in, /*weighted=*/true);
  } else if (options.format == "mm") {
    graph.matrix = parse_matrix_market(in);
    graph.labels.reserve(graph.matrix.n_rows());
    for (std::size_t i = 0; i < graph.matrix.n_rows(); ++i) {
      graph.labels.push_back(std::to_string(i));
    }
  } else {
    fail(ErrorKind::InvalidArgument, "unknown input format '" + options.format + "'");
  }

  std::string mode = options.normalize == "auto" ? fallback : options.normalize;
  if (mode == "none") return graph;
  NormalizeMode normalize_mode;
  if (mode == "strict") {
    normalize_mode = NormalizeMode::Strict;
  } else if (mode == "dangling-uniform") {
    normalize_mode = NormalizeMode::DanglingUniform;
  } else if (mode == "dangling-zero") {
    normalize_mode = NormalizeMode::DanglingZero;
  } else {
    fail(ErrorKind::InvalidArgument, "unknown normalization '" + mode + "'");
  }
  graph.matrix = row_normalize(graph.matrix, normalize_mode);
  return graph;
}

ScoreVector load_pref(const std::string& path, const std::vector<std::string>& labels,
                      bool as_distribution) {
  std::unordered_map<std::string, std::size_t> index_of;
  for (std::size_t i = 0; i < labels.size(); ++i) index_of.emplace(labels[i], i);

  std::ifstream in = open_input(path);
  ScoreVector v = ScoreVector::zeros(labels.size());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      fail(ErrorKind::ParseError,
           "pref line " + std::to_string(line_no) + ": expected label<TAB>weight");
    }
    std::string label = line.substr(0, tab);
    std::string weight_text = line.substr(tab + 1);
    double weight = 0.0;
    auto [end, ec] =
        std::from_chars(weight_text.data(), weight_text.data() + weight_text.size(), weight);
    if (ec != std::errc{} || end != weight_text.data() + weight_text.size() ||
        !std::isfinite(weight)) {
      fail(ErrorKind::NonFiniteWeight,
           "pref line " + std::to_string(line_no) + ": bad weight '" + weight_text + "'");
    }
    auto it = index_of.find(label);
    if (it == index_of.end()) {
      std::cerr << "warning: pref label '" << label << "' is not in the graph, skipping\n";
      continue;
    }
    v[it->second] += weight;
  }

  if (as_distribution) {
    double sum = entry_sum(v);
    if (!(sum > 0.0)) {
      fail(ErrorKind::InvalidArgument, "preference weights must have a positive sum");
    }
    for (double& x : v.entries) x /= sum;
  }
  return v;
}

std::vector<double> load_weights(const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<double> weights;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    double w = 0.0;
    auto [end, ec] = std::from_chars(line.data(), line.data() + line.size(), w);
    if (ec != std::errc{} || end != line.data() + line.size()) {
      fail(ErrorKind::ParseError,
           "weights line " + std::to_string(line_no) + ": bad number '" + line + "'");
    }
    weights.push_back(w);
  }
  return weights;
}

std::vector<double> parse_alpha_list(const std::string& text) {
  std::vector<double> alphas;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    double a = 0.0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), a);
    if (ec != std::errc{} || end != token.data() + token.size()) {
      fail(ErrorKind::InvalidArgument, "bad alpha '" + token + "'");
    }
    alphas.push_back(a);
  }
  if (alphas.empty()) fail(ErrorKind::InvalidArgument, "empty alpha list");
  return alphas;
}

std::size_t oracle_cap_from_env() {
  const char* env = std::getenv("SPECTRANK_ORACLE_CAP");
  if (env == nullptr || *env == '\0') return kDefaultOracleCap;
  std::size_t cap = 0;
  std::string text(env);
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc{} || end != text.data() + text.size() || cap == 0) {
    fail(ErrorKind::InvalidArgument, "bad SPECTRANK_ORACLE_CAP '" + text + "'");
  }
  return cap;
}

void write_ranking_file(const ScoreVector& scores, double tie_tol,
                        const std::vector<std::string>& labels, const std::string& path_or_empty,
                        const std::string& stdout_header) {
  Ranking ranking = ranking_from_scores(scores, tie_tol);
  if (path_or_empty.empty()) {
    if (!stdout_header.empty()) std::cout << "# " << stdout_header << '\n';
    write_ranking(scores, ranking, labels, std::cout);
    return;
  }
  std::ofstream out(path_or_empty);
  if (!out) fail(ErrorKind::IoError, "cannot write '" + path_or_empty + "'");
  write_ranking(scores, ranking, labels, out);
}

}  // namespace spectrank::cli
