#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "commands.hpp"
#include "spectrank/error.hpp"
#include "spectrank/rankers.hpp"

namespace spectrank::cli {

namespace {

bool is_markovian(const std::string& method) {
  return method == "seeley" || method == "pagerank" || method == "markovian" ||
         method == "eigenfactor" || method == "surfer";
}

void print_report(const std::string& method, std::size_t n, const RankerReport& report) {
  std::fprintf(stderr, "method=%s n=%zu iterations=%zu residual=%.3e", method.c_str(), n,
               report.iterations, report.residual);
  if (std::isfinite(report.lambda0)) std::fprintf(stderr, " lambda0=%.9g", report.lambda0);
  std::fprintf(stderr, " converged=%d\n", report.converged ? 1 : 0);
}

}  // namespace

int run_rank(const RankOptions& options) {
  const std::string& method = options.method;
  LabeledGraph graph = load_graph(options.input, is_markovian(method) ? "dangling-uniform" : "none");
  const std::size_t n = graph.matrix.n_rows();

  bool markovian_pref = is_markovian(method);
  ScoreVector pref;
  if (!options.pref_path.empty()) {
    pref = load_pref(options.pref_path, graph.labels, markovian_pref);
  } else if (markovian_pref) {
    pref = ScoreVector::uniform(n);
  } else {
    pref = ScoreVector::ones(n);  // raw boundary condition
  }

  DampingParams params{.alpha = options.alpha,
                       .lambda0 = options.lambda0 > 0.0
                                      ? std::optional<double>(options.lambda0)
                                      : std::nullopt,
                       .tol = options.tol,
                       .max_iter = options.max_iter};

  ScoreVector scores;
  RankerReport report;
  if (method == "seeley") {
    report = left_dominant_ranking(graph.matrix, options.tol, options.max_iter);
    scores = report.scores;
  } else if (method == "wei") {
    auto [ranking, wei_report] = wei_ranking(graph.matrix, options.tie_tol, options.max_iter);
    report = std::move(wei_report);
    scores = report.scores;
  } else if (method == "katz" || method == "katz-classic") {
    SeriesMethod series = SeriesMethod::Solve;
    if (options.variant == "neumann") {
      series = SeriesMethod::Neumann;
    } else if (options.variant != "solve") {
      fail(ErrorKind::InvalidArgument, "katz variant must be 'solve' or 'neumann'");
    }
    KatzVariant variant =
        method == "katz" ? KatzVariant::PathSum : KatzVariant::Classic;
    report = katz_index(graph.matrix, params, variant, series);
    scores = report.scores;
  } else if (method == "hubbell") {
    report = hubbell_index(graph.matrix, pref, options.tol, options.max_iter);
    scores = report.scores;
  } else if (method == "damped") {
    report = damped_spectral_ranking(graph.matrix, pref, params);
    scores = report.scores;
  } else if (method == "pagerank") {
    report = pagerank(graph.matrix, pref, options.alpha, options.tol, options.max_iter);
    scores = report.scores;
  } else if (method == "markovian") {
    scores = markovian_spectral_ranking(graph.matrix, pref, oracle_cap_from_env());
    report.scores = scores;
    report.converged = true;
    report.lambda0 = 1.0;
  } else if (method == "eigenfactor") {
    report = eigenfactor(graph.matrix, pref, options.alpha, options.tol);
    scores = report.scores;
  } else if (method == "pinski-narin" || method == "geller") {
    report = pinski_narin(graph.matrix,
                          method == "geller" ? PinskiNarinConvention::GellerI
                                             : PinskiNarinConvention::PaperJ,
                          options.tol, options.max_iter);
    scores = report.scores;
  } else if (method == "hoede") {
    report = hoede_index(graph.matrix, options.tol);
    scores = report.scores;
  } else if (method == "ahp") {
    report = ahp_right_ranking(graph.matrix, options.tol, options.max_iter);
    scores = report.scores;
  } else if (method == "hits") {
    HitsResult result = hits(graph.matrix, options.tol, options.max_iter);
    print_report("hits.authority", n, result.authority);
    print_report("hits.hub", n, result.hub);
    if (options.output.empty()) {
      write_ranking_file(result.authority.scores, options.tie_tol, graph.labels, "", "authority");
      write_ranking_file(result.hub.scores, options.tie_tol, graph.labels, "", "hub");
    } else {
      write_ranking_file(result.authority.scores, options.tie_tol, graph.labels,
                         options.output + ".auth.tsv", "");
      write_ranking_file(result.hub.scores, options.tie_tol, graph.labels,
                         options.output + ".hub.tsv", "");
    }
    return 0;
  } else if (method == "surfer") {
    if (options.weights_path.empty()) {
      fail(ErrorKind::InvalidArgument, "surfer needs --weights FILE");
    }
    scores = surfer_prediction(graph.matrix, pref, load_weights(options.weights_path));
    report.scores = scores;
    report.converged = true;
  } else {
    fail(ErrorKind::InvalidArgument, "unknown method '" + method + "'");
  }

  print_report(method, n, report);
  write_ranking_file(scores, options.tie_tol, graph.labels, options.output, "");
  return 0;
}

}  // namespace spectrank::cli
