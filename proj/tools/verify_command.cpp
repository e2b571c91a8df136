#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numeric>
#include <vector>

#include "commands.hpp"
#include "spectrank/error.hpp"
#include "spectrank/oracle.hpp"
#include "spectrank/rankers.hpp"

namespace spectrank::cli {

namespace {

bool report_check(const char* label, double measured, double limit) {
  bool pass = std::isfinite(measured) && measured <= limit;
  std::printf("  %-28s %11.4e  (limit %.1e)  %s\n", label, measured, limit,
              pass ? "PASS" : "FAIL");
  return pass;
}

void print_matrix(const DenseMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::printf("   ");
    for (std::size_t j = 0; j < m.size(); ++j) std::printf(" %10.6f", m.at(i, j));
    std::printf("\n");
  }
}

// Worst pairwise distance under the best assignment of observed to expected
// eigenvalues: exhaustive for small spectra, greedy nearest-neighbour above.
double spectrum_match_distance(std::vector<std::complex<double>> expected,
                               std::vector<std::complex<double>> observed) {
  const std::size_t n = expected.size();
  if (n != observed.size()) return std::numeric_limits<double>::infinity();
  if (n <= 8) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
      double worst = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        worst = std::max(worst, std::abs(expected[i] - observed[perm[i]]));
        if (worst >= best) break;
      }
      best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }
  std::vector<bool> used(n, false);
  double worst = 0.0;
  for (const auto& e : expected) {
    double nearest = std::numeric_limits<double>::infinity();
    std::size_t pick = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      double d = std::abs(e - observed[j]);
      if (d < nearest) {
        nearest = d;
        pick = j;
      }
    }
    used[pick] = true;
    worst = std::max(worst, nearest);
  }
  return worst;
}

int verify_cesaro(const DenseMatrix& s, double tol) {
  DenseMatrix limit = dense_cesaro(s, tol);
  if (s.size() <= 8) {
    std::printf("  S* =\n");
    print_matrix(limit);
  }
  double bound = 10.0 * tol;
  bool pass = true;
  pass &= report_check("||S*S - S*||_inf", limit.multiply(s).max_abs_diff(limit), bound);
  pass &= report_check("||SS* - S*||_inf", s.multiply(limit).max_abs_diff(limit), bound);
  pass &= report_check("||S*S* - S*||_inf", limit.multiply(limit).max_abs_diff(limit), bound);
  return pass ? 0 : 2;
}

int verify_brauer(const DenseMatrix& m, double alpha, double tol, const ScoreVector* pref) {
  PerronPair perron = dense_right_perron(m);
  ScoreVector v = pref != nullptr ? *pref : ScoreVector::uniform(m.size());
  double coupling = dot(v, perron.vector);
  if (coupling == 0.0) fail(ErrorKind::InvalidArgument, "v is orthogonal to the Perron vector");
  // Scale v so that v x^T equals lambda0: the perturbed matrix then keeps
  // the dominant eigenvalue and multiplies the rest by alpha.
  for (double& x : v.entries) x *= perron.value / coupling;

  SpectrumReport original = dense_spectrum(m);
  DenseMatrix perturbed(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      perturbed.at(i, j) = alpha * m.at(i, j) + (1.0 - alpha) * perron.vector[i] * v[j];
    }
  }
  SpectrumReport observed = dense_spectrum(perturbed);

  std::vector<std::complex<double>> expected;
  expected.emplace_back(perron.value, 0.0);
  for (std::size_t i = 1; i < original.eigenvalues.size(); ++i) {
    expected.push_back(alpha * original.eigenvalues[i]);
  }
  if (m.size() <= 8) {
    std::printf("  expected:");
    for (const auto& e : expected) std::printf(" (%.6g%+.6gi)", e.real(), e.imag());
    std::printf("\n  observed:");
    for (const auto& o : observed.eigenvalues) std::printf(" (%.6g%+.6gi)", o.real(), o.imag());
    std::printf("\n");
  }
  double distance = spectrum_match_distance(expected, observed.eigenvalues);
  return report_check("spectrum match", distance, tol) ? 0 : 2;
}

int verify_resolvent(const DenseMatrix& s, const std::vector<double>& alphas, double tol) {
  std::vector<ResolventCheck> checks = dense_resolvent_limit(s, alphas);
  bool pass = true;
  for (const ResolventCheck& check : checks) {
    char label[64];
    std::snprintf(label, sizeof(label), "alpha=%g discrepancy", check.alpha);
    if (!check.series_converged) {
      std::printf("  %-28s %11s  (series diverged after %zu terms)  FAIL\n", label, "n/a",
                  check.series_terms);
      pass = false;
      continue;
    }
    pass &= report_check(label, check.discrepancy, tol);
  }
  return pass ? 0 : 2;
}

int verify_limit_sweep(const SparseMatrix& p, const std::vector<double>& alphas, double final_gap,
                       std::size_t cap, const ScoreVector* pref) {
  ScoreVector v = pref != nullptr ? *pref : ScoreVector::uniform(p.n_rows());
  ScoreVector limit = markovian_spectral_ranking(p, v, cap);
  bool pass = true;
  double previous = std::numeric_limits<double>::infinity();
  for (double alpha : alphas) {
    RankerReport damped = pagerank(p, v, alpha, 1e-12);
    double gap = l1_diff(damped.scores, limit);
    char label[64];
    std::snprintf(label, sizeof(label), "alpha=%g l1 gap", alpha);
    // Gaps at the rounding floor count as converged rather than breaking
    // the strict decrease (symmetric inputs hit the limit exactly).
    bool decreasing = gap < previous || gap <= 1e-12;
    std::printf("  %-28s %11.4e  %s\n", label, gap,
                decreasing ? "(decreasing) PASS" : "(not decreasing) FAIL");
    pass &= decreasing;
    previous = gap;
  }
  pass &= report_check("final gap", previous, final_gap);
  return pass ? 0 : 2;
}

}  // namespace

int run_verify(const VerifyOptions& options) {
  bool markov_mode = options.mode == "cesaro" || options.mode == "resolvent" ||
                     options.mode == "limit-sweep";
  LabeledGraph graph = load_graph(options.input, markov_mode ? "dangling-uniform" : "none");
  std::size_t cap = oracle_cap_from_env();

  ScoreVector pref;
  bool have_pref = !options.pref_path.empty();
  if (have_pref) {
    pref = load_pref(options.pref_path, graph.labels, /*as_distribution=*/markov_mode);
  }

  std::printf("verify %s: n=%zu nnz=%zu\n", options.mode.c_str(), graph.matrix.n_rows(),
              graph.matrix.nnz());
  int rc;
  if (options.mode == "cesaro") {
    double tol = options.tol > 0.0 ? options.tol : 1e-8;
    rc = verify_cesaro(DenseMatrix::from_sparse(graph.matrix, cap), tol);
  } else if (options.mode == "brauer") {
    double tol = options.tol > 0.0 ? options.tol : 1e-6;
    rc = verify_brauer(DenseMatrix::from_sparse(graph.matrix, cap), options.alpha, tol,
                       have_pref ? &pref : nullptr);
  } else if (options.mode == "resolvent") {
    double tol = options.tol > 0.0 ? options.tol : 1e-8;
    std::vector<double> alphas =
        options.alphas.empty() ? std::vector<double>{0.9, 0.99} : parse_alpha_list(options.alphas);
    rc = verify_resolvent(DenseMatrix::from_sparse(graph.matrix, cap), alphas, tol);
  } else if (options.mode == "limit-sweep") {
    double final_gap = options.tol > 0.0 ? options.tol : 1e-2;
    std::vector<double> alphas = options.alphas.empty()
                                     ? std::vector<double>{0.9, 0.99, 0.999}
                                     : parse_alpha_list(options.alphas);
    if (graph.matrix.n_rows() > cap) {
      fail(ErrorKind::TooLarge, "limit-sweep needs the dense limit; n exceeds the cap");
    }
    rc = verify_limit_sweep(graph.matrix, alphas, final_gap, cap, have_pref ? &pref : nullptr);
  } else {
    fail(ErrorKind::InvalidArgument, "unknown verify mode '" + options.mode + "'");
  }
  std::printf("overall: %s\n", rc == 0 ? "PASS" : "FAIL");
  return rc;
}

}  // namespace spectrank::cli
