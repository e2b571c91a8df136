#include <cmath>
#include <string>
#include <utility>

#include "spectrank/error.hpp"
#include "spectrank/matrix_ops.hpp"
#include "spectrank/oracle.hpp"
#include "spectrank/rankers.hpp"

namespace spectrank {

namespace {

// lambda0 used by the series preconditions: pinned by the caller, estimated
// for nonnegative matrices, or read off the dense spectrum for sign-indefinite
// ones (desk scale only).
double resolve_lambda0(const SparseMatrix& m, const DampingParams& params) {
  if (params.lambda0) {
    if (!(*params.lambda0 > 0.0)) {
      fail(ErrorKind::InvalidArgument, "pinned lambda0 must be positive");
    }
    return *params.lambda0;
  }
  if (m.is_nonnegative()) {
    // The estimate only feeds the divergence precondition; tolerances below
    // the power-iteration rounding floor would just stall it.
    return spectral_radius_estimate(m, std::max(params.tol, 1e-12), params.max_iter);
  }
  if (m.n_rows() <= kDefaultOracleCap) {
    return dense_spectrum(DenseMatrix::from_sparse(m)).spectral_radius();
  }
  fail(ErrorKind::TooLarge,
       "sign-indefinite matrix of dimension " + std::to_string(m.n_rows()) +
           " needs the dense spectrum, which is capped at " + std::to_string(kDefaultOracleCap));
}

// The estimator reports lambda0 only up to tol, so contraction factors
// within that slack of 1 are treated as divergent; they would be unusable
// in practice even when nominally below 1.
void require_convergent(double alpha, double lambda0, double tol) {
  double q = std::abs(alpha) * lambda0;
  if (q >= 1.0 - std::max(10.0 * tol, 1e-11)) {
    fail(ErrorKind::DivergentSeries, "|alpha| * lambda0 = " + std::to_string(q) +
                                         " >= 1, the path summation diverges");
  }
}

struct SeriesResult {
  ScoreVector sum;
  std::size_t iterations = 0;
  double residual = 0.0;
};

// Fixpoint of x = b + alpha x M by stationary iteration; the step size
// ||x_{k+1} - x_k||_1 equals the fixpoint residual at x_k.
SeriesResult series_solve(const SparseMatrix& m, const ScoreVector& b, double alpha, double tol,
                          std::size_t max_iter) {
  SeriesResult r;
  r.sum = b;
  for (std::size_t iter = 1; iter <= max_iter; ++iter) {
    ScoreVector next = vec_mat(r.sum, m);
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = b[i] + alpha * next[i];
    r.residual = l1_diff(next, r.sum);
    r.iterations = iter;
    r.sum = std::move(next);
    if (r.residual <= tol) return r;
  }
  fail(ErrorKind::NoConvergence, "series fixpoint residual " + std::to_string(r.residual) +
                                     " after " + std::to_string(max_iter) + " iterations");
}

// Explicit partial sums of b (alpha M)^k with a geometric tail bound driven
// by q = |alpha| * lambda0. Terms of non-normal matrices can grow before the
// asymptotic rate kicks in, so the bound has to hold for a few consecutive
// terms; an exactly vanished term ends a nilpotent series.
SeriesResult series_neumann(const SparseMatrix& m, const ScoreVector& b, double alpha, double q,
                            double tol, std::size_t max_iter) {
  SeriesResult r;
  r.sum = b;
  ScoreVector term = b;
  double amplification = q / (1.0 - q);
  std::size_t consecutive_small = 0;
  for (std::size_t iter = 1; iter <= max_iter; ++iter) {
    term = vec_mat(term, m);
    for (double& x : term.entries) x *= alpha;
    r.sum = axpy(r.sum, 1.0, term);
    r.iterations = iter;
    double tn = norm1(term);
    r.residual = tn * amplification;
    if (tn == 0.0) {
      r.residual = 0.0;
      return r;
    }
    consecutive_small = r.residual <= tol && tn <= tol ? consecutive_small + 1 : 0;
    if (consecutive_small >= 3) return r;
  }
  fail(ErrorKind::NoConvergence, "series tail bound " + std::to_string(r.residual) + " after " +
                                     std::to_string(max_iter) + " terms");
}

}  // namespace

RankerReport katz_index(const SparseMatrix& m, const DampingParams& params, KatzVariant variant,
                        SeriesMethod method) {
  checks::require_square(m, "katz_index");
  const std::size_t n = m.n_rows();
  ScoreVector ones = ScoreVector::ones(n);

  RankerReport report;
  if (params.alpha == 0.0) {
    // Zero damping collapses the series to its first term for any matrix.
    report.scores = variant == KatzVariant::PathSum ? ones : vec_mat(ones, m);
    report.converged = true;
    if (params.lambda0) report.lambda0 = *params.lambda0;
    return report;
  }

  double lambda0 = resolve_lambda0(m, params);
  require_convergent(params.alpha, lambda0, params.tol);
  double q = std::abs(params.alpha) * lambda0;

  SeriesResult series =
      method == SeriesMethod::Solve
          ? series_solve(m, ones, params.alpha, params.tol, params.max_iter)
          : series_neumann(m, ones, params.alpha, q, params.tol, params.max_iter);

  report.iterations = series.iterations;
  report.converged = true;
  report.lambda0 = lambda0;
  if (variant == KatzVariant::PathSum) {
    report.scores = std::move(series.sum);
    report.residual = series.residual;
  } else {
    report.scores = vec_mat(series.sum, m);
    // Recompute the fixpoint defect of the classic vector y = 1 M + alpha y M.
    ScoreVector target = axpy(vec_mat(ones, m), params.alpha, vec_mat(report.scores, m));
    report.residual = l1_diff(report.scores, target);
  }
  return report;
}

RankerReport hubbell_index(const SparseMatrix& m, const ScoreVector& v, double tol,
                           std::size_t max_iter) {
  checks::require_square(m, "hubbell_index");
  if (v.size() != m.n_rows()) fail(ErrorKind::DimensionMismatch, "hubbell_index boundary length");
  check_finite(v, "hubbell boundary condition");

  DampingParams probe{.alpha = 1.0, .lambda0 = std::nullopt, .tol = tol, .max_iter = max_iter};
  double lambda0 = resolve_lambda0(m, probe);
  require_convergent(1.0, lambda0, tol);

  SeriesResult series = series_solve(m, v, 1.0, tol, max_iter);
  RankerReport report;
  report.scores = std::move(series.sum);
  report.iterations = series.iterations;
  report.residual = series.residual;
  report.converged = true;
  report.lambda0 = lambda0;
  return report;
}

RankerReport damped_spectral_ranking(const SparseMatrix& m, const ScoreVector& v,
                                     const DampingParams& params) {
  checks::require_square(m, "damped_spectral_ranking");
  if (v.size() != m.n_rows()) {
    fail(ErrorKind::DimensionMismatch, "damped_spectral_ranking boundary length");
  }
  check_finite(v, "damped boundary condition");

  RankerReport report;
  if (params.alpha == 0.0) {
    report.scores = v;
    report.converged = true;
    if (params.lambda0) report.lambda0 = *params.lambda0;
    return report;
  }

  double lambda0 = resolve_lambda0(m, params);
  require_convergent(params.alpha, lambda0, params.tol);

  SeriesResult series = series_solve(m, v, params.alpha, params.tol, params.max_iter);
  double factor = 1.0 - lambda0 * params.alpha;
  report.scores = series.sum;
  for (double& x : report.scores.entries) x *= factor;
  report.iterations = series.iterations;
  report.residual = std::abs(factor) * series.residual;
  report.converged = true;
  report.lambda0 = lambda0;
  return report;
}

RankerReport pagerank(const SparseMatrix& p, const ScoreVector& v, double alpha, double tol,
                      std::size_t max_iter) {
  checks::require_stochastic(p, /*strict=*/false, "pagerank");
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    fail(ErrorKind::InvalidArgument, "pagerank needs 0 <= alpha < 1");
  }
  if (p.n_rows() == 0 && v.empty()) return {.converged = true, .lambda0 = 1.0};
  if (v.size() != p.n_rows()) fail(ErrorKind::DimensionMismatch, "pagerank preference length");
  check_finite(v, "pagerank preference vector");
  for (double x : v.entries) {
    if (x < 0.0) fail(ErrorKind::InvalidArgument, "preference vector must be nonnegative");
  }
  if (p.n_rows() > 0 && std::abs(entry_sum(v) - 1.0) > 1e-6) {
    fail(ErrorKind::InvalidArgument, "preference vector must be a distribution");
  }

  bool substochastic = false;
  for (std::size_t i = 0; i < p.n_rows(); ++i) {
    if (p.row_sum(i) < 1.0 - 1e-9) substochastic = true;
  }

  DampingParams params{.alpha = alpha, .lambda0 = 1.0, .tol = tol / 2.0, .max_iter = max_iter};
  RankerReport report = damped_spectral_ranking(p, v, params);
  if (!substochastic && !report.scores.empty()) {
    // The exact solution is a distribution; scaling the iterate onto the
    // simplex costs at most one extra residual of the same magnitude.
    double nrm = norm1(report.scores);
    for (double& x : report.scores.entries) x /= nrm;
    ScoreVector target = vec_mat(report.scores, p);
    for (std::size_t i = 0; i < target.size(); ++i) {
      target[i] = alpha * target[i] + (1.0 - alpha) * v[i];
    }
    report.residual = l1_diff(report.scores, target);
  }
  report.lambda0 = 1.0;
  return report;
}

ScoreVector markovian_spectral_ranking(const SparseMatrix& p, const ScoreVector& v,
                                       std::size_t oracle_cap) {
  checks::require_stochastic(p, /*strict=*/true, "markovian_spectral_ranking");
  if (p.n_rows() == 0 && v.empty()) return {};
  if (v.size() != p.n_rows()) {
    fail(ErrorKind::DimensionMismatch, "markovian_spectral_ranking boundary length");
  }
  check_finite(v, "markovian boundary condition");
  DenseMatrix limit = dense_cesaro(DenseMatrix::from_sparse(p, oracle_cap));
  return limit.apply_left(v);
}

RankerReport eigenfactor(const SparseMatrix& s, const ScoreVector& v, double alpha, double tol) {
  checks::require_stochastic(s, /*strict=*/true, "eigenfactor");
  if (s.n_rows() == 0 && v.empty()) return {.converged = true, .lambda0 = 1.0};
  RankerReport report = pagerank(s, v, alpha, tol);
  report.scores = normalized_l1(vec_mat(report.scores, s));
  // iterations and residual describe the damped stage; the trailing
  // endorsement step is a single exact product.
  return report;
}

RankerReport hoede_index(const SparseMatrix& m, double tol) {
  DampingParams params{.alpha = 1.0, .lambda0 = std::nullopt, .tol = tol, .max_iter = 100000};
  return katz_index(m, params, KatzVariant::Classic, SeriesMethod::Solve);
}

ScoreVector surfer_prediction(const SparseMatrix& p, const ScoreVector& v,
                              const std::vector<double>& weights) {
  checks::require_stochastic(p, /*strict=*/true, "surfer_prediction");
  if (v.size() != p.n_rows()) fail(ErrorKind::DimensionMismatch, "surfer_prediction start length");
  check_finite(v, "surfer start vector");
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      fail(ErrorKind::InvalidArgument, "surfing-time weights must be finite and nonnegative");
    }
  }

  ScoreVector acc = ScoreVector::zeros(p.n_rows());
  if (weights.empty()) return acc;
  ScoreVector state = v;
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = weights[0] * state[i];
  for (std::size_t t = 1; t < weights.size(); ++t) {
    state = vec_mat(state, p);
    if (weights[t] == 0.0) continue;
    acc = axpy(acc, weights[t], state);
  }
  return acc;
}

}  // namespace spectrank
