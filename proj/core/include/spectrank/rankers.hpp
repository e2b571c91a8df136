#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "spectrank/damping.hpp"
#include "spectrank/dense_matrix.hpp"
#include "spectrank/ranking.hpp"
#include "spectrank/score_vector.hpp"
#include "spectrank/sparse_matrix.hpp"

namespace spectrank {

// ---------------------------------------------------------------------------
// Dominant-eigenvector rankers
// ---------------------------------------------------------------------------

// Left dominant eigenvector of a nonnegative square matrix: r with
// r M = lambda0 r, l1-normalized and nonnegative. The report carries the
// Rayleigh estimate of lambda0 and the final residual ||r M - lambda0 r||_1.
RankerReport left_dominant_ranking(const SparseMatrix& m, double tol = 1e-9,
                                   std::size_t max_iter = 100000);

// Team ranking by repeated score redistribution: s <- normalize_1(M s),
// starting from the all-ones score. Convergence is judged on the induced
// ranking, which must repeat unchanged for `stable_streak` consecutive
// iterations; the score values themselves may still be moving.
std::pair<Ranking, RankerReport> wei_ranking(const SparseMatrix& m, double tie_tol = 1e-9,
                                             std::size_t max_iter = 100000,
                                             std::size_t stable_streak = 3);

struct HitsResult {
  RankerReport authority;  // dominant eigenvector of A^T A, l2-normalized
  RankerReport hub;        // dominant eigenvector of A A^T, l2-normalized
};

// Mutual-reinforcement scores of a directed graph. The Gram operators are
// applied implicitly (two sparse products per step), never materialized.
HitsResult hits(const SparseMatrix& a, double tol = 1e-9, std::size_t max_iter = 100000);

// Right dominant eigenvector of a positive reciprocal pairwise-comparison
// matrix (m_ij = 1/m_ji, unit diagonal), l1-normalized; lambda0 is reported
// (equals n exactly when the comparisons are consistent).
RankerReport ahp_right_ranking(const SparseMatrix& m, double tol = 1e-9,
                               std::size_t max_iter = 100000);

enum class PinskiNarinConvention {
  PaperJ,   // divide entry (i,j) by the row sum of row j
  GellerI,  // divide entry (i,j) by the row sum of row i (row-stochastic)
};

// Citation-flow ranking: normalizes the citation matrix per the chosen
// convention, then returns its left dominant ranking.
RankerReport pinski_narin(const SparseMatrix& c, PinskiNarinConvention convention,
                          double tol = 1e-9, std::size_t max_iter = 100000);

// ---------------------------------------------------------------------------
// Rank-one perturbation
// ---------------------------------------------------------------------------

// Lazily applied operator alpha*M + (1-alpha)*x^T v where x is a right
// dominant eigenvector of M (validated on construction, residual <= 1e-6).
// The perturbation keeps the dominant eigenvalue of M (when v x^T = lambda0)
// and multiplies every other eigenvalue by alpha, so the left dominant
// eigenvector becomes unique. The rank-one term is never materialized.
class BrauerOperator {
 public:
  BrauerOperator(SparseMatrix m, ScoreVector x, ScoreVector v, double alpha);

  std::size_t size() const { return m_.n_rows(); }
  double alpha() const { return alpha_; }
  double lambda0() const { return lambda0_; }

  // w -> alpha*(w M) + (1-alpha)*(w . x) v
  ScoreVector apply_left(const ScoreVector& w) const;

  RankerReport left_dominant(double tol = 1e-9, std::size_t max_iter = 100000) const;
  DenseMatrix materialize_dense(std::size_t cap = kDefaultOracleCap) const;

 private:
  SparseMatrix m_;
  ScoreVector x_;
  ScoreVector v_;
  double alpha_;
  double lambda0_;
};

BrauerOperator brauer_perturb(const SparseMatrix& m, const ScoreVector& x, const ScoreVector& v,
                              double alpha);

// ---------------------------------------------------------------------------
// Damped path-summation rankers
// ---------------------------------------------------------------------------

enum class KatzVariant {
  PathSum,  // 1 (I - alpha M)^{-1}: damped count of incoming paths
  Classic,  // 1 M (I - alpha M)^{-1}: one extra undamped endorsement step
};

enum class SeriesMethod {
  Solve,    // stationary iteration on x = b + alpha x M
  Neumann,  // explicit partial sums of b (alpha M)^k
};

// Damped path-counting index. Requires |alpha| * lambda0 < 1.
RankerReport katz_index(const SparseMatrix& m, const DampingParams& params,
                        KatzVariant variant = KatzVariant::PathSum,
                        SeriesMethod method = SeriesMethod::Solve);

// Fixpoint of r = v + r M, i.e. v (I - M)^{-1}; the boundary condition v is
// arbitrary and M may carry negative entries as long as its spectral radius
// stays below 1.
RankerReport hubbell_index(const SparseMatrix& m, const ScoreVector& v, double tol = 1e-9,
                           std::size_t max_iter = 100000);

// (1 - lambda0*alpha) * v * sum_k (alpha M)^k for |alpha| < 1/lambda0.
// Satisfies r = alpha r M + (1 - lambda0*alpha) v; with a stochastic matrix
// and a distribution v the result sums to 1. Negative alpha is admitted and
// the output is never renormalized.
RankerReport damped_spectral_ranking(const SparseMatrix& m, const ScoreVector& v,
                                     const DampingParams& params);

// Damped ranking of a row-stochastic (or substochastic) matrix with restart
// distribution v: the fixpoint of r = alpha r P + (1-alpha) v. For a genuinely
// stochastic P the result is renormalized to an exact distribution.
RankerReport pagerank(const SparseMatrix& p, const ScoreVector& v, double alpha,
                      double tol = 1e-9, std::size_t max_iter = 100000);

// v P^* through the dense Cesaro limit: the limit-in-average distribution of
// the chain started from v. Dense computation, so n must stay within the cap.
ScoreVector markovian_spectral_ranking(const SparseMatrix& p, const ScoreVector& v,
                                       std::size_t oracle_cap = kDefaultOracleCap);

// Damped stochastic ranking followed by one undamped endorsement step:
// normalize_1(pagerank(S, v, alpha) * S).
RankerReport eigenfactor(const SparseMatrix& s, const ScoreVector& v, double alpha = 0.85,
                         double tol = 1e-9);

// 1 M (I - M)^{-1}: the undamped classic path count, admissible only while
// the spectral radius of M stays below 1 (no entry tweaking is performed to
// force invertibility).
RankerReport hoede_index(const SparseMatrix& m, double tol = 1e-9);

// sum_t d(t) * v P^t: expected visits under a surfing-time distribution d.
ScoreVector surfer_prediction(const SparseMatrix& p, const ScoreVector& v,
                              const std::vector<double>& weights);

}  // namespace spectrank
