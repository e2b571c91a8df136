#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "power_iteration.hpp"
#include "spectrank/error.hpp"
#include "spectrank/matrix_ops.hpp"
#include "spectrank/rankers.hpp"

namespace spectrank {

namespace {

RankerReport report_from(detail::PowerResult&& r, const char* what) {
  if (!r.converged) {
    fail(ErrorKind::NoConvergence, std::string(what) + " did not converge after " +
                                       std::to_string(r.iterations) +
                                       " iterations (residual=" + std::to_string(r.residual) +
                                       ")");
  }
  RankerReport report;
  report.scores = std::move(r.vector);
  report.iterations = r.iterations;
  report.residual = r.residual;
  report.converged = true;
  report.lambda0 = r.value;
  return report;
}

}  // namespace

RankerReport left_dominant_ranking(const SparseMatrix& m, double tol, std::size_t max_iter) {
  checks::require_square(m, "left_dominant_ranking");
  checks::require_nonnegative(m, "left_dominant_ranking");
  if (m.n_rows() == 0) return {.converged = true};

  auto apply = [&m](const ScoreVector& x) { return vec_mat(x, m); };
  auto r = detail::power_iterate(apply, ScoreVector::uniform(m.n_rows()), m.max_abs_row_sum(),
                                 tol, max_iter);
  return report_from(std::move(r), "left_dominant_ranking");
}

std::pair<Ranking, RankerReport> wei_ranking(const SparseMatrix& m, double tie_tol,
                                             std::size_t max_iter, std::size_t stable_streak) {
  checks::require_square(m, "wei_ranking");
  checks::require_nonnegative(m, "wei_ranking");
  if (stable_streak == 0) fail(ErrorKind::InvalidArgument, "stable_streak must be positive");

  ScoreVector scores = ScoreVector::ones(m.n_rows());
  Ranking current;
  std::size_t streak = 0;
  double movement = 0.0;

  for (std::size_t iter = 1; iter <= max_iter; ++iter) {
    ScoreVector next = mat_vec(m, scores);
    double nrm = norm1(next);
    if (nrm > 0.0) {
      for (double& x : next.entries) x /= nrm;
    }
    // nrm == 0 only for nilpotent input once all scores drain away; the
    // zero vector then ranks everything tied, which is its fixpoint.
    movement = l1_diff(next, scores);
    scores = std::move(next);

    Ranking ranking = ranking_from_scores(scores, tie_tol);
    streak = streak > 0 && ranking.same_order(current) ? streak + 1 : 1;
    current = std::move(ranking);
    if (streak >= stable_streak) {
      RankerReport report;
      report.scores = scores;
      report.iterations = iter;
      report.residual = movement;
      report.converged = true;
      return {std::move(current), std::move(report)};
    }
  }
  fail(ErrorKind::NoConvergence, "wei_ranking: rank did not stabilize for " +
                                     std::to_string(stable_streak) + " rounds within " +
                                     std::to_string(max_iter) + " iterations");
}

HitsResult hits(const SparseMatrix& a, double tol, std::size_t max_iter) {
  checks::require_square(a, "hits");
  checks::require_nonnegative(a, "hits");
  if (a.nnz() == 0) fail(ErrorKind::ZeroMatrix, "hits needs at least one edge");

  // Both Gram operators are symmetric positive semidefinite, so plain power
  // iteration cannot oscillate; l2 normalization matches the usual score
  // convention.
  auto iterate = [&](auto&& gram, const char* what) {
    ScoreVector x(std::vector<double>(a.n_rows(), 1.0 / std::sqrt(static_cast<double>(a.n_rows()))));
    RankerReport report;
    for (std::size_t iter = 0; iter <= max_iter; ++iter) {
      ScoreVector y = gram(x);
      double mu = dot(x, y) / dot(x, x);
      ScoreVector residual_vec = axpy(y, -mu, x);
      double residual = norm2(residual_vec) / norm2(x);
      report.iterations = iter;
      report.residual = residual;
      report.lambda0 = mu;
      if (residual <= tol) {
        double nrm = norm2(x);
        for (double& e : x.entries) e /= nrm;
        report.scores = std::move(x);
        report.converged = true;
        return report;
      }
      double nrm = norm2(y);
      if (nrm == 0.0) fail(ErrorKind::ZeroMatrix, std::string(what) + ": operator annihilated the iterate");
      for (double& e : y.entries) e /= nrm;
      x = std::move(y);
    }
    fail(ErrorKind::NoConvergence, std::string(what) + " did not converge within " +
                                       std::to_string(max_iter) + " iterations");
  };

  HitsResult result;
  result.authority =
      iterate([&a](const ScoreVector& x) { return vec_mat(mat_vec(a, x), a); }, "hits authority");
  result.hub =
      iterate([&a](const ScoreVector& x) { return mat_vec(a, vec_mat(x, a)); }, "hits hub");
  return result;
}

RankerReport ahp_right_ranking(const SparseMatrix& m, double tol, std::size_t max_iter) {
  checks::require_square(m, "ahp_right_ranking");
  const std::size_t n = m.n_rows();
  if (n == 0) return {.converged = true};
  if (m.nnz() != n * n) {
    // A reciprocal matrix has no zero entries; locate one missing pair.
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t expect = 0;
      for (std::size_t col : m.row_cols(i)) {
        if (col != expect) break;
        ++expect;
      }
      if (expect < n) {
        fail(ErrorKind::NotReciprocal,
             "entry (" + std::to_string(i) + "," + std::to_string(expect) + ") is missing");
      }
    }
  }
  constexpr double kReciprocalTol = 1e-9;
  for (std::size_t i = 0; i < n; ++i) {
    auto vals = m.row_values(i);
    for (std::size_t j = 0; j < n; ++j) {
      double mij = vals[j];
      if (mij <= 0.0) {
        fail(ErrorKind::NotReciprocal,
             "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not positive");
      }
      if (i == j && std::abs(mij - 1.0) > kReciprocalTol) {
        fail(ErrorKind::NotReciprocal, "diagonal entry " + std::to_string(i) + " is not 1");
      }
      if (j > i) {
        double mji = m.row_values(j)[i];
        if (std::abs(mij * mji - 1.0) > kReciprocalTol * std::max(1.0, mij * mji)) {
          fail(ErrorKind::NotReciprocal, "entries (" + std::to_string(i) + "," +
                                             std::to_string(j) + ") and transpose do not invert");
        }
      }
    }
  }

  auto apply = [&m](const ScoreVector& x) { return mat_vec(m, x); };
  auto r = detail::power_iterate(apply, ScoreVector::uniform(n), 0.0, tol, max_iter);
  return report_from(std::move(r), "ahp_right_ranking");
}

RankerReport pinski_narin(const SparseMatrix& c, PinskiNarinConvention convention, double tol,
                          std::size_t max_iter) {
  checks::require_square(c, "pinski_narin");
  checks::require_nonnegative(c, "pinski_narin");

  SparseMatrix normalized;
  if (convention == PinskiNarinConvention::GellerI) {
    normalized = row_normalize(c, NormalizeMode::Strict);
  } else {
    std::vector<double> divisor(c.n_rows());
    for (std::size_t j = 0; j < c.n_rows(); ++j) divisor[j] = c.row_sum(j);
    std::vector<Triplet> rescaled;
    rescaled.reserve(c.nnz());
    for (std::size_t i = 0; i < c.n_rows(); ++i) {
      auto cols = c.row_cols(i);
      auto vals = c.row_values(i);
      for (std::size_t k = 0; k < cols.size(); ++k) {
        if (divisor[cols[k]] == 0.0) {
          fail(ErrorKind::NullRow,
               "row " + std::to_string(cols[k]) + " has zero sum but is cited");
        }
        rescaled.push_back({i, cols[k], vals[k] / divisor[cols[k]]});
      }
    }
    normalized = SparseMatrix::from_triplets(c.n_rows(), c.n_cols(), std::move(rescaled));
  }
  return left_dominant_ranking(normalized, tol, max_iter);
}

BrauerOperator::BrauerOperator(SparseMatrix m, ScoreVector x, ScoreVector v, double alpha)
    : m_(std::move(m)), x_(std::move(x)), v_(std::move(v)), alpha_(alpha) {
  checks::require_square(m_, "brauer_perturb");
  if (x_.size() != m_.n_rows() || v_.size() != m_.n_rows()) {
    fail(ErrorKind::DimensionMismatch, "brauer_perturb vector lengths");
  }
  check_finite(x_, "brauer x");
  check_finite(v_, "brauer v");
  double self = dot(x_, x_);
  if (self == 0.0) fail(ErrorKind::NotEigenvector, "x is the zero vector");

  ScoreVector image = mat_vec(m_, x_);
  lambda0_ = dot(x_, image) / self;
  double residual = l1_diff(image, axpy(ScoreVector::zeros(x_.size()), lambda0_, x_)) / norm1(x_);
  constexpr double kEigenTol = 1e-6;
  if (residual > kEigenTol * std::max(1.0, std::abs(lambda0_))) {
    fail(ErrorKind::NotEigenvector,
         "x is not a right dominant eigenvector (residual=" + std::to_string(residual) + ")");
  }
}

ScoreVector BrauerOperator::apply_left(const ScoreVector& w) const {
  if (w.size() != m_.n_rows()) fail(ErrorKind::DimensionMismatch, "brauer apply length");
  ScoreVector out = vec_mat(w, m_);
  double wx = dot(w, x_);
  double coupling = (1.0 - alpha_) * wx;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = alpha_ * out[i] + coupling * v_[i];
  return out;
}

RankerReport BrauerOperator::left_dominant(double tol, std::size_t max_iter) const {
  bool nonneg = alpha_ >= 0.0 && alpha_ <= 1.0 && m_.is_nonnegative() &&
                std::all_of(x_.entries.begin(), x_.entries.end(), [](double e) { return e >= 0; }) &&
                std::all_of(v_.entries.begin(), v_.entries.end(), [](double e) { return e >= 0; });
  // A diagonal shift only helps when the dominant eigenvalue is the
  // rightmost one, which the nonnegative case guarantees.
  double shift = 0.0;
  if (nonneg) {
    double x_max = 0.0;
    for (double e : x_.entries) x_max = std::max(x_max, e);
    shift = alpha_ * m_.max_abs_row_sum() + (1.0 - alpha_) * x_max * norm1(v_);
  }
  auto apply = [this](const ScoreVector& w) { return apply_left(w); };
  auto r = detail::power_iterate(apply, ScoreVector::uniform(size()), shift, tol, max_iter);
  return report_from(std::move(r), "brauer left dominant");
}

DenseMatrix BrauerOperator::materialize_dense(std::size_t cap) const {
  DenseMatrix out = DenseMatrix::from_sparse(m_, cap);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) {
      out.at(i, j) = alpha_ * out.at(i, j) + (1.0 - alpha_) * x_[i] * v_[j];
    }
  }
  return out;
}

BrauerOperator brauer_perturb(const SparseMatrix& m, const ScoreVector& x, const ScoreVector& v,
                              double alpha) {
  return BrauerOperator(m, x, v, alpha);
}

}  // namespace spectrank
