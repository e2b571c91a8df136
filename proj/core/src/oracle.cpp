#include "spectrank/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "power_iteration.hpp"
#include "spectrank/error.hpp"

namespace spectrank {

namespace {

using RowMajorMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMajorMatrix> map_of(const DenseMatrix& m) {
  return {m.raw(), static_cast<Eigen::Index>(m.size()), static_cast<Eigen::Index>(m.size())};
}

DenseMatrix from_eigen(const Eigen::MatrixXd& e) {
  DenseMatrix out(static_cast<std::size_t>(e.rows()));
  for (Eigen::Index i = 0; i < e.rows(); ++i) {
    for (Eigen::Index j = 0; j < e.cols(); ++j) {
      out.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e(i, j);
    }
  }
  return out;
}

DenseMatrix dense_inverse(const DenseMatrix& a, const char* what) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(map_of(a));
  if (!lu.isInvertible()) fail(ErrorKind::SingularSolve, std::string(what) + " is singular");
  return from_eigen(lu.inverse());
}

void require_radius_one(const DenseMatrix& s, const char* what) {
  double rho = dense_spectrum(s).spectral_radius();
  if (std::abs(rho - 1.0) > 1e-6) {
    fail(ErrorKind::SpectralRadiusNotOne,
         std::string(what) + ": spectral radius is " + std::to_string(rho));
  }
}

}  // namespace

namespace {

double induced_inf_diff(const DenseMatrix& a, const DenseMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) row += std::abs(a.at(i, j) - b.at(i, j));
    worst = std::max(worst, row);
  }
  return worst;
}

bool is_cesaro_limit(const DenseMatrix& r, const DenseMatrix& s, double tol) {
  return induced_inf_diff(r.multiply(s), r) <= tol && induced_inf_diff(s.multiply(r), r) <= tol &&
         induced_inf_diff(r.multiply(r), r) <= tol;
}

}  // namespace

DenseMatrix dense_cesaro(const DenseMatrix& s, double tol, std::uint64_t n_max) {
  if (tol <= 0.0) fail(ErrorKind::InvalidArgument, "tol must be positive");
  require_radius_one(s, "dense_cesaro");

  DenseMatrix partial = DenseMatrix::identity(s.size());  // sum of S^k, k < m
  DenseMatrix power = s;                                  // S^m
  std::uint64_t m = 1;
  DenseMatrix average = partial;  // partial / m
  double previous_diff = std::numeric_limits<double>::infinity();
  int rising = 0;

  while (m <= n_max) {
    // sum_{k<2m} S^k = (I + S^m) * sum_{k<m} S^k
    DenseMatrix doubled = partial.plus_scaled(power.multiply(partial), 1.0);
    DenseMatrix next_power = power.multiply(power);  // S^{2m}
    m *= 2;
    DenseMatrix next_average = doubled.scaled(1.0 / static_cast<double>(m));
    if (!next_average.all_finite() || !next_power.all_finite()) {
      fail(ErrorKind::NoConvergence, "dense_cesaro: powers diverge (defective unit eigenvalue?)");
    }

    double diff = induced_inf_diff(next_average, average);
    if (diff <= tol) return next_average;

    // When the plain powers settle (aperiodic case) their limit is also the
    // limit in average, and it is reached geometrically instead of at the
    // O(1/m) averaging rate; accept it only once it verifiably projects.
    if (induced_inf_diff(next_power, power) <= tol && is_cesaro_limit(next_power, s, 2.0 * tol)) {
      return next_power;
    }

    // The averaging tail shrinks like 1/m, so the dyadic differences must
    // halve; sustained growth means rounding drift from the repeated
    // squaring has taken over and the requested tolerance is out of reach.
    rising = diff > previous_diff ? rising + 1 : 0;
    if (rising >= 3) {
      fail(ErrorKind::NoConvergence,
           "dense_cesaro: rounding floor reached near " + std::to_string(previous_diff) +
               " before tol, after " + std::to_string(m) + " powers");
    }
    previous_diff = diff;
    average = std::move(next_average);
    partial = std::move(doubled);
    power = std::move(next_power);
  }
  fail(ErrorKind::NoConvergence,
       "dense_cesaro: averages still moving after " + std::to_string(n_max) + " powers");
}

std::vector<ResolventCheck> dense_resolvent_limit(const DenseMatrix& s,
                                                  const std::vector<double>& alphas, double tol) {
  require_radius_one(s, "dense_resolvent_limit");
  for (double alpha : alphas) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
      fail(ErrorKind::InvalidArgument, "alpha must lie in (0,1), got " + std::to_string(alpha));
    }
  }

  const std::size_t n = s.size();
  DenseMatrix limit = dense_cesaro(s, std::min(tol * 1e-2, 1e-12));
  // Q = (I - S + S^*)^{-1} - S^*
  DenseMatrix kernel_arg = DenseMatrix::identity(n).plus_scaled(s, -1.0).plus_scaled(limit, 1.0);
  DenseMatrix q = dense_inverse(kernel_arg, "I - S + S^*").plus_scaled(limit, -1.0);

  std::vector<ResolventCheck> out;
  out.reserve(alphas.size());
  for (double alpha : alphas) {
    ResolventCheck check;
    check.alpha = alpha;

    DenseMatrix lhs_arg = DenseMatrix::identity(n).plus_scaled(s, -alpha);
    DenseMatrix direct = dense_inverse(lhs_arg, "I - alpha S").scaled(1.0 - alpha);

    double factor = (alpha - 1.0) / alpha;
    DenseMatrix series = limit;
    DenseMatrix term = q.scaled(factor);
    double prev_norm = term.norm_inf();
    std::size_t stall = 0;
    bool converged = false;
    constexpr std::size_t kMaxTerms = 100000;
    for (std::size_t k = 1; k <= kMaxTerms; ++k) {
      series.accumulate(term, -1.0);
      check.series_terms = k;
      double tn = term.norm_inf();
      if (tn <= tol) {
        converged = true;
        break;
      }
      if (!std::isfinite(tn) || tn > 1e12) break;
      stall = tn >= prev_norm ? stall + 1 : 0;
      if (stall > 200) break;  // geometric terms should shrink; treat as divergent
      prev_norm = tn;
      term = term.multiply(q).scaled(factor);
    }
    check.series_converged = converged;
    check.discrepancy = converged ? direct.max_abs_diff(series)
                                  : std::numeric_limits<double>::quiet_NaN();
    out.push_back(check);
  }
  return out;
}

SpectrumReport dense_spectrum(const DenseMatrix& a, double tol) {
  SpectrumReport report;
  report.matrix_norm = a.norm_inf();
  if (a.size() == 0) return report;

  Eigen::MatrixXd work = map_of(a);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(work, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    fail(ErrorKind::NoConvergence, "dense eigensolver failed");
  }

  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  std::vector<std::size_t> order(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&values](std::size_t i, std::size_t j) {
    double mi = std::abs(values[static_cast<Eigen::Index>(i)]);
    double mj = std::abs(values[static_cast<Eigen::Index>(j)]);
    if (mi != mj) return mi > mj;
    const auto& vi = values[static_cast<Eigen::Index>(i)];
    const auto& vj = values[static_cast<Eigen::Index>(j)];
    if (vi.real() != vj.real()) return vi.real() > vj.real();
    return vi.imag() > vj.imag();
  });

  Eigen::MatrixXcd cwork = work.cast<std::complex<double>>();
  for (std::size_t idx : order) {
    auto ei = static_cast<Eigen::Index>(idx);
    std::complex<double> lambda = values[ei];
    Eigen::VectorXcd v = vectors.col(ei);
    double vn = v.norm();
    double residual = vn > 0.0 ? (cwork * v - lambda * v).norm() / vn
                               : std::numeric_limits<double>::infinity();
    // The eigenvector residual bounds sigma_min(A - lambda I) from above.
    if (residual > tol * std::max(1.0, report.matrix_norm)) {
      fail(ErrorKind::NoConvergence,
           "eigenpair residual " + std::to_string(residual) + " above certificate threshold");
    }
    report.eigenvalues.push_back(lambda);
    report.residuals.push_back(residual);
  }
  return report;
}

NeumannResult neumann_sum(const DenseMatrix& m, const ScoreVector& v, double alpha,
                          std::size_t k_max, double tol) {
  if (v.size() != m.size()) fail(ErrorKind::DimensionMismatch, "neumann_sum length mismatch");
  check_finite(v, "neumann_sum boundary vector");

  NeumannResult result;
  result.sum = v;
  if (alpha == 0.0 || m.size() == 0) return result;

  double rho = dense_spectrum(m).spectral_radius();
  double q = std::abs(alpha) * rho;
  // Margin for the eigensolver's own rounding: a contraction this close to
  // 1 is unusable anyway.
  if (q >= 1.0 - 1e-10) {
    fail(ErrorKind::DivergentSeries,
         "|alpha| * rho = " + std::to_string(q) + " >= 1, series diverges");
  }
  double amplification = q / (1.0 - q);

  ScoreVector term = v;
  std::size_t consecutive_small = 0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    term = m.apply_left(term);
    for (double& x : term.entries) x *= alpha;
    result.sum = axpy(result.sum, 1.0, term);
    result.terms = k;
    double tn = norm_inf(term);
    result.tail_bound = tn * amplification;
    if (tn == 0.0) {
      result.tail_bound = 0.0;
      break;  // nilpotent part exhausted, the sum is exact
    }
    // The geometric rate only describes the asymptotic regime; non-normal
    // matrices can grow transiently, so demand both a small term and a
    // small bound for a few consecutive terms.
    consecutive_small = result.tail_bound <= tol && tn <= tol ? consecutive_small + 1 : 0;
    if (consecutive_small >= 3) break;
  }
  return result;
}

ScoreVector dense_solve_left(const DenseMatrix& a, const ScoreVector& b) {
  if (b.size() != a.size()) fail(ErrorKind::DimensionMismatch, "dense_solve_left length mismatch");
  // x A = b  <=>  A^T x^T = b^T
  Eigen::MatrixXd at = map_of(a).transpose();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(at);
  if (!lu.isInvertible()) fail(ErrorKind::SingularSolve, "left solve: matrix is singular");
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i) rhs[static_cast<Eigen::Index>(i)] = b[i];
  Eigen::VectorXd x = lu.solve(rhs);
  ScoreVector out = ScoreVector::zeros(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = x[static_cast<Eigen::Index>(i)];
  return out;
}

PerronPair dense_right_perron(const DenseMatrix& a, double tol, std::size_t max_iter) {
  for (double x : a.data()) {
    if (x < 0.0) fail(ErrorKind::NegativeEntry, "dense_right_perron needs a nonnegative matrix");
  }
  if (a.size() == 0) return {};
  auto apply = [&a](const ScoreVector& x) { return a.apply_right(x); };
  detail::PowerResult r =
      detail::power_iterate(apply, ScoreVector::uniform(a.size()), a.norm_inf(), tol, max_iter);
  if (!r.converged) {
    fail(ErrorKind::NoConvergence, "dense right Perron iteration did not converge");
  }
  return {std::move(r.vector), r.value};
}

}  // namespace spectrank
