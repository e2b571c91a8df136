#include <cmath>
#include <complex>

#include "doctest.h"
#include "spectrank/error.hpp"
#include "spectrank/matrix_ops.hpp"
#include "spectrank/oracle.hpp"
#include "spectrank/rankers.hpp"
#include "support/test_support.hpp"

using namespace spectrank;
using testsupport::error_kind_of;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("cesaro limit of the identity is the identity") {
  DenseMatrix limit = dense_cesaro(DenseMatrix::identity(3));
  CHECK(limit.max_abs_diff(DenseMatrix::identity(3)) == 0.0);
}

TEST_CASE("cesaro limit of the 2-cycle averages both states") {
  DenseMatrix s = DenseMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  DenseMatrix limit = dense_cesaro(s);
  DenseMatrix expected = DenseMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}});
  CHECK(limit.max_abs_diff(expected) <= 1e-12);
}

TEST_CASE("cesaro limit of an irreducible aperiodic chain stacks the stationary row") {
  testsupport::Rng rng(21);
  DenseMatrix p = DenseMatrix::from_sparse(testsupport::random_stochastic(rng, 3, 4));
  ScoreVector pi = testsupport::stationary_distribution(p);
  DenseMatrix limit = dense_cesaro(p, 1e-12);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(limit.at(i, j) == doctest::Approx(pi[j]).epsilon(1e-8));
    }
  }
}

TEST_CASE("cesaro limit satisfies the projection identities") {
  testsupport::Rng rng(22);
  const double tol = 1e-10;
  for (int instance = 0; instance < 5; ++instance) {
    DenseMatrix s = DenseMatrix::from_sparse(testsupport::random_stochastic(rng, 12, 30));
    DenseMatrix limit = dense_cesaro(s, tol);
    CHECK(limit.multiply(s).max_abs_diff(limit) <= 10 * tol);
    CHECK(s.multiply(limit).max_abs_diff(limit) <= 10 * tol);
    CHECK(limit.multiply(limit).max_abs_diff(limit) <= 10 * tol);
  }
}

TEST_CASE("cesaro rejects matrices without unit spectral radius") {
  CHECK(error_kind_of([] { dense_cesaro(DenseMatrix::from_rows({{0.5}})); }) ==
        ErrorKind::SpectralRadiusNotOne);
}

TEST_CASE("cesaro reports divergence for a defective unit eigenvalue") {
  DenseMatrix jordan = DenseMatrix::from_rows({{1.0, 1.0}, {0.0, 1.0}});
  CHECK(error_kind_of([&] { dense_cesaro(jordan); }) == ErrorKind::NoConvergence);
}

TEST_CASE("resolvent identity: identity matrix has zero deviation kernel") {
  auto checks = dense_resolvent_limit(DenseMatrix::identity(4), {0.5, 0.9});
  for (const auto& check : checks) {
    CHECK(check.series_converged);
    CHECK(check.discrepancy <= 1e-12);
  }
}

TEST_CASE("resolvent identity on the 2-cycle") {
  DenseMatrix s = DenseMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  auto checks = dense_resolvent_limit(s, {0.9});
  REQUIRE(checks.size() == 1);
  CHECK(checks[0].series_converged);
  CHECK(checks[0].discrepancy <= 1e-10);

  // Outside the convergence neighbourhood the series must be flagged, not
  // silently summed: the deviation kernel has spectral radius 1/2, so
  // alpha = 0.2 gives ratio 0.8/0.2 * 0.5 = 2.
  auto diverged = dense_resolvent_limit(s, {0.2});
  CHECK_FALSE(diverged[0].series_converged);
}

TEST_CASE("resolvent identity on random stochastic matrices near alpha = 1") {
  testsupport::Rng rng(23);
  for (int instance = 0; instance < 5; ++instance) {
    DenseMatrix s = DenseMatrix::from_sparse(testsupport::random_stochastic(rng, 5, 12));
    auto checks = dense_resolvent_limit(s, {0.999});
    CHECK(checks[0].series_converged);
    CHECK(checks[0].discrepancy <= 1e-8);
  }
}

TEST_CASE("dense spectrum of worked examples") {
  SpectrumReport identity = dense_spectrum(DenseMatrix::identity(3));
  REQUIRE(identity.eigenvalues.size() == 3);
  for (const auto& lambda : identity.eigenvalues) {
    CHECK(std::abs(lambda - std::complex<double>(1.0, 0.0)) <= 1e-12);
  }

  SpectrumReport swap = dense_spectrum(DenseMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
  CHECK(std::abs(swap.eigenvalues[0] - std::complex<double>(1.0, 0.0)) <= 1e-12);
  CHECK(std::abs(swap.eigenvalues[1] - std::complex<double>(-1.0, 0.0)) <= 1e-12);

  // Companion matrix of z^2 - z - 1: roots phi and 1 - phi.
  SpectrumReport fib = dense_spectrum(DenseMatrix::from_rows({{0.0, 1.0}, {1.0, 1.0}}));
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(std::abs(fib.eigenvalues[0] - std::complex<double>(phi, 0.0)) <= 1e-12);
  CHECK(std::abs(fib.eigenvalues[1] - std::complex<double>(1.0 - phi, 0.0)) <= 1e-12);
}

TEST_CASE("dense spectrum of stochastic matrices stays inside the unit disc") {
  testsupport::Rng rng(24);
  const double tol = 1e-8;
  for (int instance = 0; instance < 10; ++instance) {
    DenseMatrix p = DenseMatrix::from_sparse(testsupport::random_stochastic(rng, 10, 25));
    SpectrumReport report = dense_spectrum(p, tol);
    bool has_one = false;
    for (const auto& lambda : report.eigenvalues) {
      CHECK(std::abs(lambda) <= 1.0 + tol);
      if (std::abs(lambda - std::complex<double>(1.0, 0.0)) <= tol) has_one = true;
    }
    CHECK(has_one);
  }
}

TEST_CASE("neumann sum trivial and nilpotent cases") {
  DenseMatrix m = DenseMatrix::from_rows({{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}});
  ScoreVector v = ScoreVector::ones(3);

  NeumannResult zero_alpha = neumann_sum(m, v, 0.0);
  CHECK(zero_alpha.sum.entries == v.entries);
  CHECK(zero_alpha.terms == 0);

  // Path chain: the series terminates exactly after two products.
  NeumannResult nil = neumann_sum(m, v, 0.5);
  CHECK(nil.tail_bound == 0.0);
  CHECK(max_abs_diff(nil.sum, ScoreVector({1.0, 1.5, 1.75})) <= 1e-15);
}

TEST_CASE("neumann sum reproduces the sparse linear-system route") {
  testsupport::Rng rng(25);
  for (int instance = 0; instance < 5; ++instance) {
    SparseMatrix m = testsupport::random_sparse(rng, 20, 0.2);
    double lambda0 = spectral_radius_estimate(m, 1e-12);
    double alpha = lambda0 > 0 ? 0.5 / lambda0 : 0.5;
    DampingParams params{.alpha = alpha, .lambda0 = lambda0 > 0 ? std::optional(lambda0)
                                                                : std::nullopt,
                         .tol = 1e-13, .max_iter = 100000};
    RankerReport solve = katz_index(m, params);
    NeumannResult series =
        neumann_sum(DenseMatrix::from_sparse(m), ScoreVector::ones(20), alpha, 100000, 1e-13);
    CHECK(max_abs_diff(solve.scores, series.sum) <= 1e-10);
  }
}

TEST_CASE("neumann sum rejects divergent damping") {
  DenseMatrix swap = DenseMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(error_kind_of([&] { neumann_sum(swap, ScoreVector::ones(2), 1.0); }) ==
        ErrorKind::DivergentSeries);
}

TEST_CASE("dense left solve and its singular rejection") {
  DenseMatrix a = DenseMatrix::from_rows({{2.0, 0.0}, {1.0, 1.0}});
  // x A = (3, 2)  =>  x = (0.5, 2)
  ScoreVector x = dense_solve_left(a, ScoreVector({3.0, 2.0}));
  CHECK(max_abs_diff(x, ScoreVector({0.5, 2.0})) <= 1e-12);

  DenseMatrix singular = DenseMatrix::from_rows({{1.0, 1.0}, {1.0, 1.0}});
  CHECK(error_kind_of([&] { dense_solve_left(singular, ScoreVector::ones(2)); }) ==
        ErrorKind::SingularSolve);
}

TEST_CASE("dense right Perron pair") {
  DenseMatrix m = DenseMatrix::from_rows({{0.0, 2.0}, {0.5, 0.0}});
  PerronPair perron = dense_right_perron(m);
  CHECK(perron.value == doctest::Approx(1.0).epsilon(1e-10));
  // M x = x has x proportional to (2, 1).
  CHECK(perron.vector[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  CHECK(perron.vector[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
}

TEST_SUITE_END();
