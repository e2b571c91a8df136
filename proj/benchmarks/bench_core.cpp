#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "spectrank/dense_matrix.hpp"
#include "spectrank/matrix_ops.hpp"
#include "spectrank/oracle.hpp"
#include "spectrank/rankers.hpp"

using namespace spectrank;

namespace {

// Ring plus random chords, strictly normalized: strongly connected and
// stochastic at any size.
SparseMatrix bench_graph(std::size_t n, std::size_t degree) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::uniform_int_distribution<std::size_t> node(0, n - 1);
  std::vector<Triplet> entries;
  entries.reserve(n * (degree + 1));
  for (std::size_t i = 0; i < n; ++i) {
    entries.push_back({i, (i + 1) % n, weight(rng)});
    for (std::size_t k = 0; k < degree; ++k) entries.push_back({i, node(rng), weight(rng)});
  }
  return row_normalize(SparseMatrix::from_triplets(n, n, std::move(entries)),
                       NormalizeMode::Strict);
}

void BM_VecMat(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  SparseMatrix p = bench_graph(n, 8);
  ScoreVector v = ScoreVector::uniform(n);
  for (auto _ : state) {
    ScoreVector out = vec_mat(v, p);
    benchmark::DoNotOptimize(out.entries.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(p.nnz()));
}
BENCHMARK(BM_VecMat)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 17);

void BM_Pagerank(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  SparseMatrix p = bench_graph(n, 8);
  ScoreVector v = ScoreVector::uniform(n);
  for (auto _ : state) {
    RankerReport r = pagerank(p, v, 0.85, 1e-9);
    benchmark::DoNotOptimize(r.scores.entries.data());
  }
}
BENCHMARK(BM_Pagerank)->Arg(1 << 10)->Arg(1 << 14);

void BM_KatzSolve(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  SparseMatrix p = bench_graph(n, 8);
  DampingParams params{.alpha = 0.5, .lambda0 = 1.0, .tol = 1e-9, .max_iter = 100000};
  for (auto _ : state) {
    RankerReport r = katz_index(p, params);
    benchmark::DoNotOptimize(r.scores.entries.data());
  }
}
BENCHMARK(BM_KatzSolve)->Arg(1 << 10)->Arg(1 << 14);

void BM_KatzNeumann(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  SparseMatrix p = bench_graph(n, 8);
  DampingParams params{.alpha = 0.5, .lambda0 = 1.0, .tol = 1e-9, .max_iter = 100000};
  for (auto _ : state) {
    RankerReport r = katz_index(p, params, KatzVariant::PathSum, SeriesMethod::Neumann);
    benchmark::DoNotOptimize(r.scores.entries.data());
  }
}
BENCHMARK(BM_KatzNeumann)->Arg(1 << 10)->Arg(1 << 14);

void BM_SpectralRadius(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  SparseMatrix p = bench_graph(n, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral_radius_estimate(p, 1e-9));
  }
}
BENCHMARK(BM_SpectralRadius)->Arg(1 << 10)->Arg(1 << 14);

void BM_DenseCesaro(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  DenseMatrix s = DenseMatrix::from_sparse(bench_graph(n, 8), n);
  for (auto _ : state) {
    DenseMatrix limit = dense_cesaro(s, 1e-10);
    benchmark::DoNotOptimize(limit.raw());
  }
}
BENCHMARK(BM_DenseCesaro)->Arg(64)->Arg(128)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
