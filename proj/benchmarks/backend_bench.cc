// Microbenchmarks for the per-tuple cost of each backend. The CLI's `bench`
// subcommand times full sweeps; this gives finer-grained numbers through
// google-benchmark's statistics machinery.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "levi/backends.hpp"

namespace {

std::vector<std::vector<int>> sample_tuples(int n, std::size_t count) {
  std::mt19937_64 rng(0xbe7c4ULL ^ static_cast<std::uint64_t>(n));
  std::vector<std::vector<int>> tuples(count);
  for (auto& t : tuples) {
    t.resize(static_cast<std::size_t>(n));
    for (auto& v : t) v = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  }
  return tuples;
}

void run_backend(benchmark::State& state, const levi::BackendId& id) {
  const int n = static_cast<int>(state.range(0));
  const levi::BackendEvaluator evaluate(id, n);
  const auto tuples = sample_tuples(n, 512);
  std::size_t cursor = 0;
  for (auto _ : state) {
    const auto sign = evaluate(tuples[cursor]);
    benchmark::DoNotOptimize(sign);
    cursor = (cursor + 1) % tuples.size();
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_oracle(benchmark::State& state) { run_backend(state, levi::BackendId::oracle()); }

void BM_sgn_product(benchmark::State& state) {
  run_backend(state, levi::BackendId::sgn_product());
}

void BM_rational_product(benchmark::State& state) {
  run_backend(state, levi::BackendId::rational_product());
}

void BM_straub_determinant(benchmark::State& state) {
  run_backend(state, levi::BackendId::straub_determinant());
}

void BM_closed_form(benchmark::State& state) {
  run_backend(state, levi::BackendId::closed_form_low_dim());
}

void BM_generalized_cosine(benchmark::State& state) {
  run_backend(state, levi::BackendId::generalized(levi::GeneratorSpec::cosine(0.9)));
}

void BM_generalized_gamma(benchmark::State& state) {
  run_backend(state, levi::BackendId::generalized(levi::GeneratorSpec::gamma_shifted()));
}

}  // namespace

BENCHMARK(BM_oracle)->DenseRange(2, 9);
BENCHMARK(BM_sgn_product)->DenseRange(2, 9);
BENCHMARK(BM_rational_product)->DenseRange(2, 9);
BENCHMARK(BM_straub_determinant)->DenseRange(2, 9);
BENCHMARK(BM_closed_form)->DenseRange(2, 4);
BENCHMARK(BM_generalized_cosine)->DenseRange(2, 5);
BENCHMARK(BM_generalized_gamma)->DenseRange(2, 5);

BENCHMARK_MAIN();
