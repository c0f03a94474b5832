#include <benchmark/benchmark.h>

#include <dhenum/core_model.hpp>
#include <dhenum/exact_oracle.hpp>
#include <dhenum/families.hpp>
#include <dhenum/rng.hpp>
#include <dhenum/sampler.hpp>

using namespace dhenum;

static void BM_CountBipartiteRegular(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Seq x(n, 3), y(n, 3);
  for (auto _ : state) {
    ExactOracle oracle;  // fresh memo each round, so the cost is real
    benchmark::DoNotOptimize(oracle.count_bipartite(x, y));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountBipartiteRegular)->DenseRange(4, 14, 2)->Complexity();

static void BM_CountDihypergraphs(benchmark::State& state) {
  const Instance inst = disjoint_support_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    ExactOracle oracle;
    benchmark::DoNotOptimize(oracle.count_dihypergraphs(inst));
  }
}
BENCHMARK(BM_CountDihypergraphs)->DenseRange(1, 4);

static void BM_PairCountBothRoutes(benchmark::State& state) {
  const Instance inst = irregular_tail_instance(3);
  const KVectors kv = build_k_vectors(inst.mu);
  for (auto _ : state) {
    ExactOracle oracle;
    benchmark::DoNotOptimize(
        oracle.count_bipartite_pairs(inst.d_plus, kv.k_plus, inst.d_minus, kv.k_minus));
    benchmark::DoNotOptimize(
        oracle.count_bipartite_pairs_direct(inst.d_plus, kv.k_plus, inst.d_minus, kv.k_minus));
  }
}
BENCHMARK(BM_PairCountBothRoutes);

static void BM_SampleDihypergraph(benchmark::State& state) {
  const Instance inst = disjoint_support_instance(2);
  ExactOracle oracle;  // shared memo: measures steady-state sampling cost
  std::uint64_t i = 0;
  for (auto _ : state) {
    Rng rng = Rng::substream(1234, i++);
    benchmark::DoNotOptimize(sample_dihypergraph(inst, rng, oracle));
  }
}
BENCHMARK(BM_SampleDihypergraph);

BENCHMARK_MAIN();
