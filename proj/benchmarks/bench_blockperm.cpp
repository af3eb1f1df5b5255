#include <benchmark/benchmark.h>

#include "blockperm/blocks.hpp"
#include "blockperm/modrep.hpp"
#include "blockperm/symchars.hpp"

using namespace blockperm;

static void BM_Rref(benchmark::State& state) {
  const Field& f = Field::get(7);
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  auto m = FqMatrix::random(f, n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rref)->RangeMultiplier(2)->Range(32, 512)->Complexity(benchmark::oNCubed);

static void BM_Schreier(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    PermGroup g = PermGroup::symmetric(n);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_Schreier)->DenseRange(6, 12, 3);

static void BM_SylowS7(benchmark::State& state) {
  auto g = PermGroup::symmetric(7);
  for (auto _ : state) benchmark::DoNotOptimize(sylow_subgroup(g, 7).order());
}
BENCHMARK(BM_SylowS7);

static void BM_BlocksS5(benchmark::State& state) {
  auto g = PermGroup::symmetric(5);
  const Field& f = Field::get(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(block_decomposition(g, f, 1).size());
}
BENCHMARK(BM_BlocksS5)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_BlocksS7(benchmark::State& state) {
  auto g = PermGroup::symmetric(7);
  const Field& f = Field::get(7);
  for (auto _ : state) benchmark::DoNotOptimize(block_decomposition(g, f, 1).size());
}
BENCHMARK(BM_BlocksS7)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_SourceModuleS5(benchmark::State& state) {
  auto g = PermGroup::symmetric(5);
  const Field& f = Field::get(5);
  for (auto _ : state) {
    auto blocks = block_decomposition(g, f, 1);
    benchmark::DoNotOptimize(source_permutation_module(blocks[0], 1).dim());
  }
}
BENCHMARK(BM_SourceModuleS5)->Unit(benchmark::kMillisecond);

static void BM_DecomposeSylowModule(benchmark::State& state) {
  auto g = PermGroup::symmetric(5);
  const Field& f = Field::get(5);
  auto m = permutation_module(g, sylow_subgroup(g, 5), f);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(m, 1).summands.size());
}
BENCHMARK(BM_DecomposeSylowModule)->Unit(benchmark::kMillisecond);

static void BM_HookMultiplicities(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  auto p = sylow_of_symmetric(static_cast<std::size_t>(n), static_cast<unsigned>(n));
  for (auto _ : state) benchmark::DoNotOptimize(perm_character_multiplicities(n, p).size());
}
BENCHMARK(BM_HookMultiplicities)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
