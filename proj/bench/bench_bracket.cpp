#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "goldknot/goldman.hpp"
#include "goldknot/selftest.hpp"

using namespace goldknot;

namespace {

std::vector<ClassPair> make_pairs(int genus, int count, int length) {
  Rng rng(2024);
  std::vector<ClassPair> pairs;
  for (int i = 0; i < count; ++i) {
    pairs.emplace_back(random_class(rng, 2 * genus, length), random_class(rng, 2 * genus, length));
  }
  return pairs;
}

void BM_TableSerial(benchmark::State& state) {
  const RibbonSurface s = standard_surface(2);
  const auto pairs = make_pairs(2, static_cast<int>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(bracket_table_serial(s, pairs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TableParallel(benchmark::State& state) {
  const RibbonSurface s = standard_surface(2);
  const auto pairs = make_pairs(2, static_cast<int>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(bracket_table_parallel(s, pairs, 0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BracketSerial(benchmark::State& state) {
  const RibbonSurface s = standard_surface(2);
  const auto pairs = make_pairs(2, 1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(goldman_bracket(s, pairs[0].first, pairs[0].second));
}

void BM_BracketParallel(benchmark::State& state) {
  const RibbonSurface s = standard_surface(2);
  const auto pairs = make_pairs(2, 1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(goldman_bracket_parallel(s, pairs[0].first, pairs[0].second));
}

}  // namespace

BENCHMARK(BM_TableSerial)->Arg(64)->Arg(512)->UseRealTime();
BENCHMARK(BM_TableParallel)->Arg(64)->Arg(512)->UseRealTime();
BENCHMARK(BM_BracketSerial)->Arg(32)->Arg(128)->UseRealTime();
BENCHMARK(BM_BracketParallel)->Arg(32)->Arg(128)->UseRealTime();

BENCHMARK_MAIN();
