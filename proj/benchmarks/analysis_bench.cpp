#include <benchmark/benchmark.h>

#include <vector>

#include "softtopo/corpus.hpp"
#include "softtopo/prng.hpp"
#include "softtopo/set_cover.hpp"

using namespace softtopo;

namespace {

void BM_MinimumCover(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  SplitMix64 r(11);
  const Mask universe = (Mask{1} << 24) - 1;
  std::vector<Mask> family(size);
  for (auto& m : family) m = r.next() & universe;
  for (auto _ : state) benchmark::DoNotOptimize(minimum_cover(universe, family));
}
BENCHMARK(BM_MinimumCover)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_FromSubbasis(benchmark::State& state) {
  const auto sig = SpaceSignature::numbered(static_cast<std::size_t>(state.range(0)), 2);
  SplitMix64 r(3);
  std::vector<SoftSet> seeds;
  const Mask full = (Mask{1} << sig.bit_count()) - 1;
  for (int i = 0; i < 4; ++i) seeds.emplace_back(sig, r.next() & full);
  for (auto _ : state) benchmark::DoNotOptimize(from_subbasis(sig, seeds));
}
BENCHMARK(BM_FromSubbasis)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_ExhaustiveCorpus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generate_corpus(CorpusSpec{4, 4, 4}));
}
BENCHMARK(BM_ExhaustiveCorpus)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
