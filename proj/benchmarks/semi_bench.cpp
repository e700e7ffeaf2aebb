#include <benchmark/benchmark.h>

#include "softtopo/corpus.hpp"
#include "softtopo/semi.hpp"

using namespace softtopo;

namespace {

SoftTopology sample(unsigned cells) {
  const auto sig = SpaceSignature::numbered(cells / 2, 2);
  return random_topology(sig, 0x5eed + cells, 0.05);
}

void BM_SemiopenFast(benchmark::State& state) {
  const auto t = sample(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    std::size_t n = 0;
    for (Mask g = 0; g <= t.carrier_mask(); ++g) n += raw::semiopen(t, g);
    benchmark::DoNotOptimize(n);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(t.carrier_mask() + 1));
}
BENCHMARK(BM_SemiopenFast)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

void BM_SemiopenByDefinition(benchmark::State& state) {
  const auto t = sample(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    std::size_t n = 0;
    for (Mask g = 0; g <= t.carrier_mask(); ++g) {
      n += raw::semiopen_witness_by_definition(t, g).has_value();
    }
    benchmark::DoNotOptimize(n);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(t.carrier_mask() + 1));
}
BENCHMARK(BM_SemiopenByDefinition)->Arg(6)->Arg(8)->Arg(10);

void BM_OracleFamilies(benchmark::State& state) {
  const auto t = sample(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(raw::oracle_families(t));
}
BENCHMARK(BM_OracleFamilies)->Arg(6)->Arg(8)->Arg(10);

void BM_SsclFast(benchmark::State& state) {
  const auto t = sample(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    Mask acc = 0;
    for (Mask g = 0; g <= t.carrier_mask(); ++g) acc ^= raw::sscl(t, g);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_SsclFast)->Arg(6)->Arg(8)->Arg(10);

}  // namespace
