#include <benchmark/benchmark.h>

#include <set>

#include "mpsep/bitstats.hpp"
#include "mpsep/combinatorics.hpp"
#include "mpsep/distinguisher.hpp"
#include "mpsep/dynamics.hpp"
#include "mpsep/random.hpp"
#include "mpsep/separability.hpp"

namespace {

using namespace mpsep;

// First-bit dichotomy of a system trace with m = 6n: always separable.
void BM_DecideSeparableSystemTrace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto sys = random_system(SystemGenSpec{n, -8, 8, -8, 8, 42});
  const auto trace = generate_mp_trace(sys, 6 * n, 5);
  const auto d = std::get<Dichotomy>(bit_dichotomy(trace, 1));
  const SolveOptions options{state.range(1) != 0};
  for (auto _ : state) benchmark::DoNotOptimize(decide_separable(d, options));
  state.SetLabel(options.warm_start ? "warm" : "cold");
}
BENCHMARK(BM_DecideSeparableSystemTrace)
    ->ArgsProduct({{8, 16, 32}, {1}})
    ->Args({8, 0})
    ->Args({16, 0})
    ->Unit(benchmark::kMillisecond);

// Distinct points with uniform labels at m = 4n: almost surely inseparable.
void BM_DecideSeparableRandomLabels(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(9);
  std::set<BitVec> points;
  while (points.size() < 4 * n) points.insert(rng.bits(n));
  std::vector<BitVec> pos;
  std::vector<BitVec> neg;
  for (const auto& x : points) (rng.coin() ? pos : neg).push_back(x);
  const auto d = Dichotomy::make_disjoint(n, pos, neg);
  for (auto _ : state) benchmark::DoNotOptimize(decide_separable(d));
}
BENCHMARK(BM_DecideSeparableRandomLabels)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_StepPacked(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto sys = random_system(SystemGenSpec{n, -8, 8, -8, 8, 7});
  std::uint64_t x = 0x9e3779b97f4a7c15ULL >> (64 - n);
  for (auto _ : state) {
    x = sys.step_packed(x);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_StepPacked)->Arg(12)->Arg(37)->Arg(64);

void BM_ApplySystemExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto sys = random_system(SystemGenSpec{n, -8, 8, -8, 8, 7});
  Rng rng(3);
  BitVec x = rng.bits(n);
  for (auto _ : state) {
    x = apply_system(sys, x);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_ApplySystemExact)->Arg(37)->Arg(100);

void BM_Battery(benchmark::State& state) {
  const auto stream = reference_stream(11, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_battery(stream));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Battery)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_CountSeparableCube3(benchmark::State& state) {
  const auto cube = full_cube(3);
  for (auto _ : state) benchmark::DoNotOptimize(count_separable(cube));
}
BENCHMARK(BM_CountSeparableCube3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
