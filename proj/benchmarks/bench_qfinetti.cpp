#include <benchmark/benchmark.h>

#include <random>

#include "qfinetti/qfinetti.hpp"

using namespace qfinetti;

namespace {

const QParam half = QParam::parse("1/2");

void BM_QBinomialTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(QBinomialTable(half, n));
}
BENCHMARK(BM_QBinomialTable)->Arg(16)->Arg(32)->Arg(64);

void BM_EnumerateLevel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long total = 0;
    for (const Word w : enumerate_level(n, n / 2)) total += coinversions(w);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_EnumerateLevel)->Arg(12)->Arg(16)->Arg(20);

void BM_DistanceExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extreme_vs_bernoulli_distance(n, n / 2, 4, half));
}
BENCHMARK(BM_DistanceExact)->Arg(16)->Arg(32)->Arg(48);

void BM_DistanceFloat(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QParam q = half.with_mode(Mode::floating);
  for (auto _ : state) benchmark::DoNotOptimize(extreme_vs_bernoulli_distance(n, n / 2, 4, q));
}
BENCHMARK(BM_DistanceFloat)->Arg(16)->Arg(32)->Arg(48);

void BM_SweepRate(benchmark::State& state) {
  const Mode mode = state.range(0) == 0 ? Mode::exact : Mode::floating;
  const RateSweepConfig cfg{half.with_mode(mode), 3, 3, 24, n1_rule::Half{}};
  for (auto _ : state) benchmark::DoNotOptimize(sweep_rate(cfg));
}
BENCHMARK(BM_SweepRate)->Arg(0)->Arg(1);

void BM_ToDense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto m = random_q_exch(n, half, 7);
  for (auto _ : state) benchmark::DoNotOptimize(to_dense(m));
}
BENCHMARK(BM_ToDense)->Arg(8)->Arg(12)->Arg(16);

void BM_Sampler(benchmark::State& state) {
  const QExchSampler sampler(q_bernoulli(32, DeltaQPoint{3}, half));
  std::mt19937_64 rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sampler(rng));
}
BENCHMARK(BM_Sampler);

}  // namespace

BENCHMARK_MAIN();
