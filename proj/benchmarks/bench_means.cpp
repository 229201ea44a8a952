#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hardy/accumulator.hpp"
#include "hardy/mean.hpp"
#include "hardy/prefix.hpp"

namespace {

const hardy::MeanSpec kMeans[] = {
    hardy::PowerMean{0.5},
    hardy::PowerMean{0.0},
    hardy::GiniMean{1.0, -1.0},
    hardy::QuasiArithmeticMean{hardy::Generator::log_linear()},
};

std::vector<double> random_values(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(1e-3, 1e3);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

void BM_Push(benchmark::State& state) {
  const auto& mean = kMeans[state.range(0)];
  const auto values = random_values(4096);
  for (auto _ : state) {
    hardy::MeanAccumulator acc(mean);
    for (const double x : values) {
      acc.push(x);
      benchmark::DoNotOptimize(acc.value());
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(values.size()));
  state.SetLabel(hardy::format_mean(mean));
}
BENCHMARK(BM_Push)->DenseRange(0, 3);

void BM_Eval(benchmark::State& state) {
  const auto& mean = kMeans[state.range(0)];
  const auto values = random_values(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(hardy::eval(mean, values));
  state.SetItemsProcessed(state.iterations() * state.range(1));
  state.SetLabel(hardy::format_mean(mean));
}
BENCHMARK(BM_Eval)->ArgsProduct({{0, 1, 2, 3}, {16, 4096}});

void BM_HardyRatioTruncatedHarmonic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto seq = hardy::SequenceSpec::truncated_harmonic(n, 1e-9 / static_cast<double>(n));
  for (auto _ : state) benchmark::DoNotOptimize(hardy::hardy_ratio(hardy::PowerMean{0.5}, seq, 4 * n).ratio);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(4 * n));
}
BENCHMARK(BM_HardyRatioTruncatedHarmonic)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
