// Serial reference vs OpenMP kernels.

#include <random>

#include <benchmark/benchmark.h>

#include "ennms/kernels.hpp"
#include "ennms/scenario.hpp"
#include "ennms/sensitivity.hpp"

namespace {

ennms::kernels::LotteryBatch make_batch(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> value(-1e6, 1e6);
  std::uniform_real_distribution<double> weight(0.01, 1.0);
  ennms::kernels::LotteryBatch batch;
  for (std::size_t i = 0; i < n; ++i) {
    double p[4];
    double v[4];
    double sum = 0;
    for (int k = 0; k < 4; ++k) sum += (p[k] = weight(rng));
    for (int k = 0; k < 4; ++k) {
      p[k] /= sum;
      v[k] = value(rng);
    }
    batch.add(p, v);
  }
  return batch;
}

const ennms::kernels::BlackSwanCurve kCarrierCurve{{0.25, 0.75}, {57008.0, 52336.0}, -5e6};
const auto kCarrierRisk = ennms::RiskPreference::tolerance(ennms::Money::from_dollars(5'000'000));

void BM_CertainEquivalentsSerial(benchmark::State& state) {
  const auto batch = make_batch(static_cast<std::size_t>(state.range(0)));
  const auto pref = ennms::RiskPreference::tolerance(ennms::Money::from_dollars(250'000));
  for (auto _ : state) benchmark::DoNotOptimize(ennms::kernels::serial::certain_equivalents(batch, pref));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CertainEquivalentsParallel(benchmark::State& state) {
  const auto batch = make_batch(static_cast<std::size_t>(state.range(0)));
  const auto pref = ennms::RiskPreference::tolerance(ennms::Money::from_dollars(250'000));
  for (auto _ : state) benchmark::DoNotOptimize(ennms::kernels::parallel::certain_equivalents(batch, pref));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ScanSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ennms::kernels::serial::scan_expected_utility(
        kCarrierCurve, 0.0, static_cast<std::size_t>(state.range(0)), kCarrierRisk));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ScanParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ennms::kernels::parallel::scan_expected_utility(
        kCarrierCurve, 0.0, static_cast<std::size_t>(state.range(0)), kCarrierRisk));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Sweep(benchmark::State& state, ennms::Execution exec) {
  const auto scenario = ennms::parse_scenario(ennms::builtin_fixture("carrier"));
  const auto param = ennms::SweepParameter::parse("rho");
  for (auto _ : state) {
    benchmark::DoNotOptimize(ennms::sweep(scenario, param, 1e4, 1e9, static_cast<int>(state.range(0)),
                                          ennms::Spacing::kLog, exec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_CertainEquivalentsSerial)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_CertainEquivalentsParallel)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_ScanSerial)->Arg(1 << 14)->Arg(1'000'000);
BENCHMARK(BM_ScanParallel)->Arg(1 << 14)->Arg(1'000'000);
BENCHMARK_CAPTURE(BM_Sweep, serial, ennms::Execution::kSerial)->Arg(256);
BENCHMARK_CAPTURE(BM_Sweep, parallel, ennms::Execution::kParallel)->Arg(256);

BENCHMARK_MAIN();
