// Serial versus OpenMP multiplication kernels on the series the checks use.

#include <benchmark/benchmark.h>

#include "bilevel/lift.hpp"

using namespace bilevel;

namespace {

void BM_QRSeriesSerial(benchmark::State& state) {
  const QRSeries f = standard_form("phi3", state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mul_serial(f, f));
}

void BM_QRSeriesParallel(benchmark::State& state) {
  const QRSeries f = standard_form("phi3", state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mul_parallel(f, f));
}

void BM_TripleSerial(benchmark::State& state) {
  const TripleSeries a = exp_lift_truncated(LiftInputId::PHI3, state.range(0));
  const TripleSeries b = exp_lift_truncated(LiftInputId::PHI3P, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mul_serial(a, b));
}

void BM_TripleParallel(benchmark::State& state) {
  const TripleSeries a = exp_lift_truncated(LiftInputId::PHI3, state.range(0));
  const TripleSeries b = exp_lift_truncated(LiftInputId::PHI3P, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mul_parallel(a, b));
}

}  // namespace

BENCHMARK(BM_QRSeriesSerial)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QRSeriesParallel)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TripleSerial)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TripleParallel)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
