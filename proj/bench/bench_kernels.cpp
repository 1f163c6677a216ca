// Serial references against the OpenMP kernels on the heavy inner loops.
// Both paths return identical results (tests/test_kernels.cpp holds them to
// that); this target measures what the parallel build buys.

#include <benchmark/benchmark.h>

#include "pfq/group.hpp"
#include "pfq/kernels.hpp"
#include "pfq/probe.hpp"
#include "pfq/quandle.hpp"

using namespace pfq;

namespace {

const FiniteQuandle &big_tak() {
  static const FiniteQuandle q = tak_quandle(cyclic_group(256));
  return q;
}

void BM_DistributivityScan(benchmark::State &state) {
  const auto mode = state.range(0) ? ExecMode::Parallel : ExecMode::Serial;
  const FiniteQuandle &q = big_tak();
  for (auto _ : state) {
    auto w = kernels::distributivity_violation(q.table(), q.size(), mode);
    benchmark::DoNotOptimize(w);
  }
}

void BM_AutomorphismSearch(benchmark::State &state) {
  const auto mode = state.range(0) ? ExecMode::Parallel : ExecMode::Serial;
  const FiniteQuandle q = trivial_quandle(8); // every bijection qualifies
  for (auto _ : state) {
    auto images = kernels::automorphism_images(q.table(), q.size(), mode);
    benchmark::DoNotOptimize(images);
  }
}

void BM_EnumerateConnected5(benchmark::State &state) {
  const auto mode = state.range(0) ? ExecMode::Parallel : ExecMode::Serial;
  for (auto _ : state) {
    auto tables = kernels::enumerate_tables(5, true, mode);
    benchmark::DoNotOptimize(tables);
  }
}

void BM_BruteforceTables4(benchmark::State &state) {
  const auto mode = state.range(0) ? ExecMode::Parallel : ExecMode::Serial;
  for (auto _ : state) {
    auto tables = kernels::enumerate_tables_bruteforce(4, false, mode);
    benchmark::DoNotOptimize(tables);
  }
}

void BM_CounterexampleProbe4(benchmark::State &state) {
  const auto mode = state.range(0) ? ExecMode::Parallel : ExecMode::Serial;
  for (auto _ : state) {
    auto report = counterexample_probe(4, mode);
    benchmark::DoNotOptimize(report);
  }
}

} // namespace

BENCHMARK(BM_DistributivityScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AutomorphismSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateConnected5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteforceTables4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CounterexampleProbe4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
