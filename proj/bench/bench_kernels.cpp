// Serial reference vs OpenMP kernels.
//
//   ./bench_kernels --benchmark_filter=DSequence
//   OMP_NUM_THREADS=8 ./bench_kernels

#include <benchmark/benchmark.h>

#include "cevian/arrangement.hpp"
#include "cevian/ceva_numbers.hpp"
#include "cevian/oracle.hpp"

namespace {

using namespace cevian;

void BM_DSequenceSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(d_sequence_serial(2, state.range(0)));
}
void BM_DSequenceParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(d_sequence(2, state.range(0)));
}
BENCHMARK(BM_DSequenceSerial)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DSequenceParallel)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

void BM_CountSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_concurrencies_serial(state.range(0)));
}
void BM_CountParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_concurrencies(state.range(0)));
}
BENCHMARK(BM_CountSerial)->Arg(2000)->Arg(18721)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->Arg(2000)->Arg(18721)->Unit(benchmark::kMillisecond);

void BM_ScanSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_family_serial(Family::PTimes2PMinus1, state.range(0), true));
  }
}
void BM_ScanParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_family(Family::PTimes2PMinus1, state.range(0), true));
  }
}
BENCHMARK(BM_ScanSerial)->Arg(31)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_OracleSerial(benchmark::State& state) {
  const auto arr = build_arrangement(CevianConfig::equal_division(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_triangles_serial(arr).triangle_count);
}
void BM_OracleParallel(benchmark::State& state) {
  const auto arr = build_arrangement(CevianConfig::equal_division(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_triangles(arr).triangle_count);
}
BENCHMARK(BM_OracleSerial)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
