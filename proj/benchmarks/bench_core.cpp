#include <benchmark/benchmark.h>

#include "cantordim/cantordim.hpp"

using namespace cantordim;

static void BM_TraceCountCEvens(benchmark::State& state) {
  TreeSet c = TreeSet::ci(IndexSpec::evens());
  for (auto _ : state) benchmark::DoNotOptimize(trace_counts(c, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_TraceCountCEvens)->Arg(64)->Arg(256)->Arg(1024);

static void BM_TraceSumset(benchmark::State& state) {
  TreeSet a = TreeSet::ci(IndexSpec::periodic("", "100"));
  TreeSet b = TreeSet::ci(IndexSpec::periodic("", "110"));
  TreeSet s = TreeSet::sumset(a, b);
  for (auto _ : state) benchmark::DoNotOptimize(trace(s, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_TraceSumset)->Arg(12)->Arg(18);

static void BM_MeasureDpFull(benchmark::State& state) {
  auto h = DyadicHFn::power(1);
  TreeSet full = TreeSet::full_cube();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hausdorff_measure_delta(full, h, 0, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_MeasureDpFull)->Arg(16)->Arg(64);

static void BM_MeasureDpSparseCi(benchmark::State& state) {
  auto h = DyadicHFn::power(Rational(1, 2));
  TreeSet c = TreeSet::ci(sparse_I_builder(h, 64));
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff_measure_delta(c, h, 8, 64));
}
BENCHMARK(BM_MeasureDpSparseCi);

static void BM_ProductCovering(benchmark::State& state) {
  TreeSet p = TreeSet::product(TreeSet::ci(IndexSpec::evens()), TreeSet::ci(IndexSpec::log_blocks(Word("10"))));
  for (auto _ : state) benchmark::DoNotOptimize(covering_number(p, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ProductCovering)->Arg(32)->Arg(128);

static void BM_MeFBuilder(benchmark::State& state) {
  auto h = DyadicHFn::power(Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(me_fbuilder(h, 12));
}
BENCHMARK(BM_MeFBuilder);
BENCHMARK_MAIN();
