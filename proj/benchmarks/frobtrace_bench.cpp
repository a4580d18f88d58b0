#include <benchmark/benchmark.h>

#include "frobtrace/cyclo_roots.hpp"
#include "frobtrace/roundtrip.hpp"
#include "test_support.hpp"

using namespace frobtrace;
using namespace frobtrace::testing;

static void BM_CycloMultiply(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const CycloNum a = random_cyclo(rng, {24}), b = random_cyclo(rng, {21});
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMultiply);

static void BM_DixonTable(benchmark::State& state, const char* shape) {
  const Group g(library::named_shape(shape));
  for (auto _ : state) benchmark::DoNotOptimize(compute_chartable(g));
}
BENCHMARK_CAPTURE(BM_DixonTable, c7c3, "c7c3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DixonTable, q8_i4, "q8_i4")->Unit(benchmark::kMillisecond);

static void BM_RootsInField(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<Scalar> values;
  for (int i = 0; i < state.range(0); ++i) values.emplace_back(random_cyclo(rng, {1, 3, 4, 8, 12, 24}));
  const auto e = elementary_from_power_sums(power_sums_of(values, values.size()));
  CycloPoly poly(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) poly[e.size() - 1 - k] = k % 2 ? -e[k].cyclo() : e[k].cyclo();
  for (auto _ : state) benchmark::DoNotOptimize(roots_in_field(poly, {24, true, 3}));
}
BENCHMARK(BM_RootsInField)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_CurveXReconstruct(benchmark::State& state) {
  const LocalShape shape = c7c3_shape();
  const CharTable table = ingest_chartable(shape.group, c7c3_table_columns(), c7c3_table_rows());
  const auto orbits = twist_orbits(table, shape.group);
  const auto data = dataset_from_counts(curve_x_counts(false), shape, 3);
  ReconstructOptions opts;
  opts.dim_bound = 6;
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(data, table, shape, orbits, opts));
}
BENCHMARK(BM_CurveXReconstruct)->Unit(benchmark::kMillisecond);

static void BM_RoundTripTrial(benchmark::State& state, const char* name) {
  const LocalShape shape(Group(library::named_shape(name)), 7);
  const auto table = compute_chartable(shape.group);
  const auto orbits = twist_orbits(table, shape.group);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    RoundTripOptions opts;
    opts.trials = 1;
    opts.seed = seed++;
    benchmark::DoNotOptimize(run_roundtrip(shape, table, orbits, opts));
  }
}
BENCHMARK_CAPTURE(BM_RoundTripTrial, c7c3, "c7c3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RoundTripTrial, d4_i4, "d4_i4")->Unit(benchmark::kMillisecond);

static void BM_CountPoints(benchmark::State& state) {
  const FiniteField F(static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)));
  std::mt19937_64 rng(3);
  const auto curve = random_curve(F, 7, rng);
  for (auto _ : state) benchmark::DoNotOptimize(count_points(curve));
  state.SetItemsProcessed(state.iterations() * F.size());
}
BENCHMARK(BM_CountPoints)->Args({7, 3})->Args({101, 2})->Args({3, 12})->Unit(benchmark::kMillisecond);

static void BM_WdFromKernel(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::vector<WDData> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(random_compatible_wd(rng));
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& wd = inputs[k++ % inputs.size()];
    benchmark::DoNotOptimize(wd_from_kernel(flatten(wd), wd.q));
  }
}
BENCHMARK(BM_WdFromKernel);
BENCHMARK_MAIN();
