#include <benchmark/benchmark.h>

#include "fqdist/distance.hpp"
#include "fqdist/generate.hpp"
#include "fqdist/spectral.hpp"

namespace {

using namespace fqdist;

PointSet make_set(const FieldContext& ctx, int s, std::uint64_t size, std::uint64_t seed) {
  return generate(ctx, s, GeneratorSpec::uniform_random(size, seed));
}

// args: q, s, #E (= #F)
void BM_NuBrute(benchmark::State& state) {
  FieldContext ctx(state.range(0));
  const int s = static_cast<int>(state.range(1));
  PointSet e = make_set(ctx, s, state.range(2), 1);
  PointSet f = make_set(ctx, s, state.range(2), 2);
  for (auto _ : state) benchmark::DoNotOptimize(nu_brute(ctx, e, f));
  state.counters["pairs"] = static_cast<double>(e.size() * f.size());
}

void BM_NuSpectral(benchmark::State& state) {
  FieldContext ctx(state.range(0));
  const int s = static_cast<int>(state.range(1));
  PointSet e = make_set(ctx, s, state.range(2), 1);
  PointSet f = make_set(ctx, s, state.range(2), 2);
  for (auto _ : state) benchmark::DoNotOptimize(nu_spectral(ctx, e, f));
}

// args: q, s
void BM_ForwardTransform(benchmark::State& state) {
  FieldContext ctx(state.range(0));
  const int s = static_cast<int>(state.range(1));
  GridFunction g = indicator(make_set(ctx, s, Shape::make(ctx.q(), s).size / 2, 3));
  for (auto _ : state) benchmark::DoNotOptimize(forward_transform(ctx, g));
  state.counters["grid"] = static_cast<double>(g.size());
}

}  // namespace

BENCHMARK(BM_NuBrute)->Args({101, 2, 1000})->Args({101, 2, 5000})->Args({31, 3, 5000})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NuSpectral)->Args({101, 2, 1000})->Args({101, 2, 5000})->Args({31, 3, 5000})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ForwardTransform)->Args({101, 2})->Args({31, 3})->Args({13, 4})->Args({211, 2})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
