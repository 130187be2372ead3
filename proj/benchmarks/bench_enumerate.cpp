#include <benchmark/benchmark.h>

#include "csg/enumerate.hpp"
#include "csg/oracle.hpp"

using namespace csg;

namespace {

AmbientPtr skew() {
  static const AmbientPtr a =
      make_ambient(Cone({Point{12, 1}, Point{7, 4}}), MonomialOrder::graded_lex(2));
  return a;
}

void BM_AfNumerical(benchmark::State& state) {
  const Coord f = state.range(0);
  std::size_t nodes = 0;
  for (auto _ : state) {
    auto tree = enumerate_A_f(numerical_ambient(), num(f));
    nodes = tree.size();
    benchmark::DoNotOptimize(tree);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_AfNumerical)->DenseRange(15, 35, 5)->Unit(benchmark::kMillisecond);

void BM_AfSkew(benchmark::State& state) {
  const Point f{state.range(0), state.range(1)};
  std::size_t nodes = 0;
  for (auto _ : state) {
    auto tree = enumerate_A_f(skew(), f);
    nodes = tree.size();
    benchmark::DoNotOptimize(tree);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_AfSkew)->Args({7, 2})->Args({9, 2})->Args({12, 3})->Unit(benchmark::kMillisecond);

void BM_AfWorkers(benchmark::State& state) {
  const EnumerateOptions options{static_cast<std::size_t>(state.range(0)), false};
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_A_f(numerical_ambient(), num(30), options));
  }
}
BENCHMARK(BM_AfWorkers)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Covariety(benchmark::State& state) {
  const auto kind = state.range(1) == 0 ? Covariety::Arf : Covariety::Sat;
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_covariety(state.range(0), kind));
  }
}
BENCHMARK(BM_Covariety)->Args({25, 0})->Args({25, 1})->Args({35, 0})->Unit(benchmark::kMillisecond);

void BM_AMED(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_AMED_fm(state.range(0), 7));
}
BENCHMARK(BM_AMED)->Arg(30)->Arg(45)->Unit(benchmark::kMillisecond);

void BM_WindowPartition(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(partition_A_fm(skew(), Point{9, 2}, Point{2, 1}));
  }
}
BENCHMARK(BM_WindowPartition)->Unit(benchmark::kMillisecond);

void BM_OracleFamily(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::brute_family(state.range(0), oracle::Filter::A));
  }
}
BENCHMARK(BM_OracleFamily)->Arg(13)->Arg(17)->Unit(benchmark::kMillisecond);

}  // namespace
