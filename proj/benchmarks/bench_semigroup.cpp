#include <benchmark/benchmark.h>

#include "csg/classify.hpp"
#include "csg/enumerate.hpp"
#include "csg/gensys.hpp"

using namespace csg;

namespace {

// <2k, 2k+4> ∪ {f+1, →}: even generators never give consecutive elements.
GapSemigroup rank_two(Coord f) {
  const Coord k = f / 16;
  return closure(numerical_ambient(), num(f), {num(2 * k), num(2 * k + 4)}).semigroup;
}

void BM_FromGaps(benchmark::State& state) {
  const auto s = rank_two(state.range(0));
  const auto gaps = s.gaps();
  for (auto _ : state) {
    benchmark::DoNotOptimize(GapSemigroup::from_gaps(numerical_ambient(), gaps));
  }
}
BENCHMARK(BM_FromGaps)->Arg(83)->Arg(163)->Arg(323);

void BM_Msg(benchmark::State& state) {
  const auto s = rank_two(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(s.msg());
}
BENCHMARK(BM_Msg)->Arg(83)->Arg(163);

void BM_Apery(benchmark::State& state) {
  const auto s = rank_two(163);
  for (auto _ : state) benchmark::DoNotOptimize(apery(s, s.multiplicity()));
}
BENCHMARK(BM_Apery);

void BM_PseudoFrobenius(benchmark::State& state) {
  const auto s = rank_two(163);
  for (auto _ : state) benchmark::DoNotOptimize(pseudo_frobenius(s));
}
BENCHMARK(BM_PseudoFrobenius);

void BM_IsA(benchmark::State& state) {
  const auto s = rank_two(163);
  for (auto _ : state) benchmark::DoNotOptimize(is_A(s));
}
BENCHMARK(BM_IsA);

void BM_IsAUpsilon(benchmark::State& state) {
  const auto s = rank_two(163);
  for (auto _ : state) benchmark::DoNotOptimize(is_A_upsilon(s));
}
BENCHMARK(BM_IsAUpsilon);

void BM_Closure(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure(numerical_ambient(), num(83), {num(10), num(14)}));
  }
}
BENCHMARK(BM_Closure);

void BM_HilbertBasis(benchmark::State& state) {
  const Cone cone({Point{12, 1}, Point{7, 4}});
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(cone));
}
BENCHMARK(BM_HilbertBasis);

}  // namespace
