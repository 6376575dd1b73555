#include <benchmark/benchmark.h>

#include "knotoid/enumerate.hpp"
#include "knotoid/invariants.hpp"
#include "knotoid/moves.hpp"
#include "knotoid/structure.hpp"

namespace {

using namespace knotoid;

// Census representatives with 3 and 5 crossings.
const char* const kK3 = "B0,A0C0C3D0,B1D2D1B2,B3C2C1E0,D3";
const char* const kK5 = "B0,A0C0C3D0,B1D3E0B2,B3E3F0C1,C2F3F1D1,D2E2G0E1,F2";

void BM_CanonicalCode(benchmark::State& state) {
  const Diagram d = parse_em(state.range(0) == 3 ? kK3 : kK5);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(d));
}
BENCHMARK(BM_CanonicalCode)->Arg(3)->Arg(5);

void BM_Bracket(benchmark::State& state) {
  const Diagram d = parse_em(kK5);
  for (auto _ : state) benchmark::DoNotOptimize(bracket(d));
}
BENCHMARK(BM_Bracket);

void BM_Arrow(benchmark::State& state) {
  const Diagram d = parse_em(kK5);
  for (auto _ : state) benchmark::DoNotOptimize(arrow(d));
}
BENCHMARK(BM_Arrow);

void BM_MockAlexander(benchmark::State& state) {
  const Diagram d = parse_em(kK5);
  for (auto _ : state) benchmark::DoNotOptimize(mock_alexander(d));
}
BENCHMARK(BM_MockAlexander);

void BM_AffineIndex(benchmark::State& state) {
  const Diagram d = parse_em(kK5);
  for (auto _ : state) benchmark::DoNotOptimize(affine_index(d));
}
BENCHMARK(BM_AffineIndex);

void BM_Yamada(benchmark::State& state) {
  const Diagram d = parse_em(kK5);
  for (auto _ : state) benchmark::DoNotOptimize(yamada_closure(d));
}
BENCHMARK(BM_Yamada);

void BM_FindSites(benchmark::State& state) {
  const Diagram d = parse_em(kK5);
  const std::vector<MoveKind> kinds{MoveKind::R1Minus, MoveKind::R2Minus, MoveKind::R2Plus, MoveKind::R3,
                                    MoveKind::Flype};
  for (auto _ : state) benchmark::DoNotOptimize(find_sites(d, kinds));
}
BENCHMARK(BM_FindSites);

void BM_Reach(benchmark::State& state) {
  const Diagram d = parse_em(kK5);
  const ReachParams p{static_cast<int>(state.range(0)), state.range(1) != 0, 5'000'000, -1, 1};
  std::size_t states = 0;
  for (auto _ : state) {
    const ReachResult r = reach(d, p);
    states = r.codes.size();
  }
  state.counters["states"] = static_cast<double>(states);
  state.counters["states_per_s"] =
      benchmark::Counter(static_cast<double>(states), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_Reach)->Args({0, 1})->Args({1, 0})->Args({1, 1})->Unit(benchmark::kMillisecond);

void BM_Primality(benchmark::State& state) {
  const Diagram d = parse_em(kK5);
  for (auto _ : state) benchmark::DoNotOptimize(is_prime(d));
}
BENCHMARK(BM_Primality);

void BM_GenShadows(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gen_shadows(n));
}
BENCHMARK(BM_GenShadows)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_AssignCrossings(benchmark::State& state) {
  const auto shadows = gen_shadows(4);
  for (auto _ : state)
    for (const ShadowMap& s : shadows) benchmark::DoNotOptimize(assign_crossings(s));
}
BENCHMARK(BM_AssignCrossings)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
