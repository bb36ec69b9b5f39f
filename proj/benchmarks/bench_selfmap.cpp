#include <benchmark/benchmark.h>

#include "orbitspan/counterexample.hpp"
#include "orbitspan/selfmap.hpp"

using namespace orbitspan;

static void BM_OrbitReport(benchmark::State& state) {
    SelfMap phi = SelfMap::make({{0, 2}, {1, 2}, {5, 3}}, 1);
    Nat window = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(orbit_report(phi, 0, window));
}
BENCHMARK(BM_OrbitReport)->Arg(64)->Arg(512)->Arg(4096);

static void BM_MeetingIndices(benchmark::State& state) {
    SelfMap phi = SelfMap::make({{0, 9}, {1, 9}, {9, 4}}, 1);
    Nat bound = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(meeting_indices(phi, 0, 1, bound));
}
BENCHMARK(BM_MeetingIndices)->Arg(32)->Arg(128)->Arg(512);

static void BM_RefuteGraded(benchmark::State& state) {
    SelfMap phi = SelfMap::make({{0, 2}, {1, 2}}, 1);
    Nat window = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(refute_P(phi, window));
}
BENCHMARK(BM_RefuteGraded)->Arg(16)->Arg(32)->Arg(64);
