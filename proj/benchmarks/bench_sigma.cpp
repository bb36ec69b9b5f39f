#include <benchmark/benchmark.h>

#include "orbitspan/sigma.hpp"

using namespace orbitspan;

namespace {

SigmaStructure modular_addition(std::size_t n) {
    Signature sig;
    sig.symbols = {{"add", 2}, {"zero", 0}};
    std::vector<std::size_t> add(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) add[x * n + y] = (x + y) % n;
    return SigmaStructure::make(n, std::move(sig), {add, {0}});
}

} // namespace

static void BM_TermClosure(benchmark::State& state) {
    SigmaStructure a = modular_addition(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(term_closure(a, 0b10));
}
BENCHMARK(BM_TermClosure)->Arg(4)->Arg(8)->Arg(16);

static void BM_ProjectionLaws(benchmark::State& state) {
    SigmaStructure a = modular_addition(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(powerset_projection_laws(a));
}
BENCHMARK(BM_ProjectionLaws)->Arg(4)->Arg(6);
