#include <benchmark/benchmark.h>

#include "orbitspan/linalg.hpp"
#include "orbitspan/prng.hpp"

using namespace orbitspan;

namespace {

std::vector<QVector> random_rows(std::size_t count, std::size_t dim, std::uint64_t seed) {
    Prng rng(seed);
    std::vector<QVector> rows;
    for (std::size_t r = 0; r < count; ++r) {
        QVector v;
        for (std::size_t c = 0; c < dim; ++c) {
            if (rng.chance(1, 2)) continue;
            long long n = (long long)rng.below(9) - 4;
            if (n != 0) v.set(c, Rational(n, (long long)rng.below(4) + 1));
        }
        rows.push_back(std::move(v));
    }
    return rows;
}

} // namespace

static void BM_Rank(benchmark::State& state) {
    std::size_t n = state.range(0);
    std::vector<QVector> rows = random_rows(n, n + n / 2, 7);
    QMatrix m = QMatrix::from_rows(rows, n + n / 2);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_DependenceWitness(benchmark::State& state) {
    std::size_t n = state.range(0);
    // force a dependence: duplicate the last row
    std::vector<QVector> rows = random_rows(n, n, 11);
    rows.push_back(rows.front());
    QMatrix m = QMatrix::from_rows(rows, n);
    for (auto _ : state) benchmark::DoNotOptimize(dependence_witness(m));
}
BENCHMARK(BM_DependenceWitness)->Arg(8)->Arg(16)->Arg(32);

static void BM_SubspaceSumMembership(benchmark::State& state) {
    std::size_t n = state.range(0);
    Subspace a = Subspace::from_generators(random_rows(n / 2, n, 3));
    Subspace b = Subspace::from_generators(random_rows(n / 2, n, 5));
    QVector probe = random_rows(1, n, 9).front();
    for (auto _ : state) benchmark::DoNotOptimize(in_span_plus(probe, a, b));
}
BENCHMARK(BM_SubspaceSumMembership)->Arg(8)->Arg(24)->Arg(48);

BENCHMARK_MAIN();
