#include <benchmark/benchmark.h>

#include "mhx/factorization.hpp"
#include "mhx/nilpotent.hpp"
#include "mhx/orbit.hpp"
#include "support/generators.hpp"

using namespace mhx;

namespace {

std::vector<Vec> random_rows(mhx_test::Rng& rng, std::size_t count, std::size_t n) {
    std::vector<Vec> rows(count, Vec(n));
    for (auto& row : rows)
        for (auto& x : row) x = rng.scalar(5);
    return rows;
}

void bm_rref(benchmark::State& state) {
    mhx_test::Rng rng(1);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto rows = random_rows(rng, n, n);
    for (auto _ : state) {
        auto copy = rows;
        benchmark::DoNotOptimize(rref(copy));
    }
}
BENCHMARK(bm_rref)->Arg(4)->Arg(8)->Arg(16);

void bm_bigrading(benchmark::State& state) {
    mhx_test::Rng rng(2);
    const auto data = mhx_test::random_mhs(rng, static_cast<std::size_t>(state.range(0)));
    const auto f = data.mhs.hodge_filtration();
    const auto w = data.mhs.weight_filtration();
    for (auto _ : state) benchmark::DoNotOptimize(MixedHodgeStructure::build(f, w));
}
BENCHMARK(bm_bigrading)->Arg(4)->Arg(8);

void bm_factorization(benchmark::State& state) {
    mhx_test::Rng rng(3);
    const auto data = mhx_test::random_mhs(rng, 6);
    const Matrix alpha = mhx_test::random_weight_lowering(rng, data.slot_weight, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(exp_triple_factorization(alpha, data.mhs));
}
BENCHMARK(bm_factorization);

void bm_relative_weight(benchmark::State& state) {
    mhx_test::Rng rng(4);
    const auto gi = mhx_test::random_grading_instance(rng, 7).instance;
    for (auto _ : state) benchmark::DoNotOptimize(relative_weight(gi.n, gi.w));
}
BENCHMARK(bm_relative_weight);

void bm_split_admissibility(benchmark::State& state) {
    mhx_test::Rng rng(5);
    const auto orbit = generate_split_orbit(mhx_test::random_orbit_spec(rng, 42));
    for (auto _ : state) benchmark::DoNotOptimize(split_admissibility(orbit));
}
BENCHMARK(bm_split_admissibility);

void bm_exp_nilpotent(benchmark::State& state) {
    mhx_test::Rng rng(6);
    const std::size_t n = 8;
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) a.at(i, j) = rng.scalar(3);
    for (auto _ : state) benchmark::DoNotOptimize(exp_nilpotent(a));
}
BENCHMARK(bm_exp_nilpotent);

}  // namespace

BENCHMARK_MAIN();
