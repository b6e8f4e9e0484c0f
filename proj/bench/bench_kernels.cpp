// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "shape/gallery.hpp"
#include "shape/group_tower.hpp"
#include "shape/smith.hpp"

using namespace shape;

namespace {

IntegerMatrix random_matrix(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> entry(-9, 9);
    IntegerMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
    return m;
}

void BM_SmithParallel(benchmark::State& state) {
    const IntegerMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}

void BM_SmithReference(benchmark::State& state) {
    const IntegerMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form_reference(m));
}

ComplexTower bench_tower(std::size_t depth) { return build_gallery("comb", GalleryParams{0, 2, depth}); }

void BM_HomologyTowerParallel(benchmark::State& state) {
    const ComplexTower t = bench_tower(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(homology_tower(t, 1));
}

void BM_HomologyTowerSerial(benchmark::State& state) {
    const ComplexTower t = bench_tower(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(homology_tower_serial(t, 1));
}

}  // namespace

BENCHMARK(BM_SmithParallel)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SmithReference)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomologyTowerParallel)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomologyTowerSerial)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
