#include <benchmark/benchmark.h>

#include "curves/catalog.hpp"
#include "curves/classify.hpp"
#include "curves/jacobian.hpp"
#include "curves/linalg.hpp"
#include "curves/modular.hpp"

using namespace curves;

namespace {

const Polynomial& curve(const char* name) {
    return named_curve(name).projective;
}

void BM_Parse(benchmark::State& state) {
    std::string text = curve("C0pp").str();
    for (auto _ : state) benchmark::DoNotOptimize(parse(text));
}
BENCHMARK(BM_Parse);

void BM_SyzygyMatrix(benchmark::State& state) {
    JacobianTriple j = jacobian_triple(curve("C0"));
    int k = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(syzygy_matrix(j, k));
}
BENCHMARK(BM_SyzygyMatrix)->Arg(5)->Arg(9);

void BM_ModularRank(benchmark::State& state) {
    JacobianTriple j = jacobian_triple(curve("C0"));
    MapMatrix m = syzygy_matrix(j, int(state.range(0)));
    for (auto _ : state) {
        PrimeGen pg(42);
        benchmark::DoNotOptimize(modular_rank(m, pg));
    }
}
BENCHMARK(BM_ModularRank)->Arg(5)->Arg(9);

void BM_ExactRank(benchmark::State& state) {
    JacobianTriple j = jacobian_triple(curve("C0"));
    MapMatrix m = syzygy_matrix(j, int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exact_rank(m));
}
BENCHMARK(BM_ExactRank)->Arg(5)->Arg(7);

void BM_SyzygyKernel(benchmark::State& state) {
    JacobianTriple j = jacobian_triple(curve("Cb"));
    Engine eng;
    for (auto _ : state) benchmark::DoNotOptimize(syzygy_kernel(j, 5, eng));
}
BENCHMARK(BM_SyzygyKernel);

void BM_AnalyzeDegree10(benchmark::State& state) {
    Polynomial f = curve("C0");
    for (auto _ : state) {
        Engine eng;
        benchmark::DoNotOptimize(analyze(f, eng));
    }
}
BENCHMARK(BM_AnalyzeDegree10)->Unit(benchmark::kMillisecond);

void BM_AnalyzeDegree11Union(benchmark::State& state) {
    Polynomial f = curve("Cb_Lz");
    for (auto _ : state) {
        Engine eng;
        benchmark::DoNotOptimize(analyze(f, eng));
    }
}
BENCHMARK(BM_AnalyzeDegree11Union)->Unit(benchmark::kMillisecond);

void BM_TauBoundsGrid(benchmark::State& state) {
    for (auto _ : state)
        for (int d = 3; d <= 40; ++d)
            for (int r = 1; 2 * r <= d; ++r) benchmark::DoNotOptimize(tau_bounds(d, r));
}
BENCHMARK(BM_TauBoundsGrid);

}  // namespace

BENCHMARK_MAIN();
