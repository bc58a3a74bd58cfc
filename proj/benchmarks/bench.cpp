#include <benchmark/benchmark.h>

#include "dqlin/decomposition.hpp"
#include "dqlin/determinant.hpp"
#include "dqlin/matrix.hpp"

namespace {

using namespace dqlin;

void BM_MooreDet(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DQMatrix a = random_hermitian(n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(moore_det(a));
}
BENCHMARK(BM_MooreDet)->DenseRange(3, 7);

void BM_ChenDet(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DQMatrix a = random_hermitian(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(chen_det(a));
}
BENCHMARK(BM_ChenDet)->DenseRange(3, 7);

void BM_DysonDet(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DQMatrix a = random_hermitian(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(moore_det_dyson(a, 1));
}
BENCHMARK(BM_DysonDet)->DenseRange(3, 8);

void BM_QuasiDet(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DQMatrix a = random_hermitian(n, 4);
    for (auto _ : state) benchmark::DoNotOptimize(quasi_det(a));
}
BENCHMARK(BM_QuasiDet)->DenseRange(3, 8);

void BM_LU(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DQMatrix a = random_hermitian(n, 5);
    for (auto _ : state) benchmark::DoNotOptimize(lu_partial_pivot(a));
}
BENCHMARK(BM_LU)->DenseRange(4, 8);

void BM_HermitianEig(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DQMatrix a = random_hermitian(n, 6);
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(a));
}
BENCHMARK(BM_HermitianEig)->DenseRange(3, 6);

} // namespace

BENCHMARK_MAIN();
