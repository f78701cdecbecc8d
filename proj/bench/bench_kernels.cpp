// Wall-time comparison of the OpenMP kernels against their serial
// references. Run with OMP_NUM_THREADS set to taste.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "trabox/kernels.hpp"
#include "trabox/model.hpp"
#include "trabox/wavefunction.hpp"

using namespace trabox;

namespace {

DenseMatrix random_symmetric(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    DenseMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) a(i, j) = a(j, i) = dist(rng);
    return a;
}

TridiagonalSymmetric random_tridiagonal(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    TridiagonalSymmetric t(n);
    for (std::size_t i = 0; i < n; ++i) {
        t.diag[i] = dist(rng);
        if (i + 1 < n) t.offdiag[i] = dist(rng);
    }
    return t;
}

BasisSpec bench_spec() {
    PotentialParams p;
    p.V0 = -7.0;
    p.V1 = -5.0;
    p.VL = 0.25;
    p.VR = 0.5;
    p.L = 2.0;
    return to_basis_spec(p);
}

void bm_householder_parallel(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const DenseMatrix base = random_symmetric(n, 1);
    std::vector<double> d, e;
    for (auto _ : state) {
        DenseMatrix a = base;
        kernels::householder_tridiagonalize(a, d, e);
        benchmark::DoNotOptimize(d.data());
    }
}

void bm_householder_serial(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const DenseMatrix base = random_symmetric(n, 1);
    std::vector<double> d, e;
    for (auto _ : state) {
        DenseMatrix a = base;
        kernels::serial::householder_tridiagonalize(a, d, e);
        benchmark::DoNotOptimize(d.data());
    }
}

void bm_ql_parallel(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const TridiagonalSymmetric t = random_tridiagonal(n, 2);
    for (auto _ : state) {
        std::vector<double> d = t.diag, e(n, 0.0);
        std::copy(t.offdiag.begin(), t.offdiag.end(), e.begin());
        DenseMatrix z(n);
        for (std::size_t i = 0; i < n; ++i) z(i, i) = 1.0;
        kernels::ql_implicit(d, e, &z);
        benchmark::DoNotOptimize(z.a.data());
    }
}

void bm_ql_serial(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const TridiagonalSymmetric t = random_tridiagonal(n, 2);
    for (auto _ : state) {
        std::vector<double> d = t.diag, e(n, 0.0);
        std::copy(t.offdiag.begin(), t.offdiag.end(), e.begin());
        DenseMatrix z(n);
        for (std::size_t i = 0; i < n; ++i) z(i, i) = 1.0;
        kernels::serial::ql_implicit(d, e, &z);
        benchmark::DoNotOptimize(z.a.data());
    }
}

void bm_bisect_parallel(benchmark::State& state) {
    const TridiagonalSymmetric t = random_tridiagonal(state.range(0), 3);
    for (auto _ : state) {
        auto v = kernels::lowest_eigenvalues(t, 8);
        benchmark::DoNotOptimize(v.data());
    }
}

void bm_bisect_serial(benchmark::State& state) {
    const TridiagonalSymmetric t = random_tridiagonal(state.range(0), 3);
    for (auto _ : state) {
        auto v = kernels::serial::lowest_eigenvalues(t, 8);
        benchmark::DoNotOptimize(v.data());
    }
}

void bm_grid_sum_parallel(benchmark::State& state) {
    const BasisSpec s = bench_spec();
    const std::vector<double> coeffs(64, 0.1);
    const std::vector<double> xs = uniform_grid(s.L, state.range(0));
    for (auto _ : state) {
        auto v = sum_basis_on_grid(s, coeffs, xs);
        benchmark::DoNotOptimize(v.data());
    }
}

void bm_grid_sum_serial(benchmark::State& state) {
    const BasisSpec s = bench_spec();
    const std::vector<double> coeffs(64, 0.1);
    const std::vector<double> xs = uniform_grid(s.L, state.range(0));
    for (auto _ : state) {
        auto v = sum_basis_on_grid_serial(s, coeffs, xs);
        benchmark::DoNotOptimize(v.data());
    }
}

BENCHMARK(bm_householder_serial)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_householder_parallel)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_ql_serial)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_ql_parallel)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_bisect_serial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_bisect_parallel)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_grid_sum_serial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_grid_sum_parallel)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
