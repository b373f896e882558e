#include "fock/band.hpp"
#include "fock/lower_norm.hpp"
#include "fock/operators.hpp"
#include "fock/quadrature.hpp"
#include "fock/symbol.hpp"

#include <benchmark/benchmark.h>

using namespace fock;

static void BM_BuildHermiteGrid(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_grid_nu(1, 1.0, GridScheme::HermiteTensor, m));
}
BENCHMARK(BM_BuildHermiteGrid)->Arg(32)->Arg(64)->Arg(96);

static void BM_AssembleToeplitz(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    FockParams params(1, 2.0, 1.0);
    QuadratureGrid grid = build_grid_nu(1, 1.0, GridScheme::HermiteTensor, N + 2);
    SymbolFunction f = sum_symbol(constant_symbol(1.0), bump_symbol(Complex(0.0), 1.0, 0.5));
    for (auto _ : state) benchmark::DoNotOptimize(assemble_toeplitz(f, N, params, grid));
}
BENCHMARK(BM_AssembleToeplitz)->Arg(10)->Arg(20)->Arg(40);

static void BM_ProjectionOperator(benchmark::State& state) {
    FockParams params(1, 2.0, 1.0);
    GridOptions opts;
    opts.extent = static_cast<double>(state.range(0));
    QuadratureGrid grid =
        build_grid_nu(1, 1.0, GridScheme::Uniform, static_cast<int>(state.range(0)), opts);
    for (auto _ : state) benchmark::DoNotOptimize(projection_operator(grid, params));
}
BENCHMARK(BM_ProjectionOperator)->Arg(12)->Arg(24);

static void BM_BandDecayProfile(benchmark::State& state) {
    FockParams params(1, 2.0, 1.0);
    GridOptions opts;
    opts.extent = static_cast<double>(state.range(0));
    QuadratureGrid grid =
        build_grid_nu(1, 1.0, GridScheme::Uniform, static_cast<int>(state.range(0)), opts);
    GridOperator P = projection_operator(grid, params);
    for (auto _ : state) benchmark::DoNotOptimize(band_decay_profile(P, {1.0, 0.5}));
}
BENCHMARK(BM_BandDecayProfile)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_LowerNorm(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Random(dim, dim);
    std::vector<int> F = full_mask(dim);
    for (auto _ : state) benchmark::DoNotOptimize(lower_norm(A, F));
}
BENCHMARK(BM_LowerNorm)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
