#include <benchmark/benchmark.h>

#include "res_atlas/gamma.hpp"
#include "res_atlas/resonances.hpp"

using namespace res_atlas;

static void BM_ComplexGamma(benchmark::State& state) {
    cplx z(0.37, 2.1);
    for (auto _ : state) {
        z += cplx(1e-9, 0.0);
        benchmark::DoNotOptimize(complex_gamma(z));
    }
}
BENCHMARK(BM_ComplexGamma);

static void BM_DensityDirect(benchmark::State& state) {
    Plancherel pl(catalog_lookup("EIII"));
    SpectralPoint l{cplx(0.31, 1.7), cplx(0.12, 3.4)};
    for (auto _ : state) benchmark::DoNotOptimize(pl.density_direct(l));
}
BENCHMARK(BM_DensityDirect);

static void BM_DensityFactored(benchmark::State& state) {
    Plancherel pl(catalog_lookup("EIII"));
    SpectralPoint l{cplx(0.31, 1.7), cplx(0.12, 3.4)};
    for (auto _ : state) benchmark::DoNotOptimize(pl.density_factored(l).product);
}
BENCHMARK(BM_DensityFactored);

static void BM_ContourF(benchmark::State& state) {
    Contour ct(Plancherel(catalog_lookup("DIII")), symbol_gauss());
    ContourConfig cfg;
    cfg.nodes = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ct.F(cplx(0.4, -1.1), cfg).value);
}
BENCHMARK(BM_ContourF)->Arg(128)->Arg(512)->Arg(2048);

static void BM_Enumerate(benchmark::State& state) {
    auto s = catalog_lookup("CII:3");
    Rational bound(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_resonances(s, bound).size());
}
BENCHMARK(BM_Enumerate)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_ScanPoles(benchmark::State& state) {
    Contour ct(Plancherel(catalog_lookup("DIII")), symbol_one());
    for (auto _ : state) benchmark::DoNotOptimize(scan_poles(ct, 3).size());
}
BENCHMARK(BM_ScanPoles)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
