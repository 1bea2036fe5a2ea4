#include <benchmark/benchmark.h>

#include <random>

#include "fftile/fourier.hpp"
#include "fftile/packing.hpp"
#include "fftile/polyring.hpp"
#include "fftile/tiling.hpp"

using namespace fftile;

namespace {

RationalFunction random_function(Int pv, int d, unsigned seed) {
    PrimeModulus p(pv);
    RationalFunction f(p, d);
    std::mt19937 rng(seed);
    for (Int i = 0; i < f.domain_size(); ++i)
        f.set(i, BigRational(static_cast<Int>(rng() % 19) - 9, 1 + static_cast<Int>(rng() % 9)));
    return f;
}

PointSet parabola(Int pv) {
    PrimeModulus p(pv);
    std::vector<FpVector> pts;
    for (Int t = 0; t < pv; ++t) pts.emplace_back(p, std::vector<Int>{t, mod_mul(t, t, pv)});
    return PointSet::from_points(p, 2, pts);
}

void BM_dft(benchmark::State& state) {
    RationalFunction f = random_function(state.range(0), 2, 42);
    for (auto _ : state) benchmark::DoNotOptimize(dft(f, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_dft)->Args({7, 1})->Args({13, 1})->Args({13, 4});

void BM_inverse_dft(benchmark::State& state) {
    Spectrum s = dft(random_function(state.range(0), 2, 43));
    for (auto _ : state) benchmark::DoNotOptimize(inverse_dft(s));
}
BENCHMARK(BM_inverse_dft)->Arg(7)->Arg(13);

void BM_poly_product(benchmark::State& state) {
    Int pv = state.range(0);
    PrimeModulus p(pv);
    QuotientPoly e = QuotientPoly::encode_set(parabola(pv));
    QuotientPoly a = QuotientPoly::encode_set(PointSet::full_space(p, 2));
    for (auto _ : state) benchmark::DoNotOptimize(e * a);
}
BENCHMARK(BM_poly_product)->Arg(7)->Arg(13);

void BM_verify_tiling(benchmark::State& state) {
    Int pv = state.range(0);
    PrimeModulus p(pv);
    PointSet e = parabola(pv);
    std::vector<FpVector> axis;
    for (Int t = 0; t < pv; ++t) axis.emplace_back(p, std::vector<Int>{0, t});
    PointSet a = PointSet::from_points(p, 2, axis);
    for (auto _ : state) benchmark::DoNotOptimize(verify_tiling(e, a, 1));
}
BENCHMARK(BM_verify_tiling)->Arg(7)->Arg(13);

void BM_is_graph(benchmark::State& state) {
    PointSet e = parabola(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(is_graph(e));
}
BENCHMARK(BM_is_graph)->Arg(7)->Arg(13);

void BM_packing_number_full(benchmark::State& state) {
    PrimeModulus p(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(packing_number(p, 1, PackingMode::Full));
}
BENCHMARK(BM_packing_number_full)->Arg(5)->Arg(13);

void BM_enumerate_cotilers(benchmark::State& state) {
    PrimeModulus p(3);
    std::vector<FpVector> line;
    for (Int t = 0; t < 3; ++t) line.emplace_back(p, std::vector<Int>{t, 0});
    PointSet e = PointSet::from_points(p, 2, line);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_cotilers(e));
}
BENCHMARK(BM_enumerate_cotilers);

}  // namespace

BENCHMARK_MAIN();
