#include <benchmark/benchmark.h>

#include "specgenus/invariants.hpp"
#include "specgenus/newton_diagram.hpp"
#include "specgenus/polynomial_parser.hpp"

using namespace specgenus;

static void BM_InteriorDeficitScaledCusp(benchmark::State& state) {
    const NewtonDiagram d = build_diagram(scale_support(parse_polynomial("x^2+y^3"), state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(interior_phi_deficit(d));
}
BENCHMARK(BM_InteriorDeficitScaledCusp)->Arg(8)->Arg(32)->Arg(64);

static void BM_InteriorDeficitSurface(benchmark::State& state) {
    const NewtonDiagram d = build_diagram(parse_polynomial("x^" + std::to_string(state.range(0)) + "+y^5+z^7+x^2*y^2"));
    for (auto _ : state) benchmark::DoNotOptimize(interior_phi_deficit(d));
}
BENCHMARK(BM_InteriorDeficitSurface)->Arg(6)->Arg(12)->Arg(24);

static void BM_QuasihomSpectrum(benchmark::State& state) {
    const std::vector<Rational> w(3, Rational(1, state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(quasihom_spectrum(w));
}
BENCHMARK(BM_QuasihomSpectrum)->Arg(6)->Arg(12)->Arg(20);

static void BM_BuildDiagram(benchmark::State& state) {
    const auto support = parse_polynomial("(x^2+y^5+z^3)*(y^2+x^5+z^4) + x*y*z^2");
    for (auto _ : state) benchmark::DoNotOptimize(build_diagram(support));
}
BENCHMARK(BM_BuildDiagram);

static void BM_Kouchnirenko(benchmark::State& state) {
    const NewtonDiagram d = build_diagram(diagonal_support(static_cast<int>(state.range(0)), 9));
    for (auto _ : state) benchmark::DoNotOptimize(kouchnirenko_mu(d));
}
BENCHMARK(BM_Kouchnirenko)->Arg(1)->Arg(3)->Arg(5);
BENCHMARK_MAIN();
