#include <benchmark/benchmark.h>

#include <splicequot/dimension_identity.hpp>
#include <splicequot/nef.hpp>
#include <splicequot/series.hpp>
#include <splicequot/splice.hpp>

using namespace splicequot;

namespace
{

ResolutionGraph e8()
{
    return star_graph(-2, {{-2}, {-2, -2}, {-2, -2, -2, -2}}, true);
}

void BM_LatticeE8(benchmark::State &state)
{
    const auto g = e8();
    for (auto _ : state) {
        benchmark::DoNotOptimize(Lattice(g));
    }
}
BENCHMARK(BM_LatticeE8);

void BM_MonomialConditionDet1Star(benchmark::State &state)
{
    const Lattice lat(find_det1_star({2, 3, 5, 7}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(monomial_condition(lat));
    }
}
BENCHMARK(BM_MonomialConditionDet1Star);

void BM_NefEnumeration(benchmark::State &state)
{
    const Lattice lat(star_graph(-2, {{-2}, {-2}, {-2}}, true));
    RationalCycle bound = lat.zero();
    for (std::size_t v = 0; v < lat.size(); ++v) {
        bound -= Rational(state.range(0)) * lat.curve(v);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_nef_above(lat, bound));
    }
}
BENCHMARK(BM_NefEnumeration)->Arg(2)->Arg(4)->Arg(8);

void BM_HilbertSamuelPerturbed(benchmark::State &state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    const auto model = perturbed_pair_model({3, 5, 7, 8, 2, 2}, n + 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hilbert_samuel(model, n));
    }
}
BENCHMARK(BM_HilbertSamuelPerturbed)->Arg(10)->Arg(20);

void BM_NormalForm(benchmark::State &state)
{
    const auto model = perturbed_pair_model({3, 5, 7, 8, 2, 2}, 12);
    TruncatedSeries s(4, 12);
    for (const auto &m : monomials_up_to_degree(4, 8)) {
        s.add_term(m, 1);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(model.normal_form(s));
    }
}
BENCHMARK(BM_NormalForm);

void BM_DimensionIdentityE8(benchmark::State &state)
{
    const Lattice lat(e8());
    const auto sys = generate_splice_equations(lat, monomial_condition(lat));
    const IdentityOptions opts{static_cast<unsigned>(state.range(0)), 20, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_dimension_identity(lat, sys, opts));
    }
}
BENCHMARK(BM_DimensionIdentityE8)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
