#include "kvertex/bgm.hpp"
#include "kvertex/expand.hpp"
#include "kvertex/expr.hpp"
#include "kvertex/quiver.hpp"
#include "kvertex/residue.hpp"
#include "kvertex/wallcross.hpp"

#include <benchmark/benchmark.h>

using namespace kvertex;

namespace {

const char* kResidueInput = "z^2/((1-t*z)^3*(1-s/t*z)^2*(1-t^2*z))";

void BM_ResidueClosedForm(benchmark::State& state) {
    const RationalFunction f = parse_rational_function(kResidueInput);
    for (auto _ : state) benchmark::DoNotOptimize(residue_k(f));
}
BENCHMARK(BM_ResidueClosedForm);

void BM_ResidueOracle(benchmark::State& state) {
    const RationalFunction f = parse_rational_function(kResidueInput);
    for (auto _ : state) benchmark::DoNotOptimize(residue_k_oracle(f, 4 * f.total_multiplicity() + 16));
}
BENCHMARK(BM_ResidueOracle);

void BM_PartialFractions(benchmark::State& state) {
    const RationalFunction f = parse_rational_function("1/((1-z^3)*(1-t*z)^2*(1-z^2))");
    for (auto _ : state) benchmark::DoNotOptimize(partial_fractions(f));
}
BENCHMARK(BM_PartialFractions);

void BM_Star(benchmark::State& state) {
    const PhiElement a = PhiElement::basis(state.range(0)), b = PhiElement::basis(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(star(a, b));
}
BENCHMARK(BM_Star)->Arg(2)->Arg(8)->Arg(16);

void BM_VertexShuffle(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const DimVector a{n};
    LaurentPoly p(1L);
    const auto vars = blocks(a);
    for (const auto& v : vars[0]) p *= LaurentPoly(1L) + LaurentPoly::var(v);
    const ZGraded f{a, p};
    const Monomial z = Monomial::var("z");
    for (auto _ : state) benchmark::DoNotOptimize(vertex_shuffle(f, f, z));
}
BENCHMARK(BM_VertexShuffle)->Arg(1)->Arg(2)->Arg(3);

void BM_VertexKernel(benchmark::State& state) {
    const Quiver q = Quiver::with_edges(2, {{0, 1}});
    const GradedElement f({2, 0}, parse_laurent("s_{1,1}+s_{1,2}")), g({0, 2}, parse_laurent("s_{2,1}*s_{2,2}"));
    for (auto _ : state) benchmark::DoNotOptimize(vertex_kernel(q, f, g));
}
BENCHMARK(BM_VertexKernel);

void BM_LieBracket(benchmark::State& state) {
    const Quiver q = Quiver::with_edges(2, {{0, 1}});
    const GradedElement f({2, 0}, parse_laurent("s_{1,1}/s_{1,2}+s_{1,2}/s_{1,1}")), g({0, 2}, LaurentPoly(1L));
    const bool cached = state.range(0) != 0;
    BracketCache cache;
    for (auto _ : state) benchmark::DoNotOptimize(lie_bracket(q, f, g, cached ? &cache : nullptr));
}
BENCHMARK(BM_LieBracket)->Arg(0)->Arg(1);

void BM_WallCrossRoundTrip(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const StabilityData stab = StabilityData::uniform(n, {std::vector<long>(n, 1)});
    InvariantTable<FreeLie> z;
    for (const auto& a : classes_of_total_at_most(n, n == 1 ? 4 : 3)) z.emplace(a, FreeLie::generator(generator_name(a)));
    const FreeAlgebra alg;
    for (auto _ : state) benchmark::DoNotOptimize(invert_transform(alg, forward_table(alg, z, 0, stab), 0, stab));
}
BENCHMARK(BM_WallCrossRoundTrip)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
