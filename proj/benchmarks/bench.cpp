#include "bvw/actions.hpp"
#include "bvw/complexes.hpp"

#include <benchmark/benchmark.h>

using namespace bvw;

namespace {

FiniteSpectralTriple zero_triple(int n) { return {n, CMatrix(n)}; }

Poly casimir(BVSpectralTriple const &t)
{
	return casimir_action(t, {{Rational(0)}, {Rational(1)}});
}

void bm_structure_constants(benchmark::State &state)
{
	for (auto _ : state)
		benchmark::DoNotOptimize(StructureConstants(int(state.range(0))));
}
BENCHMARK(bm_structure_constants)->Arg(2)->Arg(3)->Arg(4);

void bm_extended_action(benchmark::State &state)
{
	BVSpectralTriple t(zero_triple(int(state.range(0))));
	auto s0 = casimir(t);
	for (auto _ : state)
		benchmark::DoNotOptimize(extended_action(t, s0));
}
BENCHMARK(bm_extended_action)->Arg(2)->Arg(3);

void bm_cme(benchmark::State &state)
{
	BVSpectralTriple t(zero_triple(int(state.range(0))));
	auto s = extended_action(t, casimir(t));
	for (auto _ : state)
		benchmark::DoNotOptimize(check_cme(s));
}
BENCHMARK(bm_cme)->Arg(2)->Arg(3);

void bm_laplacian(benchmark::State &state)
{
	BVSpectralTriple t(zero_triple(int(state.range(0))));
	auto s = extended_action(t, casimir(t));
	for (auto _ : state)
		benchmark::DoNotOptimize(bv_laplacian(s));
}
BENCHMARK(bm_laplacian)->Arg(2)->Arg(3);

void bm_coboundary_rank(benchmark::State &state)
{
	BVSpectralTriple t(zero_triple(2));
	auto tab = t.table();
	auto s = extended_action(t, casimir(t));
	auto d = [&](Poly const &c) { return antibracket(s, c); };
	std::vector<int> vars;
	for (auto const &v : tab->all())
		vars.push_back(v.id);
	int D = int(state.range(0));
	auto b0 = cochain_basis(*tab, vars, 0, D);
	auto b1 = cochain_basis(*tab, vars, 1, D + 1);
	auto w = coboundary_matrix(d, tab, b0, b1);
	for (auto _ : state)
		benchmark::DoNotOptimize(matrix_rank(w, ArithmeticMode::exact_radical));
}
BENCHMARK(bm_coboundary_rank)->Arg(2)->Arg(3);

} // namespace

BENCHMARK_MAIN();
