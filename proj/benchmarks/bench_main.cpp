#include "pdw/catalog.hpp"
#include "pdw/formats.hpp"
#include "pdw/games.hpp"
#include "pdw/omega_runs.hpp"
#include "pdw/triangle.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_analyze_run_eraser(benchmark::State& state) {
    pdw::ParsedAutomaton a = pdw::catalog_automaton("automaton:lemma42:A1");
    std::vector<pdw::LassoWord> inputs = pdw::sample_lassos(
        a.pda.input_alphabet, 64, static_cast<size_t>(state.range(0)), 7u);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pdw::analyze_run(a.pda, inputs[i++ % inputs.size()]));
    }
}
BENCHMARK(BM_analyze_run_eraser)->Arg(6)->Arg(10)->Arg(14);

void BM_triangle_member(benchmark::State& state) {
    pdw::TriangleChain c = pdw::catalog_chain("chain:lemma42:anbn");
    pdw::LassoWord w = pdw::parse_lasso("⊥ a a b b ← ← ← ← a b ( # )");
    for (auto _ : state) {
        benchmark::DoNotOptimize(pdw::triangle_member(c, w));
    }
}
BENCHMARK(BM_triangle_member);

void BM_game_solve(benchmark::State& state) {
    pdw::GameInstance g = pdw::catalog_game("game:lemma42:anbn");
    pdw::FiniteWord stack = pdw::parse_word("⊥ a a a b b b ← ← a b");
    pdw::Configuration start{g.process.state_id("q").value(), stack};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            pdw::solve_bounded(g, start, pdw::default_bounds(stack.size())));
    }
}
BENCHMARK(BM_game_solve);

void BM_winning_set_slice(benchmark::State& state) {
    pdw::GameInstance g = pdw::catalog_game("game:prop45");
    pdw::StateId q = g.process.state_id("q").value();
    size_t n = static_cast<size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pdw::winning_set_slice(g, q, n, pdw::default_bounds(n)));
    }
}
BENCHMARK(BM_winning_set_slice)->Arg(3)->Arg(4);

} // namespace

BENCHMARK_MAIN();
