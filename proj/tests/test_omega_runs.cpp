#include "pdw/omega_runs.hpp"

#include "pdw/errors.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace pdw;

namespace {

Pda base(std::vector<std::string> names) {
    Pda p;
    p.state_names = std::move(names);
    p.input_alphabet = {sym("a"), sym("b")};
    p.stack_alphabet = {sym("Z"), sym("X")};
    p.bottom = sym("Z");
    p.initial = 0;
    return p;
}

Pda pusher() {
    Pda p = base({"loop"});
    p.delta[{0, sym("a"), sym("Z")}] = {act_push(0, sym("X"))};
    p.delta[{0, sym("a"), sym("X")}] = {act_push(0, sym("X"))};
    p.delta[{0, sym("b"), sym("Z")}] = {act_skip(0)};
    p.delta[{0, sym("b"), sym("X")}] = {act_skip(0)};
    return p;
}

Pda flat() {
    Pda p = base({"loop"});
    p.delta[{0, sym("a"), sym("Z")}] = {act_skip(0)};
    return p;
}

LassoWord only_a() { return LassoWord{{}, make_word({"a"})}; }

} // namespace

TEST_CASE("strictly unbounded pushing run") {
    RunAnalysis r = analyze_run(pusher(), only_a());
    REQUIRE(r.completeness == Completeness::Complete);
    REQUIRE(r.strictly_unbounded);
    REQUIRE(r.stack_limit.is_infinite());
    REQUIRE(lasso_equal(r.stack_limit.lasso(), LassoWord{make_word({"Z"}), make_word({"X"})}));
    REQUIRE(r.period_steps >= 1);
    REQUIRE(r.pumped_word == make_word({"X"}));
    REQUIRE(r.inf_states == std::set<StateId>{0});
}

TEST_CASE("stationary skipping run") {
    RunAnalysis r = analyze_run(flat(), only_a());
    REQUIRE(r.completeness == Completeness::Complete);
    REQUIRE_FALSE(r.strictly_unbounded);
    REQUIRE_FALSE(r.stack_limit.is_infinite());
    REQUIRE(r.stack_limit.finite_word() == make_word({"Z"}));
    REQUIRE(r.inf_states == std::set<StateId>{0});
}

TEST_CASE("stationary run with a wiggling cycle") {
    Pda p = base({"low", "high"});
    p.delta[{0, sym("a"), sym("Z")}] = {act_push(1, sym("X"))};
    p.delta[{1, sym("b"), sym("X")}] = {act_pop(0)};
    RunAnalysis r = analyze_run(p, LassoWord{{}, make_word({"a", "b"})});
    REQUIRE(r.completeness == Completeness::Complete);
    REQUIRE_FALSE(r.strictly_unbounded);
    REQUIRE(r.stack_limit == WordLimit::finite(make_word({"Z"})));
    REQUIRE(r.inf_states == std::set<StateId>{0, 1});
}

TEST_CASE("blocked run") {
    Pda p = base({"stuck"});
    p.delta[{0, sym("a"), sym("Z")}] = {act_push(0, sym("X"))};
    // nothing is defined on top X, the second letter blocks
    RunAnalysis r = analyze_run(p, only_a());
    REQUIRE(r.completeness == Completeness::Blocked);
    REQUIRE_FALSE(r.strictly_unbounded);
}

TEST_CASE("λ-divergent runs") {
    SECTION("skipping in place") {
        Pda p = base({"spin"});
        p.delta[{0, std::nullopt, sym("Z")}] = {act_skip(0)};
        RunAnalysis r = analyze_run(p, only_a());
        REQUIRE(r.completeness == Completeness::LambdaDivergent);
        REQUIRE_FALSE(r.strictly_unbounded);
        REQUIRE(r.stack_limit == WordLimit::finite(make_word({"Z"})));
    }
    SECTION("pushing forever") {
        Pda p = base({"spin"});
        p.delta[{0, std::nullopt, sym("Z")}] = {act_push(0, sym("X"))};
        p.delta[{0, std::nullopt, sym("X")}] = {act_push(0, sym("X"))};
        RunAnalysis r = analyze_run(p, only_a());
        REQUIRE(r.completeness == Completeness::LambdaDivergent);
        REQUIRE_FALSE(r.strictly_unbounded);
    }
    SECTION("a λ prefix before real reading stays complete") {
        Pda p = base({"pre", "loop"});
        p.delta[{0, std::nullopt, sym("Z")}] = {act_push(1, sym("X"))};
        p.delta[{1, sym("a"), sym("X")}] = {act_push(1, sym("X"))};
        RunAnalysis r = analyze_run(p, only_a());
        REQUIRE(r.completeness == Completeness::Complete);
        REQUIRE(r.strictly_unbounded);
    }
}

TEST_CASE("analyze_run rejects nondeterminism") {
    Pda p = base({"loop"});
    p.delta[{0, sym("a"), sym("Z")}] = {act_skip(0), act_push(0, sym("X"))};
    REQUIRE_THROWS_AS(analyze_run(p, only_a()), std::invalid_argument);
}

TEST_CASE("step ceiling") {
    AnalyzeOptions opts;
    opts.step_ceiling = 1;
    REQUIRE_THROWS_AS(analyze_run(pusher(), only_a(), opts), ResourceLimitError);

    uint64_t saved = default_step_ceiling();
    set_default_step_ceiling(1);
    REQUIRE(default_step_ceiling() == 1);
    REQUIRE_THROWS_AS(analyze_run(pusher(), only_a()), ResourceLimitError);
    set_default_step_ceiling(saved);
    REQUIRE(analyze_run(pusher(), only_a()).completeness == Completeness::Complete);
}

TEST_CASE("ω-acceptance") {
    SECTION("Büchi") {
        REQUIRE(accepts_omega(pusher(), Buchi{{0}}, only_a()));
        REQUIRE_FALSE(accepts_omega(pusher(), Buchi{{}}, only_a()));
    }
    SECTION("parity and Muller on an alternating pair") {
        Pda p = base({"even", "odd"});
        p.delta[{0, sym("a"), sym("Z")}] = {act_skip(1)};
        p.delta[{1, sym("a"), sym("Z")}] = {act_skip(0)};
        REQUIRE(accepts_omega(p, Parity{{{0, 2}, {1, 3}}}, only_a()));
        REQUIRE_FALSE(accepts_omega(p, Parity{{{0, 1}, {1, 2}}}, only_a()));
        REQUIRE(accepts_omega(p, Muller{{{0, 1}}}, only_a()));
        REQUIRE_FALSE(accepts_omega(p, Muller{{{0}, {1}}}, only_a()));

        AnalyzeOptions opts;
        opts.coloring = Parity{{{0, 1}, {1, 2}}};
        RunAnalysis r = analyze_run(p, only_a(), opts);
        REQUIRE(r.min_inf_color == 1u);
    }
    SECTION("a blocked run accepts nothing") {
        Pda p = base({"stuck"});
        REQUIRE_FALSE(accepts_omega(p, Buchi{{0}}, only_a()));
    }
    SECTION("final-state conditions are finite-word only") {
        REQUIRE_THROWS_AS(accepts_omega(pusher(), FinalStates{{0}}, only_a()),
                          std::invalid_argument);
    }
}

TEST_CASE("continuity sampling") {
    // total over its whole alphabet, so perturbations stay complete
    std::vector<LassoWord> samples = sample_lassos({sym("a"), sym("b")}, 16, 5, 11u);
    ContinuityReport good = check_continuity(pusher(), samples);
    REQUIRE(good.continuous);
    REQUIRE_FALSE(good.counterexample.has_value());
    REQUIRE(good.runs_checked >= samples.size());

    Pda p = base({"stuck"});
    // blocks immediately on b
    p.delta[{0, sym("a"), sym("Z")}] = {act_skip(0)};
    std::vector<LassoWord> mixed = sample_lassos({sym("a"), sym("b")}, 16, 5, 11u);
    ContinuityReport bad = check_continuity(p, mixed);
    REQUIRE_FALSE(bad.continuous);
    REQUIRE(bad.counterexample.has_value());
}

TEST_CASE("lasso sampling respects its bounds") {
    std::vector<Symbol> alphabet = {sym("a"), sym("b")};
    std::vector<LassoWord> first = sample_lassos(alphabet, 64, 6, 3u);
    REQUIRE(first.size() == 64);
    for (const LassoWord& w : first) {
        size_t total = w.spoke.size() + w.cycle.size();
        REQUIRE(total >= 1);
        REQUIRE(total <= 6);
        REQUIRE_FALSE(w.cycle.empty());
        for (Symbol s : w.spoke) REQUIRE((s == sym("a") || s == sym("b")));
        for (Symbol s : w.cycle) REQUIRE((s == sym("a") || s == sym("b")));
    }
    std::vector<LassoWord> again = sample_lassos(alphabet, 64, 6, 3u);
    REQUIRE(first == again);
    std::vector<LassoWord> other = sample_lassos(alphabet, 64, 6, 4u);
    REQUIRE_FALSE(first == other);
}