#include "pdw/automata.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace pdw;

namespace {

// Acceptor of { a^n b^n : n >= 1 } over stack {Z, A}. The first a is
// remembered by the state, later a's push A, b's pop, and the last b is
// read with Z on top.
Pda counter_pda() {
    Pda p;
    p.state_names = {"start", "reading_a", "reading_b", "done"};
    p.input_alphabet = {sym("a"), sym("b")};
    p.stack_alphabet = {sym("Z"), sym("A")};
    p.bottom = sym("Z");
    p.initial = 0;
    p.delta[{0, sym("a"), sym("Z")}] = {act_skip(1)};
    p.delta[{1, sym("a"), sym("Z")}] = {act_push(1, sym("A"))};
    p.delta[{1, sym("a"), sym("A")}] = {act_push(1, sym("A"))};
    p.delta[{1, sym("b"), sym("Z")}] = {act_skip(3)};
    p.delta[{1, sym("b"), sym("A")}] = {act_pop(2)};
    p.delta[{2, sym("b"), sym("A")}] = {act_pop(2)};
    p.delta[{2, sym("b"), sym("Z")}] = {act_skip(3)};
    return p;
}

} // namespace

TEST_CASE("action helpers") {
    TransitionAction a = act_push(3, sym("X"));
    REQUIRE(a.kind == ActKind::Push);
    REQUIRE(a.target == 3);
    REQUIRE(a.symbol == sym("X"));
    REQUIRE(act_skip(1).kind == ActKind::Skip);
    REQUIRE(act_pop(0).kind == ActKind::Pop);
}

TEST_CASE("state lookup by name") {
    Pda p = counter_pda();
    REQUIRE(p.state_id("start") == StateId{0});
    REQUIRE(p.state_id("reading_b") == StateId{2});
    REQUIRE_FALSE(p.state_id("missing").has_value());
    REQUIRE(p.state_name(1) == "reading_a");
}

TEST_CASE("validate_pda accepts a well-formed automaton") {
    REQUIRE(validate_pda(counter_pda()).empty());
}

TEST_CASE("validate_pda reports violations") {
    SECTION("pop of the bottom symbol") {
        Pda p = counter_pda();
        p.delta[{0, sym("b"), sym("Z")}] = {act_pop(0)};
        REQUIRE_FALSE(validate_pda(p).empty());
    }
    SECTION("push of the bottom symbol") {
        Pda p = counter_pda();
        p.delta[{0, sym("a"), sym("A")}] = {act_push(0, sym("Z"))};
        REQUIRE_FALSE(validate_pda(p).empty());
    }
    SECTION("target state out of range") {
        Pda p = counter_pda();
        p.delta[{0, sym("a"), sym("Z")}] = {act_skip(17)};
        REQUIRE_FALSE(validate_pda(p).empty());
    }
    SECTION("unknown stack symbol in a key") {
        Pda p = counter_pda();
        p.delta[{0, sym("a"), sym("Q")}] = {act_skip(0)};
        REQUIRE_FALSE(validate_pda(p).empty());
    }
    SECTION("unknown input letter in a key") {
        Pda p = counter_pda();
        p.delta[{0, sym("z"), sym("Z")}] = {act_skip(0)};
        REQUIRE_FALSE(validate_pda(p).empty());
    }
    SECTION("duplicate state names") {
        Pda p = counter_pda();
        p.state_names[2] = "reading_a";
        REQUIRE_FALSE(validate_pda(p).empty());
    }
    SECTION("bottom missing from the stack alphabet") {
        Pda p = counter_pda();
        p.bottom = sym("W");
        REQUIRE_FALSE(validate_pda(p).empty());
    }
}

TEST_CASE("classification") {
    Pda p = counter_pda();
    PdaClass cls = classify_pda(p);
    REQUIRE(cls.deterministic);
    REQUIRE(cls.real_time);

    SECTION("two actions under one key break determinism") {
        p.delta[{0, sym("a"), sym("Z")}] = {act_push(0, sym("A")), act_skip(1)};
        REQUIRE_FALSE(classify_pda(p).deterministic);
    }
    SECTION("a λ move ends real time") {
        p.delta[{3, std::nullopt, sym("Z")}] = {act_skip(3)};
        PdaClass with_lambda = classify_pda(p);
        REQUIRE_FALSE(with_lambda.real_time);
        REQUIRE(with_lambda.deterministic);
    }
    SECTION("λ and letter moves enabled at the same state and top") {
        p.delta[{0, std::nullopt, sym("Z")}] = {act_skip(1)};
        REQUIRE_FALSE(classify_pda(p).deterministic);
        REQUIRE_FALSE(classify_pda(p).real_time);
    }
}

TEST_CASE("step_config applies one move") {
    Pda p = counter_pda();
    Configuration c{0, {sym("Z")}};

    std::vector<Configuration> skipped = step_config(p, c, sym("a"));
    REQUIRE(skipped.size() == 1);
    REQUIRE(skipped[0] == Configuration{1, {sym("Z")}});

    std::vector<Configuration> pushed = step_config(p, skipped[0], sym("a"));
    REQUIRE(pushed.size() == 1);
    REQUIRE(pushed[0] == Configuration{1, {sym("Z"), sym("A")}});

    std::vector<Configuration> popped = step_config(p, pushed[0], sym("b"));
    REQUIRE(popped.size() == 1);
    REQUIRE(popped[0] == Configuration{2, {sym("Z")}});

    REQUIRE(step_config(p, c, sym("b")).empty());
    REQUIRE(step_config(p, c, std::nullopt).empty());
}

TEST_CASE("finite acceptance by final states") {
    Pda p = counter_pda();
    std::set<StateId> finals = {3};
    REQUIRE(accepts_finite(p, finals, make_word({"a", "b"})));
    REQUIRE(accepts_finite(p, finals, make_word({"a", "a", "b", "b"})));
    REQUIRE(accepts_finite(p, finals, make_word({"a", "a", "a", "b", "b", "b"})));
    REQUIRE_FALSE(accepts_finite(p, finals, make_word({"a", "b", "b"})));
    REQUIRE_FALSE(accepts_finite(p, finals, make_word({"a", "a", "b"})));
    REQUIRE_FALSE(accepts_finite(p, finals, {}));
    REQUIRE_FALSE(accepts_finite(p, finals, make_word({"b"})));
    REQUIRE_FALSE(accepts_finite(p, finals, make_word({"a", "b", "a", "b"})));
}

TEST_CASE("acceptance kind names") {
    REQUIRE(acceptance_kind_name(FinalStates{}) == "final");
    REQUIRE(acceptance_kind_name(Buchi{}) == "buchi");
    REQUIRE(acceptance_kind_name(Muller{}) == "muller");
    REQUIRE(acceptance_kind_name(Parity{}) == "parity");
}
