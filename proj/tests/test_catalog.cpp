#include "pdw/catalog.hpp"

#include "pdw/formats.hpp"
#include "pdw/omega_runs.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace pdw;

namespace {

const char* kAutomata[] = {
    "automaton:lemma42:A1", "automaton:lemma42:A2", "automaton:lemma42:Lrec",
    "automaton:prop45:A1",  "automaton:prop45:A2",  "automaton:L1",
    "automaton:L2",         "automaton:L3",         "automaton:L4",
};

std::vector<FiniteWord> ab_words_up_to(size_t max_len) {
    std::vector<FiniteWord> out;
    for (size_t len = 0; len <= max_len; ++len) {
        for (size_t mask = 0; mask < (size_t(1) << len); ++mask) {
            FiniteWord w;
            for (size_t i = 0; i < len; ++i)
                w.push_back((mask >> i) & 1 ? sym("b") : sym("a"));
            out.push_back(std::move(w));
        }
    }
    return out;
}

} // namespace

TEST_CASE("every catalog id resolves") {
    std::vector<std::string> ids = catalog_ids();
    REQUIRE(ids.size() >= 17);
    std::set<std::string> seen;
    for (const std::string& id : ids) {
        REQUIRE_NOTHROW(catalog_lookup(id));
        REQUIRE(seen.insert(id).second);
    }
    REQUIRE(seen.count("automaton:lemma42:Lrec"));
    REQUIRE(seen.count("lang:V"));
    REQUIRE_THROWS_AS(catalog_lookup("automaton:nope"), std::invalid_argument);
}

TEST_CASE("typed getters enforce the kind") {
    REQUIRE_THROWS_AS(catalog_automaton("process:lemma42"), std::invalid_argument);
    REQUIRE_THROWS_AS(catalog_process("automaton:lemma42:Lrec"), std::invalid_argument);
    REQUIRE_THROWS_AS(catalog_chain("lang:V"), std::invalid_argument);
    REQUIRE_THROWS_AS(catalog_game("chain:prop45"), std::invalid_argument);
}

TEST_CASE("catalog automata are clean deterministic real-time machines") {
    for (const char* id : kAutomata) {
        INFO(id);
        ParsedAutomaton a = catalog_automaton(id);
        REQUIRE(validate_pda(a.pda).empty());
        PdaClass cls = classify_pda(a.pda);
        REQUIRE(cls.deterministic);
        REQUIRE(cls.real_time);
    }
}

TEST_CASE("catalog games validate") {
    for (const char* id : {"game:lemma42:anbn", "game:prop45", "game:prop46"}) {
        INFO(id);
        REQUIRE(validate_game(catalog_game(id)).empty());
    }
}

TEST_CASE("the recognizer agrees with the counting oracle") {
    ParsedAutomaton lrec = catalog_automaton("automaton:lemma42:Lrec");
    const auto& finals = std::get<FinalStates>(*lrec.acceptance).states;
    for (const FiniteWord& w : ab_words_up_to(8)) {
        INFO(print_word(w));
        REQUIRE(accepts_finite(lrec.pda, finals, w) == oracle_language("anbn", w));
    }
}

TEST_CASE("the eraser head computes backspace limits") {
    ParsedAutomaton a1 = catalog_automaton("automaton:lemma42:A1");
    SECTION("erasure inside the prefix") {
        RunAnalysis r = analyze_run(a1.pda, parse_lasso("⊥ a b ← ( # )"));
        REQUIRE(r.completeness == Completeness::Complete);
        REQUIRE(r.strictly_unbounded);
        REQUIRE(r.stack_limit == WordLimit::infinite(parse_lasso("⊥₁ a ( # )")));
    }
    SECTION("erasing at the floor is a no-op") {
        RunAnalysis r = analyze_run(a1.pda, parse_lasso("⊥ ← ← ( # )"));
        REQUIRE(r.strictly_unbounded);
        REQUIRE(r.stack_limit == WordLimit::infinite(parse_lasso("⊥₁ ( # )")));
    }
}

TEST_CASE("the eraser terminal reads erased words") {
    ParsedAutomaton a2 = catalog_automaton("automaton:lemma42:A2");
    auto accepts = [&](const char* text) {
        return accepts_omega(a2.pda, *a2.acceptance, parse_lasso(text));
    };
    REQUIRE(accepts("⊥₁ a b ( # )"));
    REQUIRE(accepts("⊥₁ a a b b ( # )"));
    REQUIRE_FALSE(accepts("⊥₁ a ( # )"));
    REQUIRE_FALSE(accepts("⊥₁ b a ( # )"));
    REQUIRE_FALSE(accepts("⊥₁ ( # )"));
    REQUIRE_FALSE(accepts("⊥₁ a b ( a )"));
}

TEST_CASE("the cancelling head keeps only matched suffixes") {
    ParsedAutomaton a1 = catalog_automaton("automaton:prop45:A1");
    SECTION("matched c block") {
        RunAnalysis r = analyze_run(a1.pda, parse_lasso("⊥ a b c ( # )"));
        REQUIRE(r.strictly_unbounded);
        REQUIRE(r.stack_limit == WordLimit::infinite(parse_lasso("⊥₁ a ( # )")));
    }
    SECTION("unmatched c block freezes") {
        RunAnalysis r = analyze_run(a1.pda, parse_lasso("⊥ a b b c ( # )"));
        REQUIRE(r.completeness == Completeness::Complete);
        REQUIRE_FALSE(r.strictly_unbounded);
    }
    SECTION("no c block defers the comparison") {
        RunAnalysis r = analyze_run(a1.pda, parse_lasso("⊥ a a b ( # )"));
        REQUIRE(r.strictly_unbounded);
        REQUIRE(r.stack_limit == WordLimit::infinite(parse_lasso("⊥₁ a a b ( # )")));
    }
}

TEST_CASE("the block recognizers compare the advertised counts") {
    auto check = [](const char* id, const char* text, bool expect) {
        ParsedAutomaton a = catalog_automaton(id);
        INFO(id << " on " << text);
        REQUIRE(accepts_omega(a.pda, *a.acceptance, parse_lasso(text)) == expect);
    };
    check("automaton:L1", "a b c ( d )", true);
    check("automaton:L1", "a a b c ( d )", false);
    check("automaton:L2", "a b b c c ( d )", true);
    check("automaton:L2", "a b b c ( d )", false);
    check("automaton:L3", "a a b c ( d )", true);
    check("automaton:L3", "a b c ( d )", false);
    check("automaton:L4", "a b b c ( d )", true);
    check("automaton:L4", "a b c ( d )", false);
    // off the block pattern nothing is accepted
    check("automaton:L1", "b a c ( d )", false);
    check("automaton:L3", "( a )", false);
}

TEST_CASE("oracle languages") {
    REQUIRE(oracle_language("V", parse_word("a a b b c")));
    REQUIRE(oracle_language("V", parse_word("a b b c c")));
    REQUIRE_FALSE(oracle_language("V", parse_word("a b b c")));
    REQUIRE_FALSE(oracle_language("V", parse_word("b a c")));
    REQUIRE(oracle_language("anbncn", parse_word("a b c")));
    REQUIRE_FALSE(oracle_language("anbncn", parse_word("a a b b c")));
    REQUIRE(oracle_language("anbn~", parse_word("a a ← b")));
    REQUIRE_FALSE(oracle_language("anbn~", parse_word("a b ←")));
    REQUIRE(oracle_language("L1∩L2", parse_lasso("a b c ( d )")));
    REQUIRE_FALSE(oracle_language("L1∩L2", parse_lasso("a a b c ( d )")));
    REQUIRE(oracle_language("L5", parse_lasso("( a )")));
    REQUIRE_FALSE(oracle_language("L5", parse_lasso("a a b c ( d )")));

    SECTION("kind mismatches throw") {
        REQUIRE_THROWS_AS(oracle_language("anbn", parse_lasso("( a )")), std::invalid_argument);
        REQUIRE_THROWS_AS(oracle_language("L1", parse_word("a")), std::invalid_argument);
        REQUIRE_THROWS_AS(oracle_language("nope"), std::invalid_argument);
    }
    SECTION("metadata") {
        NamedLanguage v = oracle_language("V");
        REQUIRE(v.finitary);
        REQUIRE_FALSE(v.description.empty());
        REQUIRE(static_cast<bool>(v.finite_oracle));
        REQUIRE_FALSE(static_cast<bool>(v.omega_oracle));
        NamedLanguage l1 = oracle_language("L1");
        REQUIRE_FALSE(l1.finitary);
        REQUIRE(static_cast<bool>(l1.omega_oracle));
    }
}

TEST_CASE("the eraser game builder") {
    GameInstance built = build_game_eraser(catalog_automaton("automaton:lemma42:Lrec"));
    REQUIRE(built == catalog_game("game:lemma42:anbn"));

    SECTION("recognizer must carry final states") {
        REQUIRE_THROWS_AS(build_game_eraser(catalog_automaton("automaton:L1")),
                          std::invalid_argument);
    }
    SECTION("reserved letters are rejected") {
        Pda p;
        p.state_names = {"s"};
        p.input_alphabet = {sym("a"), sym("←")};
        p.stack_alphabet = {sym("Z")};
        p.bottom = sym("Z");
        p.initial = 0;
        p.delta[{0, sym("a"), sym("Z")}] = {act_skip(0)};
        p.delta[{0, sym("←"), sym("Z")}] = {act_skip(0)};
        ParsedAutomaton bad{p, AcceptanceCondition(FinalStates{{0}})};
        REQUIRE_THROWS_AS(build_game_eraser(bad), std::invalid_argument);
    }
}

TEST_CASE("owner partitions of the choice games") {
    PushdownProcess disj = catalog_process("process:prop45");
    REQUIRE(disj.owners == std::vector<Owner>{Owner::Eve, Owner::Adam, Owner::Adam, Owner::Adam});
    PushdownProcess conj = catalog_process("process:prop46");
    REQUIRE(conj.state_names == disj.state_names);
    REQUIRE(conj.owners == std::vector<Owner>{Owner::Adam, Owner::Eve, Owner::Eve, Owner::Eve});
    REQUIRE(conj.delta == disj.delta);
}