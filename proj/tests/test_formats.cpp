#include "pdw/formats.hpp"

#include "pdw/catalog.hpp"
#include "pdw/errors.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

using namespace pdw;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const char* leaf) {
    fs::path dir = fs::temp_directory_path() / leaf;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("word literals") {
    REQUIRE(print_word(parse_word("a b a")) == "a b a");
    REQUIRE(parse_word("λ").empty());
    REQUIRE(print_word({}) == "λ");
    REQUIRE(parse_word("⊥ a ←") == FiniteWord{sym("⊥"), sym("a"), sym("←")});
    REQUIRE_THROWS_AS(parse_word(""), ParseError);
    REQUIRE_THROWS_AS(parse_word("a ( b )"), ParseError);
}

TEST_CASE("lasso literals") {
    REQUIRE(print_lasso(parse_lasso("⊥ a b ( # )")) == "⊥ a b ( # )");
    LassoWord spokeless = parse_lasso("( a b )");
    REQUIRE(spokeless.spoke.empty());
    REQUIRE(spokeless.cycle == FiniteWord{sym("a"), sym("b")});
    REQUIRE(print_lasso(spokeless) == "( a b )");

    REQUIRE_THROWS_AS(parse_lasso("a b"), ParseError);
    REQUIRE_THROWS_AS(parse_lasso("a ( )"), ParseError);
    REQUIRE_THROWS_AS(parse_lasso("a ( b ) c"), ParseError);
    REQUIRE_THROWS_AS(parse_lasso("a ) ( b )"), ParseError);
    REQUIRE_THROWS_AS(parse_lasso("a ( b ( c ) )"), ParseError);
}

TEST_CASE("catalog automata round-trip through the text format") {
    for (const char* id : {"automaton:lemma42:A1", "automaton:lemma42:A2",
                           "automaton:lemma42:Lrec", "automaton:prop45:A1",
                           "automaton:prop45:A2", "automaton:L1", "automaton:L2",
                           "automaton:L3", "automaton:L4"}) {
        INFO(id);
        ParsedAutomaton a = catalog_automaton(id);
        REQUIRE(parse_automaton(print_automaton(a)) == a);
    }
}

TEST_CASE("no-letter transitions are spelled with an underscore") {
    const char* text =
        "states: s t\n"
        "input: a\n"
        "stack: Z X\n"
        "bottom: Z\n"
        "initial: s\n"
        "acceptance: buchi t\n"
        "s , a , Z -> push(t, X)\n"
        "t , _ , X -> pop(s)\n";
    ParsedAutomaton a = parse_automaton(text);
    REQUIRE(a.pda.delta.count(DeltaKey{1, std::nullopt, sym("X")}) == 1);
    REQUIRE(a.acceptance == AcceptanceCondition(Buchi{{1}}));
    std::string printed = print_automaton(a);
    REQUIRE(printed.find(" _ ") != std::string::npos);
    REQUIRE(parse_automaton(printed) == a);
}

TEST_CASE("muller and parity acceptance survive printing") {
    Pda p;
    p.state_names = {"s", "t"};
    p.input_alphabet = {sym("a")};
    p.stack_alphabet = {sym("Z")};
    p.bottom = sym("Z");
    p.initial = 0;
    p.delta[{0, sym("a"), sym("Z")}] = {act_skip(1)};
    p.delta[{1, sym("a"), sym("Z")}] = {act_skip(0)};

    ParsedAutomaton muller{p, AcceptanceCondition(Muller{{{0, 1}, {0}}})};
    REQUIRE(parse_automaton(print_automaton(muller)) == muller);

    ParsedAutomaton parity{p, AcceptanceCondition(Parity{{{0, 0}, {1, 3}}})};
    REQUIRE(parse_automaton(print_automaton(parity)) == parity);
}

TEST_CASE("parse failures name the offending line") {
    const char* text =
        "states: s\n"
        "input: a\n"
        "stack: Z\n"
        "bottom: Z\n"
        "initial: s\n"
        "s , a , Z -> fling(s)\n";
    REQUIRE_THROWS_AS(parse_automaton(text), ParseError);
    REQUIRE_THROWS_WITH(parse_automaton(text),
                        Catch::Matchers::ContainsSubstring("line 6"));
}

TEST_CASE("missing header lines are reported") {
    REQUIRE_THROWS_WITH(parse_automaton("states: s\ninput: a\n"),
                        Catch::Matchers::ContainsSubstring("stack"));
}

TEST_CASE("catalog processes round-trip through the text format") {
    for (const char* id : {"process:lemma42", "process:prop45", "process:prop46"}) {
        INFO(id);
        PushdownProcess p = catalog_process(id);
        REQUIRE(parse_process(print_process(p)) == p);
    }
}

TEST_CASE("games round-trip with a catalog condition reference") {
    GameInstance g = catalog_game("game:prop45");
    std::string text = print_game(g, "chain:prop45");
    REQUIRE(parse_game(text, ".") == g);

    GameInstance era = catalog_game("game:lemma42:anbn");
    REQUIRE(parse_game(print_game(era, "chain:lemma42:anbn"), ".") == era);
}

TEST_CASE("chain files round-trip through a directory") {
    fs::path dir = fresh_dir("pdw_test_formats_chain");
    TriangleChain c = catalog_chain("chain:lemma42:anbn");
    ChainFiles files = write_chain(c, dir, "anbn");
    REQUIRE(fs::exists(files.chain_file));
    REQUIRE(files.parts.size() == 2);
    for (const fs::path& part : files.parts) REQUIRE(fs::exists(part));
    REQUIRE(load_chain(files.chain_file.string()) == c);
    fs::remove_all(dir);
}

TEST_CASE("references resolve to the catalog or the filesystem") {
    REQUIRE(load_automaton("automaton:L1") == catalog_automaton("automaton:L1"));

    fs::path dir = fresh_dir("pdw_test_formats_refs");
    fs::path file = dir / "l1.pda";
    {
        std::ofstream out(file);
        out << print_automaton(catalog_automaton("automaton:L1"));
    }
    REQUIRE(load_automaton(file.string()) == catalog_automaton("automaton:L1"));
    fs::remove_all(dir);

    REQUIRE(load_chain("game:lemma42:anbn.chain") == catalog_chain("chain:lemma42:anbn"));
    REQUIRE(load_process("game:prop45.process") == catalog_process("process:prop45"));
    REQUIRE_THROWS_AS(load_chain("game:prop45"), ParseError);
    REQUIRE_THROWS_AS(load_automaton("no/such/file.pda"), ParseError);
}