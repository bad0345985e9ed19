#include "cli.hpp"

#include "pdw/catalog.hpp"
#include "pdw/formats.hpp"
#include "pdw/omega_runs.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace pdw;
using cli::CommandResult;
using cli::run_command;
namespace fs = std::filesystem;

namespace {

CommandResult run(std::vector<std::string> args) { return run_command(args); }

bool has(const CommandResult& r, const std::string& needle) {
    return r.report.find(needle) != std::string::npos;
}

std::string value_of(const CommandResult& r, const std::string& key) {
    std::string needle = "\n" + key + "=";
    size_t pos = r.report.find(needle);
    REQUIRE(pos != std::string::npos);
    size_t start = pos + needle.size();
    size_t end = r.report.find('\n', start);
    return r.report.substr(start, end - start);
}

std::string body_of(const CommandResult& r) {
    size_t pos = r.report.find("---\n");
    REQUIRE(pos != std::string::npos);
    return r.report.substr(0, pos);
}

fs::path fresh_dir(const char* leaf) {
    fs::path dir = fs::temp_directory_path() / leaf;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("usage errors") {
    REQUIRE(run({}).exit_code == 2);
    REQUIRE(run({"frobnicate"}).exit_code == 2);
    REQUIRE(run({"validate"}).exit_code == 2);
    REQUIRE(run({"suite", "--criterion", "0"}).exit_code == 2);
    REQUIRE(run({"catalog", "export", "chain:prop45"}).exit_code == 2);
}

TEST_CASE("validate") {
    CommandResult ok = run({"validate", "automaton:lemma42:Lrec"});
    REQUIRE(ok.exit_code == 0);
    REQUIRE(value_of(ok, "valid") == "true");
    REQUIRE(value_of(ok, "kind") == "automaton");

    for (const std::string& id : catalog_ids()) {
        CommandResult r = run({"validate", id});
        INFO(id << "\n" << r.report);
        if (id.rfind("lang:", 0) == 0)
            REQUIRE(r.exit_code == 2);
        else
            REQUIRE(r.exit_code == 0);
    }

    SECTION("a file that moves the bottom symbol fails") {
        fs::path dir = fresh_dir("pdw_test_cli_validate");
        fs::path file = dir / "bad.pda";
        {
            std::ofstream out(file);
            out << "states: s\n"
                   "input: a\n"
                   "stack: Z\n"
                   "bottom: Z\n"
                   "initial: s\n"
                   "s , a , Z -> pop(s)\n";
        }
        CommandResult r = run({"validate", file.string()});
        REQUIRE(r.exit_code == 2);
        REQUIRE(value_of(r, "valid") == "false");
        REQUIRE(value_of(r, "issues") != "0");
        fs::remove_all(dir);
    }
}

TEST_CASE("classify") {
    CommandResult r = run({"classify", "automaton:lemma42:Lrec"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(value_of(r, "deterministic") == "true");
    REQUIRE(value_of(r, "realTime") == "true");
    REQUIRE(value_of(r, "acceptance") == "final");
    REQUIRE(value_of(r, "states") == "4");
}

TEST_CASE("accepts") {
    REQUIRE(run({"accepts", "automaton:lemma42:Lrec", "a b"}).exit_code == 0);
    CommandResult yes = run({"accepts", "automaton:lemma42:Lrec", "a a b b"});
    REQUIRE(value_of(yes, "verdict") == "true");
    CommandResult no = run({"accepts", "automaton:lemma42:Lrec", "a a b"});
    REQUIRE(no.exit_code == 1);
    REQUIRE(value_of(no, "verdict") == "false");

    REQUIRE(run({"accepts", "automaton:L1", "a b c ( d )"}).exit_code == 0);
    REQUIRE(run({"accepts", "automaton:L1", "a a b c ( d )"}).exit_code == 1);
    // chain elements carry no acceptance condition
    REQUIRE(run({"accepts", "automaton:lemma42:A1", "⊥ ( # )"}).exit_code == 2);
}

TEST_CASE("limit") {
    CommandResult r = run({"limit", "automaton:prop45:A1", "⊥ a b c ( # )"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(value_of(r, "completeness") == "complete");
    REQUIRE(value_of(r, "strictlyUnbounded") == "true");
    REQUIRE(value_of(r, "limit") == "⊥₁ a ( # )");

    CommandResult flat = run({"limit", "automaton:prop45:A1", "⊥ a b b c ( # )"});
    REQUIRE(flat.exit_code == 0);
    REQUIRE(value_of(flat, "strictlyUnbounded") == "false");

    CommandResult colored = run({"limit", "automaton:lemma42:A2", "⊥₁ a b ( # )"});
    REQUIRE(colored.exit_code == 0);
    REQUIRE(value_of(colored, "minInfColor") == "0");
}

TEST_CASE("triangle membership") {
    CommandResult in = run({"triangle", "member", "game:lemma42:anbn.chain", "⊥ a b ( # )"});
    REQUIRE(in.exit_code == 0);
    REQUIRE(value_of(in, "verdict") == "true");
    CommandResult out = run({"triangle", "member", "chain:lemma42:anbn", "⊥ b a ( # )"});
    REQUIRE(out.exit_code == 1);
    REQUIRE(value_of(out, "verdict") == "false");
}

TEST_CASE("triangle complement") {
    fs::path dir = fresh_dir("pdw_test_cli_complement");
    CommandResult r = run({"triangle", "complement", "chain:lemma42:anbn", "-o", dir.string()});
    REQUIRE(r.exit_code == 0);
    TriangleChain comp = load_chain(value_of(r, "chainFile"));
    REQUIRE(chain_validate(comp).empty());
    REQUIRE_FALSE(triangle_member(comp, parse_lasso("⊥ a b ( # )")));
    REQUIRE(triangle_member(comp, parse_lasso("⊥ b a ( # )")));
    fs::remove_all(dir);
}

TEST_CASE("game solve") {
    CommandResult eve = run({"game", "solve", "game:prop45", "q ⊥ a b c"});
    REQUIRE(eve.exit_code == 0);
    REQUIRE(value_of(eve, "winner") == "eve");
    CommandResult adam = run({"game", "solve", "game:prop45", "q ⊥ a b b c"});
    REQUIRE(adam.exit_code == 1);
    REQUIRE(value_of(adam, "winner") == "adam");
    REQUIRE(run({"game", "solve", "game:prop45", "z ⊥"}).exit_code == 2);
}

TEST_CASE("game slice") {
    CommandResult r = run({"game", "slice", "game:lemma42:anbn", "q", "2", "a", "b"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(value_of(r, "count") == "1");
    REQUIRE(value_of(r, "maxLen") == "2");
    REQUIRE(has(r, "a b"));
}

TEST_CASE("catalog listing and export") {
    CommandResult list = run({"catalog", "list"});
    REQUIRE(list.exit_code == 0);
    REQUIRE(has(list, "automaton:lemma42:Lrec"));
    REQUIRE(value_of(list, "count") == std::to_string(catalog_ids().size()));

    CommandResult autom = run({"catalog", "export", "automaton:L1"});
    REQUIRE(autom.exit_code == 0);
    REQUIRE(parse_automaton(body_of(autom)) == catalog_automaton("automaton:L1"));

    CommandResult game = run({"catalog", "export", "game:prop45"});
    REQUIRE(game.exit_code == 0);
    REQUIRE(parse_game(body_of(game), ".") == catalog_game("game:prop45"));

    CommandResult lang = run({"catalog", "export", "lang:V"});
    REQUIRE(lang.exit_code == 0);
    REQUIRE(value_of(lang, "kind") == "language");
    REQUIRE(value_of(lang, "finitary") == "true");

    fs::path dir = fresh_dir("pdw_test_cli_export");
    CommandResult chain = run({"catalog", "export", "chain:prop45", "-o", dir.string()});
    REQUIRE(chain.exit_code == 0);
    REQUIRE(load_chain(value_of(chain, "chainFile")) == catalog_chain("chain:prop45"));
    fs::remove_all(dir);
}

TEST_CASE("step ceiling override") {
    uint64_t saved = default_step_ceiling();

    setenv("WORKBENCH_STEP_CEILING", "1", 1);
    CommandResult starved = run({"limit", "automaton:lemma42:A1", "⊥ a b ( # )"});
    REQUIRE(starved.exit_code == 3);
    REQUIRE(has(starved, "error="));
    unsetenv("WORKBENCH_STEP_CEILING");
    set_default_step_ceiling(saved);

    setenv("WORKBENCH_STEP_CEILING", "12x", 1);
    REQUIRE(run({"limit", "automaton:lemma42:A1", "⊥ a b ( # )"}).exit_code == 2);
    unsetenv("WORKBENCH_STEP_CEILING");
    set_default_step_ceiling(saved);

    REQUIRE(run({"limit", "automaton:lemma42:A1", "⊥ a b ( # )"}).exit_code == 0);
}