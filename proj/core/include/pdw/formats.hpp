#pragma once

#include "pdw/automata.hpp"
#include "pdw/games.hpp"
#include "pdw/triangle.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace pdw {

// Word and lasso literals: space-separated symbol tokens, "λ" for the empty
// word, cycle in parentheses, e.g. "⊥ a b ( # )".
std::string print_word(const FiniteWord& w);
std::string print_lasso(const LassoWord& w);
FiniteWord parse_word(const std::string& text);
LassoWord parse_lasso(const std::string& text);

// Line-based automaton format: header lines states:/input:/stack:/bottom:/
// initial:/acceptance: followed by transition lines
// "q , a , Z -> push(p, X)" with "_" denoting λ. The acceptance line is
// optional (chain elements carry none).
std::string print_automaton(const ParsedAutomaton& a);
ParsedAutomaton parse_automaton(const std::string& text);

// Process format: automaton format minus input:/initial:/acceptance:, plus
// one "owner: q -> Eve|Adam" line per state; transition lines drop the
// input column. A game file is a process plus a "condition: <ref>" line.
std::string print_process(const PushdownProcess& p);
PushdownProcess parse_process(const std::string& text);
std::string print_game(const GameInstance& g, const std::string& condition_ref);
GameInstance parse_game(const std::string& text, const std::filesystem::path& base_dir);

// Chain files list "element: <ref>" lines in order, one "terminal: <ref>",
// and "class: realtime|lambda"; refs are catalog ids or paths relative to
// the chain file.
struct ChainFiles {
    std::filesystem::path chain_file;
    std::vector<std::filesystem::path> parts;
};
ChainFiles write_chain(const TriangleChain& c, const std::filesystem::path& dir,
                       const std::string& stem);
TriangleChain parse_chain(const std::string& text, const std::filesystem::path& base_dir);

// Reference resolution: catalog ids (optionally with a .chain/.process
// suffix on game ids) resolve from the catalog, anything else is read as a
// file path.
ParsedAutomaton load_automaton(const std::string& ref);
PushdownProcess load_process(const std::string& ref);
TriangleChain load_chain(const std::string& ref);
GameInstance load_game(const std::string& ref);

} // namespace pdw
