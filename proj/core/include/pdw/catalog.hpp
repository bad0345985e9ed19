#pragma once

#include "pdw/automata.hpp"
#include "pdw/games.hpp"
#include "pdw/triangle.hpp"

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace pdw {

/// Reference language decided by direct counting or pattern logic, with no
/// automaton involved. Finitary languages answer on finite words, the rest
/// on lassos.
struct NamedLanguage {
    std::string name;
    bool finitary = true;
    std::string description;
    std::function<bool(const FiniteWord&)> finite_oracle; // set iff finitary
    std::function<bool(const LassoWord&)> omega_oracle;   // set iff !finitary
};

NamedLanguage oracle_language(const std::string& name);
bool oracle_language(const std::string& name, const FiniteWord& w);
bool oracle_language(const std::string& name, const LassoWord& w);

/// Eraser game for the language of a finite-word recognizer: two-state
/// process pushing # forever over Γ = Σ ∪ {⊥, ←, #}, the backspace
/// transducer as chain element, and a terminal acceptor for ⊥₁·L·#^ω built
/// by simulating the recognizer between ⊥₁ and the first #.
GameInstance build_game_eraser(const ParsedAutomaton& lrec);

GameInstance build_game_prop45();
GameInstance build_game_prop46();

using CatalogObject =
    std::variant<ParsedAutomaton, PushdownProcess, TriangleChain, GameInstance, NamedLanguage>;

/// Named lookup by CLI identifier, e.g. "game:lemma42:anbn", "lang:V",
/// "automaton:prop45:A1". Throws std::invalid_argument on unknown ids.
CatalogObject catalog_lookup(const std::string& id);

std::vector<std::string> catalog_ids();

ParsedAutomaton catalog_automaton(const std::string& id);
PushdownProcess catalog_process(const std::string& id);
TriangleChain catalog_chain(const std::string& id);
GameInstance catalog_game(const std::string& id);

} // namespace pdw
