#pragma once

#include "pdw/words.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pdw {

using StateId = uint32_t;

enum class ActKind { Skip, Pop, Push };

/// One entry of a transition set: change state and leave the top alone
/// (Skip), remove the top (Pop), or write one symbol above it (Push).
struct TransitionAction {
    ActKind kind;
    StateId target;
    Symbol symbol; // pushed symbol; ignored unless kind == Push

    bool operator==(const TransitionAction&) const = default;
    auto operator<=>(const TransitionAction&) const = default;
};

TransitionAction act_skip(StateId target);
TransitionAction act_pop(StateId target);
TransitionAction act_push(StateId target, Symbol s);

/// Key of the transition map. input == nullopt is a move that consumes no
/// letter.
struct DeltaKey {
    StateId state;
    std::optional<Symbol> input;
    Symbol top;

    auto operator<=>(const DeltaKey&) const = default;
};

/// Pushdown automaton. The stack grows to the right: back() is the top.
/// The bottom symbol sits at index 0 of every reachable stack; it is never
/// popped and never pushed.
struct Pda {
    std::vector<std::string> state_names;
    std::vector<Symbol> input_alphabet;
    std::vector<Symbol> stack_alphabet;
    Symbol bottom;
    StateId initial = 0;
    std::map<DeltaKey, std::vector<TransitionAction>> delta;

    std::optional<StateId> state_id(std::string_view name) const;
    const std::string& state_name(StateId q) const { return state_names.at(q); }
    const std::vector<TransitionAction>& actions(StateId q, std::optional<Symbol> input,
                                                 Symbol top) const;

    bool operator==(const Pda&) const = default;
};

struct FinalStates {
    std::set<StateId> states;
    bool operator==(const FinalStates&) const = default;
};
struct Buchi {
    std::set<StateId> states;
    bool operator==(const Buchi&) const = default;
};
struct Muller {
    std::set<std::set<StateId>> table;
    bool operator==(const Muller&) const = default;
};
struct Parity {
    std::map<StateId, unsigned> colors; // total on the automaton's states
    bool operator==(const Parity&) const = default;
};

using AcceptanceCondition = std::variant<FinalStates, Buchi, Muller, Parity>;

/// Automaton bundled with the acceptance condition it was defined with
/// (files and chain terminals carry both).
struct ParsedAutomaton {
    Pda pda;
    std::optional<AcceptanceCondition> acceptance;

    bool operator==(const ParsedAutomaton&) const = default;
};

struct Configuration {
    StateId state;
    FiniteWord stack; // index 0 = bottom, back() = top

    bool operator==(const Configuration&) const = default;
    auto operator<=>(const Configuration&) const = default;
};

/// Every invariant violation, one message per finding. Empty means valid.
std::vector<std::string> validate_pda(const Pda& p);

struct PdaClass {
    bool deterministic;
    bool real_time;
};

/// deterministic: every transition set has at most one action, and a key
/// with an enabled no-letter move forbids letter moves on the same
/// (state, top). real_time: no no-letter moves at all.
PdaClass classify_pda(const Pda& p);

/// All successor configurations of c under one move consuming input (which
/// may be nullopt for a no-letter move).
std::vector<Configuration> step_config(const Pda& p, const Configuration& c,
                                       std::optional<Symbol> input);

/// Acceptance by final states on a finite word: true iff some run consuming
/// exactly x ends in (or can reach by trailing no-letter moves) a state in
/// finals. No-letter exploration between letters is cut when a configuration
/// repeats and capped at a net stack growth of |Q|*|Γ|+1.
bool accepts_finite(const Pda& p, const std::set<StateId>& finals, const FiniteWord& x);

std::string acceptance_kind_name(const AcceptanceCondition& c);

} // namespace pdw
