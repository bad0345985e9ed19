#pragma once

#include "pdw/automata.hpp"
#include "pdw/triangle.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace pdw {

enum class Owner { Eve, Adam };

struct ProcKey {
    StateId state;
    Symbol top;

    auto operator<=>(const ProcKey&) const = default;
};

/// Pushdown process: a pushdown automaton without input, with states split
/// between the two players. Configurations owned by a player are the
/// vertices that player moves from.
struct PushdownProcess {
    std::vector<std::string> state_names;
    std::vector<Owner> owners; // aligned with state_names
    std::vector<Symbol> stack_alphabet;
    Symbol bottom;
    std::map<ProcKey, std::vector<TransitionAction>> delta;

    std::optional<StateId> state_id(std::string_view name) const;
    const std::string& state_name(StateId q) const { return state_names.at(q); }
    const std::vector<TransitionAction>& actions(StateId q, Symbol top) const;

    bool operator==(const PushdownProcess&) const = default;
};

std::vector<std::string> validate_process(const PushdownProcess& p);

/// Game = process + winning condition. An infinite play is won by Eve iff
/// the stack is strictly unbounded and the limit of the stack contents
/// belongs to the condition's composed language.
struct GameInstance {
    PushdownProcess process;
    TriangleChain condition;

    bool operator==(const GameInstance&) const = default;
};

/// Process/condition diagnostics plus the alphabet link between them.
std::vector<std::string> validate_game(const GameInstance& g);

/// One successor per applicable action at c. Empty result = dead end.
std::vector<Configuration> successors(const PushdownProcess& p, const Configuration& c);

enum class CycleKind { Stationary, Ascending };

/// Finite representation of an eventually periodic play: from start, the
/// prefix moves reach the cycle entry, and the cycle moves return to the
/// entry state with either the identical stack (Stationary) or the entry
/// stack extended by net with no intermediate dip below the entry height
/// (Ascending).
struct PlayLasso {
    Configuration start;
    std::vector<TransitionAction> prefix_moves;
    std::vector<TransitionAction> cycle_moves;
    CycleKind cycle_kind = CycleKind::Stationary;
    FiniteWord net; // nonempty iff Ascending

    bool operator==(const PlayLasso&) const = default;
};

/// Stack limit of the played lasso: Ascending plays have the infinite limit
/// entry-stack . net^ω, Stationary plays a finite one. Eve wins iff the
/// limit is infinite and belongs to the condition's language.
bool eve_wins_play(const PlayLasso& pl, const TriangleChain& cond, const AnalyzeOptions& opts = {});

enum class Winner { EveWins, AdamWins, Unknown };

struct Verdict3 {
    Winner winner = Winner::Unknown;
    std::string reason; // set when winner == Unknown

    static Verdict3 eve() { return {Winner::EveWins, {}}; }
    static Verdict3 adam() { return {Winner::AdamWins, {}}; }
    static Verdict3 unknown(std::string why) { return {Winner::Unknown, std::move(why)}; }

    bool operator==(const Verdict3&) const = default;
};

struct SolveBounds {
    uint64_t depth = 0;
    size_t height = 0;
};

/// Default exploration bounds for slices of width max_len: every catalog
/// play closes well within them.
SolveBounds default_bounds(size_t max_len);

enum class DeadEndRule {
    MoverLoses,     // the player to move at a dead end loses
    EveLosesFinite, // every finite play loses for Eve (literal reading)
};

struct SolveOptions {
    DeadEndRule dead_end = DeadEndRule::MoverLoses;
    AnalyzeOptions analyze;
    std::vector<PlayLasso>* collect_plays = nullptr; // closed plays, if wanted
};

/// Bounded alternating exploration of the play tree: Eve nodes are OR,
/// Adam nodes are AND. A branch closes into a PlayLasso on a low-point
/// repeat of (state, top) with no intermediate dip below the entry height,
/// which is exact because every configuration after the first move has at
/// most one successor (the solver returns Unknown where that fails, and on
/// any exhausted bound).
Verdict3 solve_bounded(const GameInstance& g, const Configuration& start, const SolveBounds& bounds,
                       const SolveOptions& opts = {});

/// { u over `letters` : |u| ≤ max_len and (q, ⊥·u) is winning for Eve }.
/// letters defaults to the process stack alphabet minus its bottom. Any
/// Unknown verdict aborts the slice with a ResourceLimitError naming the
/// configuration and the exhausted bound.
std::set<FiniteWord> winning_set_slice(const GameInstance& g, StateId q, size_t max_len,
                                       const SolveBounds& bounds, const SolveOptions& opts = {},
                                       const std::vector<Symbol>& letters = {});

} // namespace pdw
