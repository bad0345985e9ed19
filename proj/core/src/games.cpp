#include "pdw/games.hpp"

#include "pdw/errors.hpp"

#include <algorithm>
#include <cassert>

namespace pdw {

namespace {

bool same_symbol_set(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
    std::set<Symbol> sa(a.begin(), a.end());
    std::set<Symbol> sb(b.begin(), b.end());
    return sa == sb;
}

Configuration apply_action(const Configuration& c, const TransitionAction& act) {
    Configuration out = c;
    out.state = act.target;
    switch (act.kind) {
    case ActKind::Skip:
        break;
    case ActKind::Pop:
        out.stack.pop_back();
        break;
    case ActKind::Push:
        out.stack.push_back(act.symbol);
        break;
    }
    return out;
}

std::string render_config(const PushdownProcess& p, const Configuration& c) {
    std::string out = "(";
    out += c.state < p.state_names.size() ? p.state_names[c.state] : "?";
    out += ", ";
    out += word_to_string(c.stack);
    out += ")";
    return out;
}

} // namespace

std::optional<StateId> PushdownProcess::state_id(std::string_view name) const {
    for (size_t i = 0; i < state_names.size(); ++i)
        if (state_names[i] == name) return static_cast<StateId>(i);
    return std::nullopt;
}

const std::vector<TransitionAction>& PushdownProcess::actions(StateId q, Symbol top) const {
    static const std::vector<TransitionAction> none;
    auto it = delta.find(ProcKey{q, top});
    return it == delta.end() ? none : it->second;
}

std::vector<std::string> validate_process(const PushdownProcess& p) {
    std::vector<std::string> out;
    if (p.state_names.empty()) out.push_back("process has no states");
    for (size_t i = 0; i < p.state_names.size(); ++i)
        for (size_t j = i + 1; j < p.state_names.size(); ++j)
            if (p.state_names[i] == p.state_names[j])
                out.push_back("duplicate state name: " + p.state_names[i]);
    if (p.owners.size() != p.state_names.size())
        out.push_back("owner partition does not cover the state set");
    std::set<Symbol> stack(p.stack_alphabet.begin(), p.stack_alphabet.end());
    if (stack.size() != p.stack_alphabet.size()) out.push_back("duplicate stack symbol");
    if (!stack.count(p.bottom)) out.push_back("bottom symbol is not in the stack alphabet");
    for (const auto& [key, acts] : p.delta) {
        if (key.state >= p.state_names.size()) out.push_back("transition from unknown state");
        if (!stack.count(key.top)) out.push_back("transition on unknown stack symbol " + key.top.name());
        for (const auto& act : acts) {
            if (act.target >= p.state_names.size()) out.push_back("transition to unknown state");
            if (act.kind == ActKind::Pop && key.top == p.bottom)
                out.push_back("pop on the bottom symbol");
            if (act.kind == ActKind::Push) {
                if (!stack.count(act.symbol)) out.push_back("push of unknown symbol " + act.symbol.name());
                if (act.symbol == p.bottom) out.push_back("push of the bottom symbol");
            }
        }
    }
    return out;
}

std::vector<std::string> validate_game(const GameInstance& g) {
    std::vector<std::string> out = validate_process(g.process);
    auto chain = chain_validate(g.condition);
    out.insert(out.end(), chain.begin(), chain.end());
    const std::vector<Symbol>& first_input = g.condition.chain.empty()
                                                 ? g.condition.terminal.pda.input_alphabet
                                                 : g.condition.chain.front().input_alphabet;
    if (!same_symbol_set(first_input, g.process.stack_alphabet))
        out.push_back("condition input alphabet does not match the process stack alphabet");
    return out;
}

std::vector<Configuration> successors(const PushdownProcess& p, const Configuration& c) {
    std::vector<Configuration> out;
    if (c.stack.empty()) return out;
    for (const auto& act : p.actions(c.state, c.stack.back())) out.push_back(apply_action(c, act));
    return out;
}

bool eve_wins_play(const PlayLasso& pl, const TriangleChain& cond, const AnalyzeOptions& opts) {
    if (pl.cycle_kind == CycleKind::Stationary) return false;
    Configuration entry = pl.start;
    for (const auto& m : pl.prefix_moves) entry = apply_action(entry, m);
    return triangle_member(cond, LassoWord{entry.stack, pl.net}, opts);
}

SolveBounds default_bounds(size_t max_len) {
    return SolveBounds{4 * (static_cast<uint64_t>(max_len) + 4), max_len + 8};
}

namespace {

struct PathEntry {
    Configuration cfg;
    size_t succ_count = 0;
};

/// Bounded play-tree explorer with per-branch low-point closure. A branch
/// closes at cur when some ancestor entry has the same (state, top), no
/// configuration after it dips below its height, and deviation is
/// impossible (entries after the first move are forced; the action set
/// depends only on (state, top), so the repeat is forced exactly when the
/// entry was). The frozen prefix below the entry height then makes the
/// continuation replay the cycle verbatim, stationary when the heights
/// match and ascending by the stack suffix above the entry otherwise.
struct BoundedSolver {
    const GameInstance& g;
    SolveBounds bounds;
    const SolveOptions& opts;
    std::vector<PathEntry> path;
    std::vector<TransitionAction> moves;

    std::optional<Verdict3> try_close(const Configuration& cur) {
        size_t min_after = cur.stack.size();
        for (size_t idx = path.size(); idx-- > 0;) {
            const Configuration& entry = path[idx].cfg;
            const size_t entry_h = entry.stack.size();
            const bool forced = idx > 0 || path[idx].succ_count <= 1;
            if (min_after >= entry_h && forced && entry.state == cur.state
                && entry.stack.back() == cur.stack.back()) {
                PlayLasso pl;
                pl.start = path.front().cfg;
                pl.prefix_moves.assign(moves.begin(), moves.begin() + static_cast<long>(idx));
                pl.cycle_moves.assign(moves.begin() + static_cast<long>(idx), moves.end());
                if (cur.stack.size() == entry_h) {
                    assert(cur.stack == entry.stack);
                    pl.cycle_kind = CycleKind::Stationary;
                } else {
                    pl.cycle_kind = CycleKind::Ascending;
                    pl.net.assign(cur.stack.begin() + static_cast<long>(entry_h), cur.stack.end());
                }
                bool eve = eve_wins_play(pl, g.condition, opts.analyze);
                if (opts.collect_plays) opts.collect_plays->push_back(std::move(pl));
                return eve ? Verdict3::eve() : Verdict3::adam();
            }
            min_after = std::min(min_after, entry_h);
        }
        return std::nullopt;
    }

    Verdict3 solve(const Configuration& cur, uint64_t depth_left) {
        if (!path.empty())
            if (auto closed = try_close(cur)) return *closed;
        if (cur.stack.size() > bounds.height)
            return Verdict3::unknown("height bound " + std::to_string(bounds.height) + " exceeded at "
                                     + render_config(g.process, cur));
        const auto& acts = g.process.actions(cur.state, cur.stack.back());
        const Owner owner = g.process.owners[cur.state];
        if (acts.empty()) {
            if (opts.dead_end == DeadEndRule::EveLosesFinite) return Verdict3::adam();
            return owner == Owner::Eve ? Verdict3::adam() : Verdict3::eve();
        }
        if (!path.empty() && acts.size() >= 2)
            return Verdict3::unknown("not eventually deterministic at " + render_config(g.process, cur));
        if (depth_left == 0)
            return Verdict3::unknown("depth bound " + std::to_string(bounds.depth) + " exhausted at "
                                     + render_config(g.process, cur));
        path.push_back(PathEntry{cur, acts.size()});
        std::optional<Verdict3> pending;
        for (const auto& act : acts) {
            moves.push_back(act);
            Verdict3 r = solve(apply_action(cur, act), depth_left - 1);
            moves.pop_back();
            if ((owner == Owner::Eve && r.winner == Winner::EveWins)
                || (owner == Owner::Adam && r.winner == Winner::AdamWins)) {
                pending = r;
                break;
            }
            if (r.winner == Winner::Unknown && (!pending || pending->winner != Winner::Unknown)) pending = r;
            if (!pending) pending = r;
        }
        path.pop_back();
        return *pending;
    }
};

} // namespace

Verdict3 solve_bounded(const GameInstance& g, const Configuration& start, const SolveBounds& bounds,
                       const SolveOptions& opts) {
    if (start.stack.empty()) throw std::invalid_argument("solve_bounded: empty start stack");
    if (start.state >= g.process.state_names.size())
        throw std::invalid_argument("solve_bounded: start state out of range");
    if (g.process.owners.size() != g.process.state_names.size())
        throw std::invalid_argument("solve_bounded: owner partition does not cover the state set");
    BoundedSolver solver{g, bounds, opts, {}, {}};
    return solver.solve(start, bounds.depth);
}

std::set<FiniteWord> winning_set_slice(const GameInstance& g, StateId q, size_t max_len,
                                       const SolveBounds& bounds, const SolveOptions& opts,
                                       const std::vector<Symbol>& letters) {
    std::vector<Symbol> alphabet = letters;
    if (alphabet.empty()) {
        for (Symbol z : g.process.stack_alphabet)
            if (z != g.process.bottom) alphabet.push_back(z);
    }
    std::set<FiniteWord> winning;
    std::vector<FiniteWord> frontier{FiniteWord{}};
    for (size_t len = 0; len <= max_len; ++len) {
        for (const auto& u : frontier) {
            Configuration start{q, FiniteWord{g.process.bottom}};
            start.stack.insert(start.stack.end(), u.begin(), u.end());
            Verdict3 v = solve_bounded(g, start, bounds, opts);
            if (v.winner == Winner::Unknown)
                throw ResourceLimitError("winning_set_slice: unresolved word \"" + word_to_string(u)
                                         + "\": " + v.reason);
            if (v.winner == Winner::EveWins) winning.insert(u);
        }
        if (len == max_len) break;
        std::vector<FiniteWord> next;
        next.reserve(frontier.size() * alphabet.size());
        for (const auto& u : frontier)
            for (Symbol z : alphabet) {
                FiniteWord w = u;
                w.push_back(z);
                next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return winning;
}

} // namespace pdw
