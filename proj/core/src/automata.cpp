#include "pdw/automata.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace pdw {

TransitionAction act_skip(StateId target) { return {ActKind::Skip, target, Symbol::intern("-skip-")}; }
TransitionAction act_pop(StateId target) { return {ActKind::Pop, target, Symbol::intern("-pop-")}; }
TransitionAction act_push(StateId target, Symbol s) { return {ActKind::Push, target, s}; }

std::optional<StateId> Pda::state_id(std::string_view name) const {
    for (size_t i = 0; i < state_names.size(); ++i)
        if (state_names[i] == name) return static_cast<StateId>(i);
    return std::nullopt;
}

const std::vector<TransitionAction>& Pda::actions(StateId q, std::optional<Symbol> input,
                                                  Symbol top) const {
    static const std::vector<TransitionAction> empty;
    auto it = delta.find(DeltaKey{q, input, top});
    return it == delta.end() ? empty : it->second;
}

namespace {

std::string key_to_string(const Pda& p, const DeltaKey& k) {
    std::ostringstream os;
    os << "(";
    if (k.state < p.state_names.size())
        os << p.state_names[k.state];
    else
        os << "state#" << k.state;
    os << ", " << (k.input ? k.input->name() : "_") << ", " << k.top.name() << ")";
    return os.str();
}

bool contains(const std::vector<Symbol>& v, Symbol s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

} // namespace

std::vector<std::string> validate_pda(const Pda& p) {
    std::vector<std::string> out;
    if (p.state_names.empty()) out.push_back("automaton has no states");
    for (size_t i = 0; i < p.state_names.size(); ++i)
        for (size_t j = i + 1; j < p.state_names.size(); ++j)
            if (p.state_names[i] == p.state_names[j])
                out.push_back("duplicate state name: " + p.state_names[i]);
    std::set<Symbol> input_set(p.input_alphabet.begin(), p.input_alphabet.end());
    if (input_set.size() != p.input_alphabet.size()) out.push_back("duplicate input letter");
    std::set<Symbol> stack_set(p.stack_alphabet.begin(), p.stack_alphabet.end());
    if (stack_set.size() != p.stack_alphabet.size()) out.push_back("duplicate stack symbol");
    if (p.initial >= p.state_names.size()) out.push_back("initial state index out of range");
    if (!contains(p.stack_alphabet, p.bottom))
        out.push_back("bottom symbol " + p.bottom.name() + " not in the stack alphabet");
    for (Symbol s : p.input_alphabet)
        if (s == p.bottom)
            out.push_back("bottom symbol may not double as an input letter: " + s.name());
    for (const auto& [key, actions] : p.delta) {
        std::string at = key_to_string(p, key);
        if (key.state >= p.state_names.size())
            out.push_back("transition from unknown state at " + at);
        if (key.input && !contains(p.input_alphabet, *key.input))
            out.push_back("transition on letter outside the input alphabet at " + at);
        if (!contains(p.stack_alphabet, key.top))
            out.push_back("transition on stack symbol outside the stack alphabet at " + at);
        for (const TransitionAction& a : actions) {
            if (a.target >= p.state_names.size())
                out.push_back("transition to unknown state at " + at);
            if (a.kind == ActKind::Pop && key.top == p.bottom)
                out.push_back("bottom symbol popped at " + at);
            if (a.kind == ActKind::Push) {
                if (!contains(p.stack_alphabet, a.symbol))
                    out.push_back("pushed symbol " + a.symbol.name() +
                                  " outside the stack alphabet at " + at);
                if (a.symbol == p.bottom)
                    out.push_back("bottom symbol pushed at " + at);
            }
        }
    }
    return out;
}

PdaClass classify_pda(const Pda& p) {
    PdaClass c{true, true};
    for (const auto& [key, actions] : p.delta) {
        if (actions.empty()) continue;
        if (actions.size() > 1) c.deterministic = false;
        if (!key.input) {
            c.real_time = false;
            // An enabled no-letter move forbids letter moves on (state, top).
            for (Symbol a : p.input_alphabet) {
                if (!p.actions(key.state, a, key.top).empty()) {
                    c.deterministic = false;
                    break;
                }
            }
        }
    }
    return c;
}

std::vector<Configuration> step_config(const Pda& p, const Configuration& c,
                                       std::optional<Symbol> input) {
    std::vector<Configuration> out;
    if (c.stack.empty()) return out;
    for (const TransitionAction& a : p.actions(c.state, input, c.stack.back())) {
        Configuration next{a.target, c.stack};
        switch (a.kind) {
        case ActKind::Skip: break;
        case ActKind::Pop: next.stack.pop_back(); break;
        case ActKind::Push: next.stack.push_back(a.symbol); break;
        }
        out.push_back(std::move(next));
    }
    return out;
}

namespace {

/// All configurations reachable from c by no-letter moves alone, c included.
/// Cuts on revisited configurations and on a net growth cap so that cyclic
/// or pumping no-letter behavior cannot run away.
std::set<Configuration> lambda_closure(const Pda& p, const Configuration& c) {
    size_t growth_cap = c.stack.size() + p.state_names.size() * p.stack_alphabet.size() + 1;
    std::set<Configuration> seen{c};
    std::deque<Configuration> work{c};
    while (!work.empty()) {
        Configuration cur = std::move(work.front());
        work.pop_front();
        for (Configuration& next : step_config(p, cur, std::nullopt)) {
            if (next.stack.size() > growth_cap) continue;
            if (seen.insert(next).second) work.push_back(std::move(next));
        }
    }
    return seen;
}

} // namespace

bool accepts_finite(const Pda& p, const std::set<StateId>& finals, const FiniteWord& x) {
    std::set<Configuration> frontier{Configuration{p.initial, {p.bottom}}};
    for (Symbol a : x) {
        std::set<Configuration> next;
        for (const Configuration& c : frontier)
            for (const Configuration& d : lambda_closure(p, c))
                for (Configuration& e : step_config(p, d, a))
                    next.insert(std::move(e));
        frontier = std::move(next);
        if (frontier.empty()) return false;
    }
    for (const Configuration& c : frontier)
        for (const Configuration& d : lambda_closure(p, c))
            if (finals.count(d.state)) return true;
    return false;
}

std::string acceptance_kind_name(const AcceptanceCondition& c) {
    if (std::holds_alternative<FinalStates>(c)) return "final";
    if (std::holds_alternative<Buchi>(c)) return "buchi";
    if (std::holds_alternative<Muller>(c)) return "muller";
    return "parity";
}

} // namespace pdw
