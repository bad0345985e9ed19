#include "pdw/triangle.hpp"

#include "pdw/detail/low_points.hpp"
#include "pdw/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pdw {

namespace {

bool same_symbol_set(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
    return SymbolSet(a.begin(), a.end()) == SymbolSet(b.begin(), b.end());
}

void add_act(Pda& p, StateId q, std::optional<Symbol> input, Symbol top, TransitionAction act) {
    p.delta[DeltaKey{q, input, top}].push_back(act);
}

/// Marker appended to a letter to form its primed copy. One apostrophe
/// longer than any trailing apostrophe run in the alphabet, so priming a
/// letter can never collide with a letter that already exists. Nested
/// constructions (pad of a padded automaton) therefore stay deterministic.
std::string marker_for(const std::vector<Symbol>& alphabet) {
    size_t longest = 0;
    for (Symbol s : alphabet) {
        const std::string& n = s.name();
        size_t run = 0;
        while (run < n.size() && n[n.size() - 1 - run] == '\'') ++run;
        longest = std::max(longest, run);
    }
    return std::string(longest + 1, '\'');
}

Symbol prime_with(Symbol s, const std::string& marker) {
    return Symbol::intern(s.name() + marker);
}

} // namespace

std::vector<std::string> chain_validate(const TriangleChain& c) {
    std::vector<std::string> out;
    auto check_automaton = [&](const Pda& p, const std::string& label) {
        for (std::string& d : validate_pda(p)) out.push_back(label + ": " + d);
        PdaClass cls = classify_pda(p);
        if (!cls.deterministic) out.push_back(label + ": not deterministic");
        if (c.real_time_class && !cls.real_time)
            out.push_back(label + ": not real-time, but the chain claims the real-time class");
    };
    for (size_t i = 0; i < c.chain.size(); ++i)
        check_automaton(c.chain[i], "element " + std::to_string(i + 1));
    check_automaton(c.terminal.pda, "terminal");

    for (size_t i = 0; i + 1 < c.chain.size(); ++i) {
        if (!same_symbol_set(c.chain[i + 1].input_alphabet, c.chain[i].stack_alphabet))
            out.push_back("element " + std::to_string(i + 2) +
                          ": input alphabet differs from the stack alphabet of element " +
                          std::to_string(i + 1));
    }
    if (!c.chain.empty() &&
        !same_symbol_set(c.terminal.pda.input_alphabet, c.chain.back().stack_alphabet))
        out.push_back("terminal: input alphabet differs from the stack alphabet of the last element");

    if (std::holds_alternative<FinalStates>(c.terminal.condition))
        out.push_back("terminal: final-state acceptance is undefined on infinite inputs");
    if (const auto* par = std::get_if<Parity>(&c.terminal.condition)) {
        for (StateId q = 0; q < c.terminal.pda.state_names.size(); ++q)
            if (!par->colors.count(q))
                out.push_back("terminal: state " + c.terminal.pda.state_name(q) + " has no color");
    }
    return out;
}

namespace {

bool member_from(const TriangleChain& c, size_t i, const LassoWord& w, const AnalyzeOptions& opts) {
    if (i == c.chain.size())
        return accepts_omega(c.terminal.pda, c.terminal.condition, w, opts);
    RunAnalysis r = analyze_run(c.chain[i], w, opts);
    if (r.completeness != Completeness::Complete || !r.strictly_unbounded) return false;
    return member_from(c, i + 1, r.stack_limit.lasso(), opts);
}

} // namespace

bool triangle_member(const TriangleChain& c, const LassoWord& w, const AnalyzeOptions& opts) {
    return member_from(c, 0, w, opts);
}

namespace {

struct SegPoint {
    StateId state;
    FiniteWord stack;
    size_t consumed;
};

/// Deterministic trace from the height-1 configuration (q, a) consuming σ.
/// The entry symbol is a floor: popping it ends the trace. No-letter
/// stretches are cut once a low-point key repeats; by the frozen-prefix
/// argument every configuration of height one or two that the run will ever
/// visit is already among the recorded points then, which is all the
/// segment conditions ever inspect.
std::vector<SegPoint> seg_trace(const Pda& p, StateId q, Symbol a, const FiniteWord& sigma,
                                const AnalyzeOptions& opts) {
    const uint64_t ceiling = opts.step_ceiling ? opts.step_ceiling : default_step_ceiling();
    std::vector<SegPoint> points;
    Configuration cfg{q, {a}};
    size_t consumed = 0;
    points.push_back(SegPoint{cfg.state, cfg.stack, consumed});

    detail::LowPointStore lambda_lows;
    lambda_lows.match_or_insert(0, detail::pack_key(cfg.state, 0, cfg.stack.back().id()), 1, 0);

    for (uint64_t t = 0;; ++t) {
        if (t >= ceiling)
            throw ResourceLimitError("segment trace exceeded the step ceiling of " +
                                     std::to_string(ceiling) + " moves");
        const Symbol top = cfg.stack.back();
        const auto& lambda_acts = p.actions(cfg.state, std::nullopt, top);
        bool is_lambda = !lambda_acts.empty();
        const TransitionAction* move = nullptr;
        if (is_lambda) {
            move = &lambda_acts.front();
        } else {
            if (consumed == sigma.size()) return points;
            const auto& acts = p.actions(cfg.state, sigma[consumed], top);
            if (acts.empty()) return points;
            move = &acts.front();
        }

        switch (move->kind) {
        case ActKind::Skip: break;
        case ActKind::Pop:
            if (cfg.stack.size() == 1) return points; // would pop the floor
            cfg.stack.pop_back();
            break;
        case ActKind::Push: cfg.stack.push_back(move->symbol); break;
        }
        cfg.state = move->target;
        if (!is_lambda) ++consumed;
        points.push_back(SegPoint{cfg.state, cfg.stack, consumed});

        uint64_t key = detail::pack_key(cfg.state, 0, cfg.stack.back().id());
        if (is_lambda) {
            if (lambda_lows.match_or_insert(t + 1, key, cfg.stack.size(), consumed)) return points;
        } else {
            lambda_lows.clear();
            lambda_lows.match_or_insert(t + 1, key, cfg.stack.size(), consumed);
        }
    }
}

bool stack_is(const FiniteWord& stack, Symbol a) { return stack.size() == 1 && stack[0] == a; }

bool stack_is(const FiniteWord& stack, Symbol a, Symbol b) {
    return stack.size() == 2 && stack[0] == a && stack[1] == b;
}

} // namespace

bool seg_member_L(const Pda& p, StateId q, StateId q_to, Symbol a, Symbol b, const FiniteWord& sigma,
                  const AnalyzeOptions& opts) {
    auto points = seg_trace(p, q, a, sigma, opts);
    for (const SegPoint& pt : points)
        if (pt.consumed == sigma.size() && pt.state == q_to && stack_is(pt.stack, a, b)) return true;
    return false;
}

SegDetail seg_member_U_detail(const Pda& p, StateId q, StateId q_to, Symbol a, Symbol b,
                              const FiniteWord& sigma, const AnalyzeOptions& opts) {
    auto points = seg_trace(p, q, a, sigma, opts);
    SegDetail d;

    for (const SegPoint& pt : points)
        if (pt.consumed == sigma.size() && pt.state == q_to && stack_is(pt.stack, a, b)) {
            d.cond_a = true;
            break;
        }

    d.cond_b = true;
    for (size_t i = 0; i < points.size() && d.cond_b; ++i) {
        if (!(points[i].consumed < sigma.size() && stack_is(points[i].stack, a, b))) continue;
        bool returned = false;
        for (size_t j = i + 1; j < points.size(); ++j)
            if (stack_is(points[j].stack, a)) {
                returned = true;
                break;
            }
        if (!returned) d.cond_b = false;
    }

    d.cond_c = true;
    for (size_t i = 0; i < points.size() && d.cond_c; ++i) {
        const SegPoint& pt = points[i];
        if (!(pt.consumed == sigma.size() && pt.state != q_to && stack_is(pt.stack, a, b))) continue;
        bool excused = false;
        for (size_t j = 0; j < i && !excused; ++j)
            if (points[j].consumed == sigma.size() && points[j].state == q_to &&
                stack_is(points[j].stack, a, b))
                excused = true;
        for (size_t j = i + 1; j < points.size() && !excused; ++j) {
            if (!stack_is(points[j].stack, a)) continue;
            for (size_t k = j + 1; k < points.size(); ++k)
                if (points[k].state == q_to && stack_is(points[k].stack, a, b)) {
                    excused = true;
                    break;
                }
        }
        if (!excused) d.cond_c = false;
    }

    d.member = d.cond_a && d.cond_b && d.cond_c;
    d.c_decisive = d.cond_a && d.cond_b && !d.cond_c;
    return d;
}

bool seg_member_U(const Pda& p, StateId q, StateId q_to, Symbol a, Symbol b, const FiniteWord& sigma,
                  const AnalyzeOptions& opts) {
    return seg_member_U_detail(p, q, q_to, a, b, sigma, opts).member;
}

namespace {

struct RecordedRun {
    std::vector<StateId> states;     // states[t] = state at time t
    std::vector<FiniteWord> stacks;  // stacks[t] = stack at time t
    std::vector<size_t> consumed;    // letters consumed before time t
};

RecordedRun record_run(const Pda& p, const LassoWord& w, uint64_t total_steps) {
    RecordedRun rec;
    Configuration cfg{p.initial, {p.bottom}};
    size_t consumed = 0;
    rec.states.push_back(cfg.state);
    rec.stacks.push_back(cfg.stack);
    rec.consumed.push_back(consumed);
    for (uint64_t t = 0; t < total_steps; ++t) {
        const Symbol top = cfg.stack.back();
        const auto& lambda_acts = p.actions(cfg.state, std::nullopt, top);
        bool is_lambda = !lambda_acts.empty();
        const TransitionAction& move =
            is_lambda ? lambda_acts.front() : p.actions(cfg.state, w.letter_at(consumed), top).front();
        switch (move.kind) {
        case ActKind::Skip: break;
        case ActKind::Pop: cfg.stack.pop_back(); break;
        case ActKind::Push: cfg.stack.push_back(move.symbol); break;
        }
        cfg.state = move.target;
        if (!is_lambda) ++consumed;
        rec.states.push_back(cfg.state);
        rec.stacks.push_back(cfg.stack);
        rec.consumed.push_back(consumed);
    }
    return rec;
}

std::string render_split(const Pda& p, const LassoWord& w, const std::vector<size_t>& cuts,
                         const std::vector<StateId>& states, const std::vector<Symbol>& letters) {
    std::ostringstream os;
    size_t pos = 0;
    for (size_t j = 0; j < cuts.size(); ++j) {
        FiniteWord seg;
        for (size_t i = pos; i < cuts[j]; ++i) seg.push_back(w.letter_at(i));
        if (j) os << " | ";
        os << "[" << word_to_string(seg) << "] -> (" << p.state_name(states[j + 1]) << ", "
           << letters[j + 1].name() << ")";
        pos = cuts[j];
    }
    return os.str();
}

} // namespace

Decomposition decompose_unique(const Pda& p, const LassoWord& w, size_t k,
                               const AnalyzeOptions& opts) {
    RunAnalysis r = analyze_run(p, w, opts);
    if (r.completeness != Completeness::Complete || !r.strictly_unbounded)
        throw std::invalid_argument("decomposition requires a strictly unbounded run");

    // Enough periods that the stack floor clears height k+2; after that the
    // length-(k+1) prefix can never change again.
    const uint64_t gain = r.pumped_word.size();
    uint64_t periods = 2 + (k + 3) / gain;
    const uint64_t total = r.transient_steps + periods * r.period_steps;
    RecordedRun rec = record_run(p, w, total);

    const LassoWord& limit = r.stack_limit.lasso();
    std::vector<Symbol> alpha; // alpha[j] = letter j of the limit, 0-based
    for (size_t j = 0; j <= k; ++j) alpha.push_back(limit.letter_at(j));

    Decomposition out;
    std::vector<uint64_t> times; // n_1 .. n_{k+1}
    for (size_t j = 1; j <= k + 1; ++j) {
        uint64_t last_violation = 0;
        bool any = false;
        for (uint64_t t = 0; t < rec.stacks.size(); ++t) {
            const FiniteWord& st = rec.stacks[t];
            bool ok = st.size() >= j;
            for (size_t i = 0; ok && i < j; ++i) ok = st[i] == alpha[i];
            if (!ok) {
                last_violation = t;
                any = true;
            }
        }
        times.push_back(any ? last_violation + 1 : 0);
    }
    out.stabilization_times = times;

    for (size_t j = 0; j + 1 <= k; ++j) {
        SegmentStep step;
        step.from_state = rec.states[times[j]];
        step.to_state = rec.states[times[j + 1]];
        step.from_letter = alpha[j];
        step.to_letter = alpha[j + 1];
        size_t from_pos = rec.consumed[times[j]];
        size_t to_pos = rec.consumed[times[j + 1]];
        for (size_t i = from_pos; i < to_pos; ++i) step.word.push_back(w.letter_at(i));
        step.in_u = seg_member_U(p, step.from_state, step.to_state, step.from_letter,
                                 step.to_letter, step.word, opts);
        out.segments.push_back(std::move(step));
    }

    // Brute-force search for every chained segmentation of the consumed
    // prefix whose pieces all lie in their 𝓤 languages.
    const size_t prefix_len = rec.consumed[times[k]];
    std::map<std::tuple<size_t, size_t, StateId, StateId, uint32_t, uint32_t>, bool> memo;
    auto u_check = [&](size_t pos, size_t end, StateId s, StateId t, Symbol a, Symbol b) {
        auto key = std::make_tuple(pos, end, s, t, a.id(), b.id());
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        FiniteWord seg;
        for (size_t i = pos; i < end; ++i) seg.push_back(w.letter_at(i));
        bool val = seg_member_U(p, s, t, a, b, seg, opts);
        memo.emplace(key, val);
        return val;
    };

    struct Split {
        std::vector<size_t> cuts;
        std::vector<StateId> states;
        std::vector<Symbol> letters;
    };
    std::vector<Split> found;
    std::vector<size_t> cuts;
    std::vector<StateId> states{p.initial};
    std::vector<Symbol> letters{p.bottom};
    auto search = [&](auto&& self, size_t pos, size_t depth) -> void {
        if (depth == k) {
            if (pos == prefix_len) found.push_back(Split{cuts, states, letters});
            return;
        }
        for (size_t end = pos; end <= prefix_len; ++end)
            for (StateId t = 0; t < p.state_names.size(); ++t)
                for (Symbol b : p.stack_alphabet) {
                    if (!u_check(pos, end, states.back(), t, letters.back(), b)) continue;
                    cuts.push_back(end);
                    states.push_back(t);
                    letters.push_back(b);
                    self(self, end, depth + 1);
                    cuts.pop_back();
                    states.pop_back();
                    letters.pop_back();
                }
    };
    search(search, 0, 0);

    Split canonical;
    for (size_t j = 0; j + 1 <= k; ++j) {
        canonical.cuts.push_back(rec.consumed[times[j + 1]]);
        canonical.states.push_back(rec.states[times[j + 1]]);
        canonical.letters.push_back(alpha[j + 1]);
    }
    canonical.states.insert(canonical.states.begin(), p.initial);
    canonical.letters.insert(canonical.letters.begin(), p.bottom);

    out.unique = found.size() == 1;
    for (const Split& s : found) {
        bool is_canonical = s.cuts == canonical.cuts && s.states == canonical.states &&
                            s.letters == canonical.letters;
        if (!is_canonical || !out.unique)
            out.collisions.push_back(render_split(p, w, s.cuts, s.states, s.letters));
    }
    return out;
}

Pda pad_transform(const Pda& p) {
    Pda out;
    const std::string marker = marker_for(p.stack_alphabet);
    const size_t n = p.state_names.size();
    auto pre = [](StateId q) { return static_cast<StateId>(3 * q); };
    auto sim = [](StateId q) { return static_cast<StateId>(3 * q + 1); };
    auto drain = [](StateId q) { return static_cast<StateId>(3 * q + 2); };
    for (size_t q = 0; q < n; ++q) {
        out.state_names.push_back(p.state_names[q] + "~pre");
        out.state_names.push_back(p.state_names[q] + "~sim");
        out.state_names.push_back(p.state_names[q] + "~drain");
    }
    out.input_alphabet = p.input_alphabet;
    out.stack_alphabet = p.stack_alphabet;
    for (Symbol z : p.stack_alphabet) out.stack_alphabet.push_back(prime_with(z, marker));
    out.bottom = p.bottom;
    out.initial = pre(p.initial);

    for (StateId q = 0; q < n; ++q) {
        for (Symbol z : p.stack_alphabet) {
            Symbol zp = prime_with(z, marker);
            add_act(out, pre(q), std::nullopt, z, act_push(sim(q), zp));
            add_act(out, pre(q), std::nullopt, zp, act_push(sim(q), zp));
            add_act(out, drain(q), std::nullopt, zp, act_pop(drain(q)));
            if (z != p.bottom) add_act(out, drain(q), std::nullopt, z, act_pop(pre(q)));
        }
    }
    for (const auto& [key, acts] : p.delta) {
        if (acts.empty()) continue;
        const TransitionAction& act = acts.front();
        TransitionAction mapped;
        switch (act.kind) {
        case ActKind::Skip: mapped = act_skip(pre(act.target)); break;
        case ActKind::Push: mapped = act_push(pre(act.target), act.symbol); break;
        case ActKind::Pop: mapped = act_pop(drain(act.target)); break;
        }
        add_act(out, sim(key.state), key.input, prime_with(key.top, marker), mapped);
    }
    return out;
}

TerminalAcceptor lift_accepting(const Pda& p, const Parity& colors,
                                const std::vector<Symbol>& over) {
    if (!same_symbol_set(p.input_alphabet, over))
        throw std::invalid_argument("lift_accepting: alphabet mismatch with the acceptor's input");

    Pda out;
    const std::string marker = marker_for(over);
    const size_t n = p.state_names.size();
    auto hat = [n](StateId q) { return static_cast<StateId>(n + q); };
    out.state_names = p.state_names;
    for (size_t q = 0; q < n; ++q) out.state_names.push_back(p.state_names[q] + "~pad");
    out.input_alphabet = p.input_alphabet;
    for (Symbol z : over) out.input_alphabet.push_back(prime_with(z, marker));
    out.stack_alphabet = p.stack_alphabet;
    out.bottom = p.bottom;
    out.initial = p.initial;
    out.delta = p.delta;

    for (StateId q = 0; q < n; ++q)
        for (Symbol x : p.stack_alphabet) {
            if (!p.actions(q, std::nullopt, x).empty()) continue;
            for (Symbol z : over) {
                add_act(out, q, prime_with(z, marker), x, act_skip(hat(q)));
                add_act(out, hat(q), prime_with(z, marker), x, act_skip(hat(q)));
            }
        }
    for (const auto& [key, acts] : p.delta) {
        if (!key.input || acts.empty()) continue;
        add_act(out, hat(key.state), key.input, key.top, acts.front());
    }

    unsigned c_pad = 0;
    for (const auto& [q, c] : colors.colors) c_pad = std::max(c_pad, c);
    c_pad += c_pad % 2 ? 1 : 2;
    Parity lifted;
    for (StateId q = 0; q < n; ++q) {
        lifted.colors[q] = colors.colors.at(q);
        lifted.colors[hat(q)] = c_pad;
    }
    return TerminalAcceptor{std::move(out), lifted};
}

Pda lift_intermediate(const Pda& p, const std::vector<Symbol>& over) {
    if (!same_symbol_set(p.input_alphabet, over))
        throw std::invalid_argument("lift_intermediate: alphabet mismatch with the element's input");

    Pda out;
    const std::string in_marker = marker_for(over);
    const std::string stack_marker = marker_for(p.stack_alphabet);
    const size_t n = p.state_names.size();
    auto drain = [n](StateId q) { return static_cast<StateId>(n + q); };
    out.state_names = p.state_names;
    for (size_t q = 0; q < n; ++q) out.state_names.push_back(p.state_names[q] + "~drain");
    out.input_alphabet = p.input_alphabet;
    for (Symbol z : over) out.input_alphabet.push_back(prime_with(z, in_marker));
    out.stack_alphabet = p.stack_alphabet;
    for (Symbol z : p.stack_alphabet) out.stack_alphabet.push_back(prime_with(z, stack_marker));
    out.bottom = p.bottom;
    out.initial = p.initial;

    for (const auto& [key, acts] : p.delta) {
        if (acts.empty()) continue;
        const TransitionAction& act = acts.front();
        add_act(out, key.state, key.input, key.top, act);
        TransitionAction on_primed = act;
        if (act.kind == ActKind::Pop) on_primed = act_pop(drain(act.target));
        add_act(out, key.state, key.input, prime_with(key.top, stack_marker), on_primed);
    }
    for (StateId q = 0; q < n; ++q)
        for (Symbol z : p.stack_alphabet) {
            Symbol zp = prime_with(z, stack_marker);
            if (p.actions(q, std::nullopt, z).empty())
                for (Symbol x : over) {
                    add_act(out, q, prime_with(x, in_marker), z, act_push(q, zp));
                    add_act(out, q, prime_with(x, in_marker), zp, act_push(q, zp));
                }
            add_act(out, drain(q), std::nullopt, zp, act_pop(drain(q)));
            if (z != p.bottom) add_act(out, drain(q), std::nullopt, z, act_pop(q));
        }
    return out;
}

namespace {

Parity buchi_to_parity(const Pda& p, const Buchi& b) {
    Parity par;
    for (StateId q = 0; q < p.state_names.size(); ++q) par.colors[q] = b.states.count(q) ? 0 : 1;
    return par;
}

TerminalAcceptor complement_terminal(const TerminalAcceptor& t) {
    if (const auto* b = std::get_if<Buchi>(&t.condition)) {
        Parity par = buchi_to_parity(t.pda, *b);
        for (auto& [q, c] : par.colors) ++c;
        return TerminalAcceptor{t.pda, par};
    }
    if (const auto* par = std::get_if<Parity>(&t.condition)) {
        Parity shifted = *par;
        for (auto& [q, c] : shifted.colors) ++c;
        return TerminalAcceptor{t.pda, shifted};
    }
    const Muller& m = std::get<Muller>(t.condition);
    const size_t n = t.pda.state_names.size();
    if (n > 20) throw std::invalid_argument("Muller table complement needs at most 20 states");
    Muller comp;
    for (uint64_t mask = 1; mask < (uint64_t(1) << n); ++mask) {
        std::set<StateId> s;
        for (StateId q = 0; q < n; ++q)
            if (mask & (uint64_t(1) << q)) s.insert(q);
        if (!m.table.count(s)) comp.table.insert(std::move(s));
    }
    return TerminalAcceptor{t.pda, comp};
}

TriangleChain sub_chain(const TriangleChain& c) {
    TriangleChain tail;
    tail.chain.assign(c.chain.begin() + 1, c.chain.end());
    tail.terminal = c.terminal;
    tail.real_time_class = c.real_time_class;
    return tail;
}

TriangleChain lift_chain(const TriangleChain& c, const std::vector<Symbol>& over) {
    if (c.chain.empty()) {
        const auto* par = std::get_if<Parity>(&c.terminal.condition);
        if (!par)
            throw std::invalid_argument(
                "complement: Muller terminals are supported on empty chains only");
        TriangleChain out;
        out.terminal = lift_accepting(c.terminal.pda, *par, over);
        out.real_time_class = false;
        return out;
    }
    TriangleChain out = lift_chain(sub_chain(c), c.chain.front().stack_alphabet);
    out.chain.insert(out.chain.begin(), lift_intermediate(c.chain.front(), over));
    return out;
}

TriangleChain complement_impl(const TriangleChain& c) {
    if (c.chain.empty())
        return TriangleChain{{}, complement_terminal(c.terminal), c.real_time_class};
    TriangleChain lifted = lift_chain(complement_impl(sub_chain(c)), c.chain.front().stack_alphabet);
    TriangleChain out;
    out.chain.push_back(pad_transform(c.chain.front()));
    out.chain.insert(out.chain.end(), lifted.chain.begin(), lifted.chain.end());
    out.terminal = std::move(lifted.terminal);
    out.real_time_class = false; // padding introduces no-letter moves
    return out;
}

} // namespace

TriangleChain complement_chain(const TriangleChain& c, const ComplementOptions& opts) {
    std::vector<std::string> diags = chain_validate(c);
    if (!diags.empty()) {
        std::string msg = "complement: chain fails validation:";
        for (const std::string& d : diags) msg += "\n  " + d;
        throw std::invalid_argument(msg);
    }
    auto gate = [&](const Pda& p, const std::string& label) {
        auto samples = sample_lassos(p.input_alphabet, opts.continuity_samples,
                                     opts.continuity_max_total, opts.continuity_seed);
        ContinuityReport rep =
            check_continuity(p, samples, opts.analyze, opts.continuity_perturbations);
        if (!rep.continuous)
            throw std::invalid_argument("complement: " + label +
                                        " is not continuous; incomplete run on " +
                                        word_to_string(rep.counterexample->spoke) + " ( " +
                                        word_to_string(rep.counterexample->cycle) + " )");
    };
    for (size_t i = 0; i < c.chain.size(); ++i)
        gate(c.chain[i], "element " + std::to_string(i + 1));
    gate(c.terminal.pda, "terminal");
    return complement_impl(c);
}

} // namespace pdw
