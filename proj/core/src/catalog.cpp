#include "pdw/catalog.hpp"

#include <array>
#include <optional>
#include <stdexcept>

namespace pdw {

namespace {

Symbol S(std::string_view n) { return Symbol::intern(n); }

// ---------------------------------------------------------------- languages

bool is_anbn(const FiniteWord& w) {
    const Symbol a = S("a"), b = S("b");
    size_t i = 0, n = 0, m = 0;
    while (i < w.size() && w[i] == a) ++n, ++i;
    while (i < w.size() && w[i] == b) ++m, ++i;
    return i == w.size() && n >= 1 && n == m;
}

std::optional<std::array<size_t, 3>> abc_counts(const FiniteWord& w) {
    const Symbol a = S("a"), b = S("b"), c = S("c");
    size_t i = 0, n = 0, m = 0, p = 0;
    while (i < w.size() && w[i] == a) ++n, ++i;
    while (i < w.size() && w[i] == b) ++m, ++i;
    while (i < w.size() && w[i] == c) ++p, ++i;
    if (i != w.size() || n == 0 || m == 0 || p == 0) return std::nullopt;
    return std::array<size_t, 3>{n, m, p};
}

// a^n b^m c^p d^ω as a lasso, all three counts >= 1
std::optional<std::array<size_t, 3>> abcd_counts(const LassoWord& w) {
    LassoWord norm = lasso_normalize(w);
    if (norm.cycle != FiniteWord{S("d")}) return std::nullopt;
    return abc_counts(norm.spoke);
}

std::vector<NamedLanguage> language_registry() {
    std::vector<NamedLanguage> out;
    auto fin = [&](std::string name, std::string desc, std::function<bool(const FiniteWord&)> f) {
        out.push_back(NamedLanguage{std::move(name), true, std::move(desc), std::move(f), {}});
    };
    auto omg = [&](std::string name, std::string desc, std::function<bool(const LassoWord&)> f) {
        out.push_back(NamedLanguage{std::move(name), false, std::move(desc), {}, std::move(f)});
    };
    fin("anbn", "a^n b^n with n >= 1", is_anbn);
    fin("anbn~", "backspace closure of anbn over {a, b, <-}", [](const FiniteWord& w) {
        return tilde_member(is_anbn, w, S("←"));
    });
    fin("V", "a^n b^m c^p with n = m or m = p", [](const FiniteWord& w) {
        auto k = abc_counts(w);
        return k && ((*k)[0] == (*k)[1] || (*k)[1] == (*k)[2]);
    });
    fin("anbncn", "a^n b^n c^n with n >= 1", [](const FiniteWord& w) {
        auto k = abc_counts(w);
        return k && (*k)[0] == (*k)[1] && (*k)[1] == (*k)[2];
    });
    omg("L1", "a^n b^m c^p d^w with n = m", [](const LassoWord& w) {
        auto k = abcd_counts(w);
        return k && (*k)[0] == (*k)[1];
    });
    omg("L2", "a^n b^m c^p d^w with m = p", [](const LassoWord& w) {
        auto k = abcd_counts(w);
        return k && (*k)[1] == (*k)[2];
    });
    omg("L3", "a^n b^m c^p d^w with n != m", [](const LassoWord& w) {
        auto k = abcd_counts(w);
        return k && (*k)[0] != (*k)[1];
    });
    omg("L4", "a^n b^m c^p d^w with m != p", [](const LassoWord& w) {
        auto k = abcd_counts(w);
        return k && (*k)[1] != (*k)[2];
    });
    omg("L5", "complement of L3 | L4", [](const LassoWord& w) {
        auto k = abcd_counts(w);
        return !k || ((*k)[0] == (*k)[1] && (*k)[1] == (*k)[2]);
    });
    auto l1l2 = [](const LassoWord& w) {
        auto k = abcd_counts(w);
        return k && (*k)[0] == (*k)[1] && (*k)[1] == (*k)[2];
    };
    omg("L1∩L2", "a^n b^n c^n d^w with n >= 1", l1l2);
    omg("anbncnd", "alias of L1∩L2", l1l2);
    return out;
}

// ----------------------------------------------------------------- automata

void add(Pda& p, StateId q, std::optional<Symbol> in, Symbol top, TransitionAction a) {
    p.delta[DeltaKey{q, in, top}].push_back(a);
}

void add(Pda& p, StateId q, std::string_view in, std::string_view top, TransitionAction a) {
    add(p, q, std::optional<Symbol>(S(in)), S(top), a);
}

// {a^n b^n | n >= 1} recognizer: the first a is remembered by the state, so
// n - 1 counters match b's 1 .. n-1 and the last b lands on the bottom.
ParsedAutomaton build_lrec() {
    Pda p;
    p.state_names = {"q0", "q1", "q2", "qF"};
    p.input_alphabet = {S("a"), S("b")};
    p.stack_alphabet = {S("⊥L"), S("A")};
    p.bottom = S("⊥L");
    p.initial = 0;
    add(p, 0, "a", "⊥L", act_skip(1));
    add(p, 1, "a", "⊥L", act_push(1, S("A")));
    add(p, 1, "a", "A", act_push(1, S("A")));
    add(p, 1, "b", "⊥L", act_skip(3));
    add(p, 1, "b", "A", act_pop(2));
    add(p, 2, "b", "A", act_pop(2));
    add(p, 2, "b", "⊥L", act_skip(3));
    return {p, AcceptanceCondition(FinalStates{{3}})};
}

void check_eraser_alphabet(const std::vector<Symbol>& sigma) {
    for (Symbol x : sigma)
        for (const char* fixed : {"⊥", "←", "#", "⊥₁", "⊥₂"})
            if (x == S(fixed))
                throw std::invalid_argument("eraser game: input alphabet reserves " + x.name());
}

/// Backspace transducer: letters of Σ are pushed, ← erases the top pushed
/// letter (and vanishes on the bottom), the first # starts an unbounded
/// pile of #'s, and anything off that pattern freezes the stack for good.
Pda build_eraser_a1(const std::vector<Symbol>& sigma) {
    Pda p;
    p.state_names = {"s0", "s", "h", "sink"};
    p.input_alphabet = {S("⊥")};
    for (Symbol x : sigma) p.input_alphabet.push_back(x);
    p.input_alphabet.push_back(S("←"));
    p.input_alphabet.push_back(S("#"));
    p.stack_alphabet = {S("⊥₁")};
    for (Symbol x : sigma) p.stack_alphabet.push_back(x);
    p.stack_alphabet.push_back(S("#"));
    p.bottom = S("⊥₁");
    p.initial = 0;
    std::vector<Symbol> main_tops = {S("⊥₁")};
    for (Symbol x : sigma) main_tops.push_back(x);
    add(p, 0, "⊥", "⊥₁", act_skip(1));
    for (Symbol x : p.input_alphabet)
        if (x != S("⊥")) add(p, 0, x, S("⊥₁"), act_skip(3));
    for (Symbol top : main_tops) {
        for (Symbol x : sigma) add(p, 1, x, top, act_push(1, x));
        add(p, 1, S("←"), top, top == S("⊥₁") ? act_skip(1) : act_pop(1));
        add(p, 1, S("#"), top, act_push(2, S("#")));
        add(p, 1, S("⊥"), top, act_skip(3));
    }
    add(p, 2, "#", "#", act_push(2, S("#")));
    for (Symbol x : p.input_alphabet)
        if (x != S("#")) add(p, 2, x, S("#"), act_skip(3));
    for (Symbol x : p.input_alphabet)
        for (Symbol top : p.stack_alphabet) add(p, 3, x, top, act_skip(3));
    return p;
}

/// Terminal acceptor for ⊥₁ · L(lrec) · #^ω. Simulates lrec on the letters
/// between ⊥₁ and the first #, mirroring its stack above a renamed bottom.
/// Each simulating state carries a flag telling whether a final state was
/// seen since the last consumed letter, so the # boundary can be judged
/// even when lrec moves silently; everything off the pattern sinks to a
/// rejecting loop. Sole even color on the accepting #-loop.
ParsedAutomaton build_eraser_a2(const ParsedAutomaton& lrec, const std::vector<Symbol>& sigma) {
    const Pda& L = lrec.pda;
    const auto& finals = std::get<FinalStates>(*lrec.acceptance).states;
    auto in_f = [&](StateId q) { return finals.count(q) != 0; };

    Pda p;
    const size_t n = L.state_names.size();
    auto sim = [&](StateId q, bool f) { return static_cast<StateId>(1 + 2 * q + (f ? 1 : 0)); };
    const StateId acc = static_cast<StateId>(1 + 2 * n);
    const StateId rej = acc + 1;
    p.state_names.push_back("start");
    for (const auto& name : L.state_names) {
        p.state_names.push_back(name + "~s0");
        p.state_names.push_back(name + "~s1");
    }
    p.state_names.push_back("acc");
    p.state_names.push_back("rej");
    p.input_alphabet = {S("⊥₁")};
    for (Symbol x : sigma) p.input_alphabet.push_back(x);
    p.input_alphabet.push_back(S("#"));
    p.stack_alphabet = {S("⊥₂")};
    for (Symbol z : L.stack_alphabet)
        if (z != L.bottom) p.stack_alphabet.push_back(z);
    p.bottom = S("⊥₂");
    p.initial = 0;

    add(p, 0, std::optional<Symbol>(S("⊥₁")), S("⊥₂"), act_skip(sim(L.initial, in_f(L.initial))));
    for (Symbol x : p.input_alphabet)
        if (x != S("⊥₁")) add(p, 0, x, S("⊥₂"), act_skip(rej));

    for (StateId q = 0; q < n; ++q) {
        for (bool f : {false, true}) {
            const StateId me = sim(q, f);
            for (Symbol top : p.stack_alphabet) {
                const Symbol ltop = top == S("⊥₂") ? L.bottom : top;
                auto map_act = [&](const TransitionAction& a, bool carry) {
                    const bool nf = (carry && f) || in_f(a.target);
                    switch (a.kind) {
                    case ActKind::Skip: return act_skip(sim(a.target, nf));
                    case ActKind::Pop: return act_pop(sim(a.target, nf));
                    case ActKind::Push: return act_push(sim(a.target, nf), a.symbol);
                    }
                    return act_skip(rej);
                };
                const auto& lam = L.actions(q, std::nullopt, ltop);
                if (!lam.empty()) {
                    add(p, me, std::nullopt, top, map_act(lam.front(), true));
                    continue;
                }
                for (Symbol x : sigma) {
                    const auto& acts = L.actions(q, x, ltop);
                    add(p, me, x, top, acts.empty() ? act_skip(rej) : map_act(acts.front(), false));
                }
                add(p, me, S("⊥₁"), top, act_skip(rej));
                add(p, me, S("#"), top, act_skip(f ? acc : rej));
            }
        }
    }
    for (Symbol top : p.stack_alphabet) {
        for (Symbol x : p.input_alphabet)
            if (x != S("#")) add(p, acc, x, top, act_skip(rej));
        add(p, acc, S("#"), top, act_skip(acc));
        for (Symbol x : p.input_alphabet) add(p, rej, x, top, act_skip(rej));
    }
    Parity colors;
    for (StateId q = 0; q < p.state_names.size(); ++q) colors.colors[q] = q == acc ? 0 : 1;
    return {p, AcceptanceCondition(colors)};
}

/// Cancels c's against b's: pushes a's and b's, pops one b per c, and lets
/// # start the unbounded pile only with all b's gone (after c's) or none
/// popped (no c at all). Any imbalance or off-pattern letter freezes.
Pda build_prop45_a1() {
    Pda p;
    p.state_names = {"u0", "u1", "u1a", "u2", "u3", "u4", "u5", "sink"};
    p.input_alphabet = {S("⊥"), S("a"), S("b"), S("c"), S("#")};
    p.stack_alphabet = {S("⊥₁"), S("a"), S("b"), S("#")};
    p.bottom = S("⊥₁");
    p.initial = 0;
    const StateId sink = 7;
    auto rest_to_sink = [&](StateId q, Symbol top) {
        for (Symbol x : p.input_alphabet)
            if (!p.delta.count(DeltaKey{q, x, top})) add(p, q, x, top, act_skip(sink));
    };
    add(p, 0, "⊥", "⊥₁", act_skip(1));
    rest_to_sink(0, S("⊥₁"));
    add(p, 1, "a", "⊥₁", act_push(2, S("a")));
    rest_to_sink(1, S("⊥₁"));
    add(p, 2, "a", "a", act_push(2, S("a")));
    add(p, 2, "b", "a", act_push(3, S("b")));
    rest_to_sink(2, S("a"));
    add(p, 3, "b", "b", act_push(3, S("b")));
    add(p, 3, "#", "b", act_push(4, S("#")));
    add(p, 3, "c", "b", act_pop(5));
    rest_to_sink(3, S("b"));
    add(p, 4, "#", "#", act_push(4, S("#")));
    rest_to_sink(4, S("#"));
    add(p, 5, "c", "b", act_pop(5));
    add(p, 5, "#", "a", act_push(6, S("#")));
    rest_to_sink(5, S("b"));
    rest_to_sink(5, S("a"));
    add(p, 6, "#", "#", act_push(6, S("#")));
    rest_to_sink(6, S("#"));
    for (Symbol top : p.stack_alphabet) rest_to_sink(sink, top);
    return p;
}

/// Accepts ⊥₁ a^n b^n #^ω and ⊥₁ a^n #^ω, n >= 1: counts a's, matches b's
/// if any arrive, and parks on the #-loop. Sole even color there.
ParsedAutomaton build_prop45_a2() {
    Pda p;
    p.state_names = {"start", "p0", "pa", "pb", "acc", "rej"};
    p.input_alphabet = {S("⊥₁"), S("a"), S("b"), S("#")};
    p.stack_alphabet = {S("⊥₂"), S("A")};
    p.bottom = S("⊥₂");
    p.initial = 0;
    const StateId acc = 4, rej = 5;
    auto rest_to_rej = [&](StateId q, Symbol top) {
        for (Symbol x : p.input_alphabet)
            if (!p.delta.count(DeltaKey{q, x, top})) add(p, q, x, top, act_skip(rej));
    };
    add(p, 0, "⊥₁", "⊥₂", act_skip(1));
    rest_to_rej(0, S("⊥₂"));
    add(p, 1, "a", "⊥₂", act_push(2, S("A")));
    rest_to_rej(1, S("⊥₂"));
    add(p, 2, "a", "A", act_push(2, S("A")));
    add(p, 2, "b", "A", act_pop(3));
    add(p, 2, "#", "A", act_skip(acc));
    rest_to_rej(2, S("A"));
    add(p, 3, "b", "A", act_pop(3));
    add(p, 3, "#", "⊥₂", act_skip(acc));
    rest_to_rej(3, S("A"));
    rest_to_rej(3, S("⊥₂"));
    for (Symbol top : p.stack_alphabet) {
        add(p, acc, S("#"), top, act_skip(acc));
        rest_to_rej(acc, top);
        rest_to_rej(rej, top);
    }
    Parity colors;
    for (StateId q = 0; q < p.state_names.size(); ++q) colors.colors[q] = q == acc ? 0 : 1;
    return {p, AcceptanceCondition(colors)};
}

// The four block recognizers share the shape a+ b+ c+ d^ω and differ in
// which pair of counts is compared. Büchi state = the d-loop.
ParsedAutomaton build_l1() {
    Pda p;
    p.state_names = {"s0", "sa", "sb", "sc", "sd"};
    p.input_alphabet = {S("a"), S("b"), S("c"), S("d")};
    p.stack_alphabet = {S("⊥"), S("A")};
    p.bottom = S("⊥");
    p.initial = 0;
    add(p, 0, "a", "⊥", act_push(1, S("A")));
    add(p, 1, "a", "A", act_push(1, S("A")));
    add(p, 1, "b", "A", act_pop(2));
    add(p, 2, "b", "A", act_pop(2));
    add(p, 2, "c", "⊥", act_skip(3));
    add(p, 3, "c", "⊥", act_skip(3));
    add(p, 3, "d", "⊥", act_skip(4));
    add(p, 4, "d", "⊥", act_skip(4));
    return {p, AcceptanceCondition(Buchi{{4}})};
}

ParsedAutomaton build_l2() {
    Pda p;
    p.state_names = {"s0", "sa", "sb", "sc", "sd"};
    p.input_alphabet = {S("a"), S("b"), S("c"), S("d")};
    p.stack_alphabet = {S("⊥"), S("B")};
    p.bottom = S("⊥");
    p.initial = 0;
    add(p, 0, "a", "⊥", act_skip(1));
    add(p, 1, "a", "⊥", act_skip(1));
    add(p, 1, "b", "⊥", act_push(2, S("B")));
    add(p, 2, "b", "B", act_push(2, S("B")));
    add(p, 2, "c", "B", act_pop(3));
    add(p, 3, "c", "B", act_pop(3));
    add(p, 3, "d", "⊥", act_skip(4));
    add(p, 4, "d", "⊥", act_skip(4));
    return {p, AcceptanceCondition(Buchi{{4}})};
}

ParsedAutomaton build_l3() {
    Pda p;
    p.state_names = {"s0", "sa", "sb", "sbx", "sc", "sd"};
    p.input_alphabet = {S("a"), S("b"), S("c"), S("d")};
    p.stack_alphabet = {S("⊥"), S("A")};
    p.bottom = S("⊥");
    p.initial = 0;
    add(p, 0, "a", "⊥", act_push(1, S("A")));
    add(p, 1, "a", "A", act_push(1, S("A")));
    add(p, 1, "b", "A", act_pop(2));
    add(p, 2, "b", "A", act_pop(2));
    add(p, 2, "b", "⊥", act_skip(3)); // more b's than a's
    add(p, 2, "c", "A", act_skip(4)); // fewer b's than a's
    add(p, 3, "b", "⊥", act_skip(3));
    add(p, 3, "c", "⊥", act_skip(4));
    add(p, 4, "c", "A", act_skip(4));
    add(p, 4, "c", "⊥", act_skip(4));
    add(p, 4, "d", "A", act_skip(5));
    add(p, 4, "d", "⊥", act_skip(5));
    add(p, 5, "d", "A", act_skip(5));
    add(p, 5, "d", "⊥", act_skip(5));
    return {p, AcceptanceCondition(Buchi{{5}})};
}

ParsedAutomaton build_l4() {
    Pda p;
    p.state_names = {"s0", "sa", "sb", "sc", "scx", "sd"};
    p.input_alphabet = {S("a"), S("b"), S("c"), S("d")};
    p.stack_alphabet = {S("⊥"), S("B")};
    p.bottom = S("⊥");
    p.initial = 0;
    add(p, 0, "a", "⊥", act_skip(1));
    add(p, 1, "a", "⊥", act_skip(1));
    add(p, 1, "b", "⊥", act_push(2, S("B")));
    add(p, 2, "b", "B", act_push(2, S("B")));
    add(p, 2, "c", "B", act_pop(3));
    add(p, 3, "c", "B", act_pop(3));
    add(p, 3, "c", "⊥", act_skip(4)); // more c's than b's
    add(p, 3, "d", "B", act_skip(5)); // fewer c's than b's
    add(p, 4, "c", "⊥", act_skip(4));
    add(p, 4, "d", "⊥", act_skip(5));
    add(p, 5, "d", "B", act_skip(5));
    add(p, 5, "d", "⊥", act_skip(5));
    return {p, AcceptanceCondition(Buchi{{5}})};
}

// ---------------------------------------------------------------- processes

PushdownProcess build_process_eraser(const std::vector<Symbol>& sigma) {
    PushdownProcess p;
    p.state_names = {"q", "p"};
    p.owners = {Owner::Eve, Owner::Eve};
    p.stack_alphabet = {S("⊥")};
    for (Symbol x : sigma) p.stack_alphabet.push_back(x);
    p.stack_alphabet.push_back(S("←"));
    p.stack_alphabet.push_back(S("#"));
    p.bottom = S("⊥");
    for (Symbol z : p.stack_alphabet)
        if (z != S("#")) p.delta[ProcKey{0, z}].push_back(act_push(1, S("#")));
    p.delta[ProcKey{1, S("#")}].push_back(act_push(1, S("#")));
    return p;
}

PushdownProcess build_process_prop45(bool swap_partition) {
    PushdownProcess p;
    p.state_names = {"q", "q'", "q''", "p"};
    const Owner choice = swap_partition ? Owner::Adam : Owner::Eve;
    const Owner rest = swap_partition ? Owner::Eve : Owner::Adam;
    p.owners = {choice, rest, rest, rest};
    p.stack_alphabet = {S("⊥"), S("a"), S("b"), S("c"), S("#")};
    p.bottom = S("⊥");
    p.delta[ProcKey{0, S("c")}] = {act_pop(1), act_skip(2)};
    p.delta[ProcKey{1, S("c")}] = {act_pop(1)};
    p.delta[ProcKey{1, S("b")}] = {act_push(3, S("#"))};
    p.delta[ProcKey{2, S("c")}] = {act_push(3, S("#"))};
    p.delta[ProcKey{3, S("#")}] = {act_push(3, S("#"))};
    return p;
}

// ------------------------------------------------------------ chains, games

TriangleChain build_chain_eraser(const ParsedAutomaton& lrec, const std::vector<Symbol>& sigma) {
    ParsedAutomaton a2 = build_eraser_a2(lrec, sigma);
    TriangleChain c;
    c.chain = {build_eraser_a1(sigma)};
    c.terminal = TerminalAcceptor{a2.pda, *a2.acceptance};
    c.real_time_class = classify_pda(lrec.pda).real_time;
    return c;
}

TriangleChain build_chain_prop45() {
    ParsedAutomaton a2 = build_prop45_a2();
    TriangleChain c;
    c.chain = {build_prop45_a1()};
    c.terminal = TerminalAcceptor{a2.pda, *a2.acceptance};
    c.real_time_class = true;
    return c;
}

const std::vector<Symbol>& sigma_ab() {
    static const std::vector<Symbol> v = {S("a"), S("b")};
    return v;
}

} // namespace

GameInstance build_game_eraser(const ParsedAutomaton& lrec) {
    if (!lrec.acceptance || !std::holds_alternative<FinalStates>(*lrec.acceptance))
        throw std::invalid_argument("eraser game: recognizer must carry final states");
    auto diags = validate_pda(lrec.pda);
    if (!diags.empty()) throw std::invalid_argument("eraser game: " + diags.front());
    if (!classify_pda(lrec.pda).deterministic)
        throw std::invalid_argument("eraser game: recognizer must be deterministic");
    check_eraser_alphabet(lrec.pda.input_alphabet);
    GameInstance g;
    g.process = build_process_eraser(lrec.pda.input_alphabet);
    g.condition = build_chain_eraser(lrec, lrec.pda.input_alphabet);
    return g;
}

GameInstance build_game_prop45() {
    return GameInstance{build_process_prop45(false), build_chain_prop45()};
}

GameInstance build_game_prop46() {
    return GameInstance{build_process_prop45(true), build_chain_prop45()};
}

NamedLanguage oracle_language(const std::string& name) {
    for (auto& l : language_registry())
        if (l.name == name) return l;
    throw std::invalid_argument("unknown language: " + name);
}

bool oracle_language(const std::string& name, const FiniteWord& w) {
    NamedLanguage l = oracle_language(name);
    if (!l.finitary) throw std::invalid_argument("language " + name + " expects a lasso");
    return l.finite_oracle(w);
}

bool oracle_language(const std::string& name, const LassoWord& w) {
    NamedLanguage l = oracle_language(name);
    if (l.finitary) throw std::invalid_argument("language " + name + " expects a finite word");
    return l.omega_oracle(w);
}

CatalogObject catalog_lookup(const std::string& id) {
    if (id == "automaton:lemma42:A1") return ParsedAutomaton{build_eraser_a1(sigma_ab()), std::nullopt};
    if (id == "automaton:lemma42:A2") return build_eraser_a2(build_lrec(), sigma_ab());
    if (id == "automaton:lemma42:Lrec") return build_lrec();
    if (id == "automaton:prop45:A1") return ParsedAutomaton{build_prop45_a1(), std::nullopt};
    if (id == "automaton:prop45:A2") return build_prop45_a2();
    if (id == "automaton:L1") return build_l1();
    if (id == "automaton:L2") return build_l2();
    if (id == "automaton:L3") return build_l3();
    if (id == "automaton:L4") return build_l4();
    if (id == "process:lemma42") return build_process_eraser(sigma_ab());
    if (id == "process:prop45") return build_process_prop45(false);
    if (id == "process:prop46") return build_process_prop45(true);
    if (id == "chain:lemma42:anbn") return build_chain_eraser(build_lrec(), sigma_ab());
    if (id == "chain:prop45") return build_chain_prop45();
    if (id == "game:lemma42:anbn") return build_game_eraser(build_lrec());
    if (id == "game:prop45") return build_game_prop45();
    if (id == "game:prop46") return build_game_prop46();
    if (id.rfind("lang:", 0) == 0) return oracle_language(id.substr(5));
    throw std::invalid_argument("unknown catalog id: " + id);
}

std::vector<std::string> catalog_ids() {
    std::vector<std::string> out = {
        "automaton:lemma42:A1", "automaton:lemma42:A2", "automaton:lemma42:Lrec",
        "automaton:prop45:A1", "automaton:prop45:A2",
        "automaton:L1", "automaton:L2", "automaton:L3", "automaton:L4",
        "process:lemma42", "process:prop45", "process:prop46",
        "chain:lemma42:anbn", "chain:prop45",
        "game:lemma42:anbn", "game:prop45", "game:prop46",
    };
    for (const auto& l : language_registry()) out.push_back("lang:" + l.name);
    return out;
}

ParsedAutomaton catalog_automaton(const std::string& id) {
    auto obj = catalog_lookup(id);
    if (auto* a = std::get_if<ParsedAutomaton>(&obj)) return *a;
    throw std::invalid_argument(id + " is not an automaton");
}

PushdownProcess catalog_process(const std::string& id) {
    auto obj = catalog_lookup(id);
    if (auto* p = std::get_if<PushdownProcess>(&obj)) return *p;
    throw std::invalid_argument(id + " is not a process");
}

TriangleChain catalog_chain(const std::string& id) {
    auto obj = catalog_lookup(id);
    if (auto* c = std::get_if<TriangleChain>(&obj)) return *c;
    throw std::invalid_argument(id + " is not a chain");
}

GameInstance catalog_game(const std::string& id) {
    auto obj = catalog_lookup(id);
    if (auto* g = std::get_if<GameInstance>(&obj)) return *g;
    throw std::invalid_argument(id + " is not a game");
}

} // namespace pdw
