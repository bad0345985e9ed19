#include "pdw/battery.hpp"

#include "pdw/catalog.hpp"
#include "pdw/errors.hpp"
#include "pdw/games.hpp"
#include "pdw/omega_runs.hpp"
#include "pdw/triangle.hpp"
#include "pdw/words.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace pdw {
namespace {

Symbol S(std::string_view name) { return Symbol::intern(name); }

FiniteWord rep(Symbol s, size_t n) { return FiniteWord(n, s); }

FiniteWord cat(const FiniteWord& a, const FiniteWord& b) {
    FiniteWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// All words over `letters` of length at most max_len, shortest first.
std::vector<FiniteWord> words_up_to(const std::vector<Symbol>& letters, size_t max_len) {
    std::vector<FiniteWord> out;
    out.push_back({});
    size_t begin = 0;
    for (size_t len = 1; len <= max_len; ++len) {
        size_t end = out.size();
        for (size_t i = begin; i < end; ++i) {
            for (Symbol s : letters) {
                FiniteWord w = out[i];
                w.push_back(s);
                out.push_back(std::move(w));
            }
        }
        begin = end;
    }
    return out;
}

std::string quoted(const FiniteWord& w) { return "\"" + word_to_string(w) + "\""; }

std::string lasso_text(const LassoWord& w) {
    return word_to_string(w.spoke) + " ( " + word_to_string(w.cycle) + " )";
}

struct CriterionFailure {
    std::string detail;
};

[[noreturn]] void fail(const std::string& detail) { throw CriterionFailure{detail}; }

/// Independent replay of a deterministic run, mirroring the engine's
/// contract from the outside: a λ action on the current (state, top) fires
/// first, otherwise the next input letter is consumed, otherwise the run is
/// stuck. Used only as an oracle; shares no code with analyze_run.
struct BruteRun {
    const Pda& p;
    const LassoWord& w;
    StateId state;
    FiniteWord stack;
    size_t consumed = 0;

    BruteRun(const Pda& pda, const LassoWord& word)
        : p(pda), w(word), state(pda.initial), stack{pda.bottom} {}

    const std::vector<TransitionAction>* lookup(std::optional<Symbol> in) const {
        auto it = p.delta.find(DeltaKey{state, in, stack.back()});
        if (it == p.delta.end() || it->second.empty()) return nullptr;
        return &it->second;
    }

    bool step() {
        const std::vector<TransitionAction>* acts = lookup(std::nullopt);
        bool consume = false;
        if (acts == nullptr) {
            acts = lookup(w.letter_at(consumed));
            consume = true;
        }
        if (acts == nullptr) return false;
        const TransitionAction& act = acts->front();
        if (consume) ++consumed;
        switch (act.kind) {
            case ActKind::Skip: break;
            case ActKind::Pop: stack.pop_back(); break;
            case ActKind::Push: stack.push_back(act.symbol); break;
        }
        state = act.target;
        return true;
    }
};

bool same_limit(const WordLimit& a, const WordLimit& b) {
    if (a.is_infinite() != b.is_infinite()) return false;
    if (a.is_infinite()) return lasso_equal(a.lasso(), b.lasso());
    return a.finite_word() == b.finite_word();
}

// Criterion 1: the bounded solver's winning-set slice at (q, ⊥u) for
// |u| <= 6 over {a, b, ←} matches the erase-and-count oracle.
std::string criterion1() {
    GameInstance g = catalog_game("game:lemma42:anbn");
    StateId q = g.process.state_id("q").value();
    std::vector<Symbol> letters = {S("a"), S("b"), S("←")};
    std::set<FiniteWord> slice =
        winning_set_slice(g, q, 6, default_bounds(6), {}, letters);
    NamedLanguage tilde = oracle_language("anbn~");
    size_t checked = 0;
    for (const FiniteWord& u : words_up_to(letters, 6)) {
        bool expect = tilde.finite_oracle(u);
        bool got = slice.count(u) > 0;
        if (expect != got)
            fail("slice disagrees with oracle on " + quoted(u) + ": slice says " +
                 (got ? "win" : "loss"));
        ++checked;
    }
    return std::to_string(checked) + " words of length <= 6 agree, " +
           std::to_string(slice.size()) + " of them winning";
}

// Criterion 2: the paired witnesses a^n b^n ←^2n a b (in) and
// a^n+1 b^n+1 ←^2n a b (out) for n <= 5, through the oracle and through
// full game solves.
std::string criterion2() {
    GameInstance g = catalog_game("game:lemma42:anbn");
    StateId q = g.process.state_id("q").value();
    NamedLanguage tilde = oracle_language("anbn~");
    Symbol a = S("a");
    Symbol b = S("b");
    Symbol back = S("←");
    size_t solves = 0;
    for (size_t n = 0; n <= 5; ++n) {
        FiniteWord w1 = cat(cat(cat(rep(a, n), rep(b, n)), rep(back, 2 * n)), {a, b});
        FiniteWord w2 =
            cat(cat(cat(rep(a, n + 1), rep(b, n + 1)), rep(back, 2 * n)), {a, b});
        if (!tilde.finite_oracle(w1)) fail("oracle rejects witness " + quoted(w1));
        if (tilde.finite_oracle(w2)) fail("oracle accepts non-witness " + quoted(w2));
        for (bool in : {true, false}) {
            const FiniteWord& u = in ? w1 : w2;
            Configuration start{q, cat({g.process.bottom}, u)};
            Verdict3 v = solve_bounded(g, start, default_bounds(u.size()));
            if (v.winner == Winner::Unknown)
                fail("solver unresolved on " + quoted(u) + ": " + v.reason);
            bool eve = v.winner == Winner::EveWins;
            if (eve != in)
                fail("game verdict on " + quoted(u) + " is " +
                     (eve ? "a win" : "a loss") + ", oracle disagrees");
            ++solves;
        }
    }
    return std::to_string(solves) + " game solves match the oracle on paired witnesses";
}

std::set<FiniteWord> choice_family_verdicts(const GameInstance& g, size_t bound,
                                            std::string* context) {
    StateId q = g.process.state_id("q").value();
    Symbol a = S("a");
    Symbol b = S("b");
    Symbol c = S("c");
    std::set<FiniteWord> winning;
    for (size_t n = 1; n <= bound; ++n) {
        for (size_t m = 1; m <= bound; ++m) {
            for (size_t p = 1; p <= bound; ++p) {
                FiniteWord u = cat(cat(rep(a, n), rep(b, m)), rep(c, p));
                Configuration start{q, cat({g.process.bottom}, u)};
                Verdict3 v = solve_bounded(g, start, default_bounds(u.size()));
                if (v.winner == Winner::Unknown)
                    fail(*context + ": solver unresolved on " + quoted(u) + ": " + v.reason);
                if (v.winner == Winner::EveWins) winning.insert(u);
            }
        }
    }
    return winning;
}

// Criterion 3: over a^n b^m c^p with n, m, p <= 6 the choice game is won
// exactly on n = m or m = p, in agreement with the lang:V oracle.
std::string criterion3() {
    GameInstance g = catalog_game("game:prop45");
    std::string context = "game:prop45";
    std::set<FiniteWord> winning = choice_family_verdicts(g, 6, &context);
    size_t checked = 0;
    size_t wins = 0;
    for (size_t n = 1; n <= 6; ++n) {
        for (size_t m = 1; m <= 6; ++m) {
            for (size_t p = 1; p <= 6; ++p) {
                FiniteWord u = cat(cat(rep(S("a"), n), rep(S("b"), m)), rep(S("c"), p));
                bool expect = n == m || m == p;
                if (expect != oracle_language("V", u))
                    fail("lang:V oracle out of line on " + quoted(u));
                if (expect != (winning.count(u) > 0))
                    fail("verdict on " + quoted(u) + " breaks the n=m or m=p law");
                ++checked;
                if (expect) ++wins;
            }
        }
    }
    return std::to_string(checked) + " triples checked, " + std::to_string(wins) +
           " winning";
}

// Criterion 4: the swapped-partition game obeys the conjunctive n = m = p
// law, and flipping its owners back reproduces the choice-game set.
std::string criterion4() {
    GameInstance g = catalog_game("game:prop46");
    std::string context = "game:prop46";
    std::set<FiniteWord> winning = choice_family_verdicts(g, 6, &context);
    for (size_t n = 1; n <= 6; ++n) {
        for (size_t m = 1; m <= 6; ++m) {
            for (size_t p = 1; p <= 6; ++p) {
                FiniteWord u = cat(cat(rep(S("a"), n), rep(S("b"), m)), rep(S("c"), p));
                bool expect = n == m && m == p;
                if (expect != (winning.count(u) > 0))
                    fail("verdict on " + quoted(u) + " breaks the n=m=p law");
            }
        }
    }

    GameInstance mutant = g;
    for (Owner& o : mutant.process.owners)
        o = o == Owner::Eve ? Owner::Adam : Owner::Eve;
    std::string mutant_context = "owner-swapped game:prop46";
    std::set<FiniteWord> swapped = choice_family_verdicts(mutant, 6, &mutant_context);
    GameInstance reference = catalog_game("game:prop45");
    std::string reference_context = "game:prop45";
    std::set<FiniteWord> expected = choice_family_verdicts(reference, 6, &reference_context);
    if (swapped != expected)
        fail("owner-swapped mutant does not reproduce the choice-game set (" +
             std::to_string(swapped.size()) + " vs " + std::to_string(expected.size()) +
             " winning triples)");
    return "216 triples obey the conjunctive law, owner swap reproduces " +
           std::to_string(expected.size()) + " choice-game wins";
}

// Criterion 5: complement_chain is an exact complement on sampled lassos
// and on every embedded word ⊥u#^ω with |u| <= 5.
std::string criterion5() {
    struct Case {
        const char* chain_id;
        std::vector<Symbol> embed_letters;
        uint32_t seed;
    };
    std::vector<Case> cases = {
        {"chain:lemma42:anbn", {S("a"), S("b"), S("←")}, 0xC0501u},
        {"chain:prop45", {S("a"), S("b"), S("c")}, 0xC0502u},
    };
    size_t total = 0;
    for (const Case& cs : cases) {
        TriangleChain chain = catalog_chain(cs.chain_id);
        TriangleChain comp = complement_chain(chain);
        const Pda& head = chain.chain.front();
        std::vector<LassoWord> samples = sample_lassos(head.input_alphabet, 1000, 10, cs.seed);
        for (const FiniteWord& u : words_up_to(cs.embed_letters, 5))
            samples.push_back(LassoWord{cat({S("⊥")}, u), {S("#")}});
        for (const LassoWord& w : samples) {
            bool in = triangle_member(chain, w);
            bool out = triangle_member(comp, w);
            if (in == out)
                fail(std::string(cs.chain_id) + ": complement not exclusive on " +
                     lasso_text(w) + " (both " + (in ? "accept" : "reject") + ")");
            ++total;
        }
    }
    return std::to_string(total) + " lassos split exactly between chain and complement";
}

const std::vector<std::string>& catalog_automaton_ids() {
    static const std::vector<std::string> ids = {
        "automaton:lemma42:A1", "automaton:lemma42:A2", "automaton:lemma42:Lrec",
        "automaton:prop45:A1",  "automaton:prop45:A2",  "automaton:L1",
        "automaton:L2",         "automaton:L3",         "automaton:L4",
    };
    return ids;
}

void check_complete_run_against_brute(const Pda& p, const LassoWord& w,
                                      const RunAnalysis& r, const std::string& id) {
    uint64_t transient = r.transient_steps;
    uint64_t period = std::max<uint64_t>(r.period_steps, 1);
    uint64_t horizon = transient + 12 * period + 32;
    BruteRun b(p, w);
    std::vector<size_t> heights;
    heights.reserve(horizon + 1);
    heights.push_back(b.stack.size());
    std::vector<FiniteWord> window_stacks;
    std::vector<FiniteWord> late_stacks;
    std::set<StateId> window_states;
    if (transient == 0) {
        window_stacks.push_back(b.stack);
        window_states.insert(b.state);
    }
    for (uint64_t t = 1; t <= horizon; ++t) {
        if (!b.step())
            fail(id + ": replay got stuck on " + lasso_text(w) +
                 " though the engine reported a complete run");
        heights.push_back(b.stack.size());
        if (t >= transient && t <= transient + 10 * period) window_stacks.push_back(b.stack);
        if (t >= transient + 11 * period) late_stacks.push_back(b.stack);
        if (t >= transient && t < transient + 10 * period) window_states.insert(b.state);
    }

    auto common_prefix = [](const std::vector<FiniteWord>& stacks) {
        FiniteWord prefix = stacks.front();
        for (const FiniteWord& st : stacks) {
            size_t len = std::min(prefix.size(), st.size());
            size_t i = 0;
            while (i < len && prefix[i] == st[i]) ++i;
            prefix.resize(i);
        }
        return prefix;
    };
    if (r.stack_limit.is_infinite()) {
        // An ascending cycle raises its floor every period, so by the 11th
        // period the replay pins at least 12 limit letters.
        FiniteWord prefix = common_prefix(late_stacks);
        size_t k = std::min<size_t>(12, prefix.size());
        if (k < 12)
            fail(id + ": replay pinned only " + std::to_string(k) +
                 " limit letters on " + lasso_text(w));
        for (size_t i = 0; i < k; ++i) {
            if (prefix[i] != r.stack_limit.lasso().letter_at(i))
                fail(id + ": limit letter " + std::to_string(i) + " differs from replay on " +
                     lasso_text(w));
        }
    } else {
        // A stationary cycle may wiggle above its low point, but the common
        // prefix of every stack in the window is exactly the finite limit.
        if (common_prefix(window_stacks) != r.stack_limit.finite_word())
            fail(id + ": stationary limit differs from the replay's common prefix on " +
                 lasso_text(w));
    }

    if (window_states != r.inf_states)
        fail(id + ": recurring state set differs from replay window on " + lasso_text(w));

    // Height floor at k: some suffix of the run never dips below k. Only
    // suffixes with a full period left in the window are conclusive, since a
    // stationary wiggle can end the window on a rising stretch.
    size_t running_min = heights.back();
    size_t best_floor = 0;
    for (size_t t = heights.size(); t-- > 0;) {
        running_min = std::min(running_min, heights[t]);
        if (t + period < heights.size()) best_floor = std::max(best_floor, running_min);
    }
    bool floor12 = best_floor >= 12;
    if (floor12 != r.strictly_unbounded)
        fail(id + ": height floor at 12 says " + (floor12 ? "unbounded" : "bounded") +
             " but the engine disagrees on " + lasso_text(w));
}

// Criterion 6: 500 sampled lassos per catalog automaton, cross-checked
// against the independent replay: completeness, the first limit letters,
// the recurring state set and strict unboundedness.
std::string criterion6() {
    size_t runs = 0;
    uint32_t seed = 0xC06u;
    for (const std::string& id : catalog_automaton_ids()) {
        ParsedAutomaton a = catalog_automaton(id);
        const Pda& p = a.pda;
        std::vector<LassoWord> samples = sample_lassos(p.input_alphabet, 500, 8, seed++);
        for (const LassoWord& w : samples) {
            RunAnalysis r = analyze_run(p, w);
            switch (r.completeness) {
                case Completeness::Complete:
                    check_complete_run_against_brute(p, w, r, id);
                    break;
                case Completeness::Blocked: {
                    BruteRun b(p, w);
                    uint64_t t = 0;
                    while (t < 100000 && b.step()) ++t;
                    if (t == 100000)
                        fail(id + ": engine reported a blocked run but replay kept moving on " +
                             lasso_text(w));
                    break;
                }
                case Completeness::LambdaDivergent: {
                    BruteRun b(p, w);
                    for (uint64_t t = 0; t < 5000; ++t) {
                        if (!b.step())
                            fail(id + ": engine reported λ-divergence but replay blocked on " +
                                 lasso_text(w));
                    }
                    size_t mid = b.consumed;
                    for (uint64_t t = 0; t < 5000; ++t) b.step();
                    if (b.consumed != mid)
                        fail(id + ": engine reported λ-divergence but replay still consumes on " +
                             lasso_text(w));
                    break;
                }
            }
            ++runs;
        }
    }
    return std::to_string(runs) + " runs across " +
           std::to_string(catalog_automaton_ids().size()) + " automata match the replay";
}

// Criterion 7: 𝓤 implies 𝓛 exhaustively over the eraser automaton for
// |σ| <= 6, and the chained-𝓤 decomposition is unique on strictly
// unbounded catalog inputs for k <= 4.
std::string criterion7() {
    ParsedAutomaton a1 = catalog_automaton("automaton:lemma42:A1");
    const Pda& p = a1.pda;
    const std::vector<Symbol>& letters = p.input_alphabet;
    const std::vector<Symbol>& stack = p.stack_alphabet;
    size_t u_members = 0;
    size_t checked = 0;
    for (const FiniteWord& sigma : words_up_to(letters, 6)) {
        for (StateId q = 0; q < p.state_names.size(); ++q) {
            for (StateId q_to = 0; q_to < p.state_names.size(); ++q_to) {
                for (Symbol a : stack) {
                    for (Symbol b : stack) {
                        bool in_u = seg_member_U(p, q, q_to, a, b, sigma);
                        ++checked;
                        if (!in_u) continue;
                        ++u_members;
                        if (!seg_member_L(p, q, q_to, a, b, sigma))
                            fail("σ = " + quoted(sigma) + " is in 𝓤(" + p.state_name(q) +
                                 ", " + p.state_name(q_to) + ", " + a.name() + ", " +
                                 b.name() + ") but not in 𝓛");
                    }
                }
            }
        }
    }
    if (u_members == 0) fail("no 𝓤 members found, the implication check is vacuous");

    size_t decomposed = 0;
    std::vector<std::pair<const Pda*, LassoWord>> inputs;
    for (const FiniteWord& u : words_up_to({S("a"), S("b"), S("←")}, 4))
        inputs.emplace_back(&p, LassoWord{cat({S("⊥")}, u), {S("#")}});
    ParsedAutomaton a45 = catalog_automaton("automaton:prop45:A1");
    const Pda& choice = a45.pda;
    for (size_t n = 1; n <= 3; ++n)
        for (size_t m = 1; m <= 3; ++m)
            for (size_t q = 1; q <= 3; ++q)
                inputs.emplace_back(
                    &choice,
                    LassoWord{cat({S("⊥")}, cat(cat(rep(S("a"), n), rep(S("b"), m)),
                                                rep(S("c"), q))),
                              {S("#")}});
    for (const auto& [pda, w] : inputs) {
        RunAnalysis r = analyze_run(*pda, w);
        if (r.completeness != Completeness::Complete || !r.strictly_unbounded) continue;
        for (size_t k = 1; k <= 4; ++k) {
            Decomposition d = decompose_unique(*pda, w, k);
            if (!d.unique)
                fail("decomposition of " + lasso_text(w) + " at k = " + std::to_string(k) +
                     " is not unique (" + std::to_string(d.collisions.size()) +
                     " collisions)");
            if (d.segments.size() != k)
                fail("decomposition of " + lasso_text(w) + " returned " +
                     std::to_string(d.segments.size()) + " segments for k = " +
                     std::to_string(k));
            ++decomposed;
        }
    }
    return std::to_string(checked) + " segment instances (" + std::to_string(u_members) +
           " in 𝓤), " + std::to_string(decomposed) + " unique decompositions";
}

// Criterion 8: over a^n b^m c^p d^ω with n, m, p <= 8, joint acceptance by
// L1 and L2 holds exactly on n = m = p, matching the product oracle.
std::string criterion8() {
    ParsedAutomaton l1 = catalog_automaton("automaton:L1");
    ParsedAutomaton l2 = catalog_automaton("automaton:L2");
    size_t checked = 0;
    size_t joint = 0;
    for (size_t n = 1; n <= 8; ++n) {
        for (size_t m = 1; m <= 8; ++m) {
            for (size_t p = 1; p <= 8; ++p) {
                LassoWord w{cat(cat(rep(S("a"), n), rep(S("b"), m)), rep(S("c"), p)),
                            {S("d")}};
                bool one = accepts_omega(l1.pda, *l1.acceptance, w);
                bool two = accepts_omega(l2.pda, *l2.acceptance, w);
                bool expect = n == m && m == p;
                if ((one && two) != expect)
                    fail("joint acceptance wrong on " + lasso_text(w));
                if ((one && two) != oracle_language("L1∩L2", w))
                    fail("product oracle out of line on " + lasso_text(w));
                ++checked;
                if (expect) ++joint;
            }
        }
    }
    return std::to_string(checked) + " triples checked, " + std::to_string(joint) +
           " jointly accepted";
}

std::vector<LassoWord> complete_inputs(const Pda& p, size_t count, uint32_t seed) {
    const std::vector<Symbol>& alpha = p.input_alphabet;
    std::vector<LassoWord> pool = sample_lassos(alpha, 1200, 8, seed);
    for (Symbol x : alpha)
        for (size_t j = 0; j <= 6; ++j) pool.push_back(LassoWord{rep(x, j), {x}});
    SymbolSet have(alpha.begin(), alpha.end());
    if (have.count(S("a")) && have.count(S("b")) && have.count(S("c")) && have.count(S("d"))) {
        for (size_t n = 1; n <= 4; ++n)
            for (size_t m = 1; m <= 4; ++m)
                for (size_t q = 1; q <= 4; ++q)
                    pool.push_back(LassoWord{
                        cat(cat(rep(S("a"), n), rep(S("b"), m)), rep(S("c"), q)), {S("d")}});
    }
    std::vector<LassoWord> complete;
    for (const LassoWord& w : pool) {
        if (analyze_run(p, w).completeness == Completeness::Complete) complete.push_back(w);
        if (complete.size() >= count) break;
    }
    if (complete.empty()) return complete;
    std::vector<LassoWord> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) out.push_back(complete[i % complete.size()]);
    return out;
}

// Criterion 9: on complete inputs the padded automaton stays complete,
// becomes strictly unbounded, and its limit projects back onto the
// original limit once the padding symbols are erased.
std::string criterion9() {
    size_t runs = 0;
    uint32_t seed = 0xC09u;
    for (const std::string& id : catalog_automaton_ids()) {
        ParsedAutomaton a = catalog_automaton(id);
        const Pda& p = a.pda;
        Pda padded = pad_transform(p);
        SymbolSet original_stack(p.stack_alphabet.begin(), p.stack_alphabet.end());
        SymbolSet drop;
        for (Symbol s : padded.stack_alphabet)
            if (original_stack.count(s) == 0) drop.insert(s);
        std::vector<LassoWord> samples = complete_inputs(p, 500, seed++);
        if (samples.empty()) fail(id + ": no complete inputs found to pad");
        for (const LassoWord& w : samples) {
            RunAnalysis orig = analyze_run(p, w);
            RunAnalysis pad = analyze_run(padded, w);
            if (pad.completeness != Completeness::Complete)
                fail(id + ": padded run not complete on " + lasso_text(w));
            if (!pad.strictly_unbounded)
                fail(id + ": padded run not strictly unbounded on " + lasso_text(w));
            WordLimit projected = project_erase(pad.stack_limit, drop);
            if (!same_limit(projected, orig.stack_limit))
                fail(id + ": projected padded limit differs from the original on " +
                     lasso_text(w));
            ++runs;
        }
    }
    return std::to_string(runs) + " padded runs project back onto their original limits";
}

struct CriterionSpec {
    const char* title;
    std::string (*run)();
};

const std::vector<CriterionSpec>& criteria() {
    static const std::vector<CriterionSpec> list = {
        {"winning-set slice matches the erase-and-count oracle", criterion1},
        {"paired witnesses agree across oracle and game solves", criterion2},
        {"choice-game law over a^n b^m c^p", criterion3},
        {"conjunctive law and owner-swap mutant", criterion4},
        {"chain complementation is exclusive on lassos", criterion5},
        {"run engine matches an independent replay", criterion6},
        {"segment implication and unique decomposition", criterion7},
        {"joint acceptance law for the paired acceptors", criterion8},
        {"padding laws on complete runs", criterion9},
    };
    return list;
}

} // namespace

int battery_size() { return static_cast<int>(criteria().size()); }

CriterionResult run_criterion(int number) {
    CriterionResult r;
    r.number = number;
    if (number < 1 || number > battery_size()) {
        r.detail = "no such criterion";
        return r;
    }
    const CriterionSpec& spec = criteria()[static_cast<size_t>(number - 1)];
    r.title = spec.title;
    try {
        r.detail = spec.run();
        r.passed = true;
    } catch (const CriterionFailure& f) {
        r.detail = f.detail;
    } catch (const ResourceLimitError& e) {
        r.exhausted = true;
        r.detail = e.what();
    } catch (const std::exception& e) {
        r.detail = std::string("unexpected error: ") + e.what();
    }
    return r;
}

std::vector<CriterionResult> run_battery() {
    std::vector<CriterionResult> out;
    for (int i = 1; i <= battery_size(); ++i) out.push_back(run_criterion(i));
    return out;
}

} // namespace pdw
