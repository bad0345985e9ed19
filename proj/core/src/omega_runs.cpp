#include "pdw/omega_runs.hpp"

#include "pdw/detail/low_points.hpp"
#include "pdw/errors.hpp"

#include <atomic>
#include <random>

namespace pdw {

namespace {

std::atomic<uint64_t> g_step_ceiling{1'000'000};

uint64_t pack_key(StateId state, uint64_t phase, Symbol top) {
    return detail::pack_key(state, phase, top.id());
}

} // namespace

uint64_t default_step_ceiling() { return g_step_ceiling.load(); }
void set_default_step_ceiling(uint64_t ceiling) { g_step_ceiling.store(ceiling); }

RunAnalysis analyze_run(const Pda& p, const LassoWord& w, const AnalyzeOptions& opts) {
    if (!classify_pda(p).deterministic)
        throw std::invalid_argument("run analysis requires a deterministic automaton");

    const uint64_t ceiling = opts.step_ceiling ? opts.step_ceiling : default_step_ceiling();
    const size_t spoke_len = w.spoke.size();
    const size_t cycle_len = w.cycle.size();
    auto phase_of = [&](uint64_t consumed) -> uint64_t {
        if (consumed < spoke_len) return consumed;
        return spoke_len + (consumed - spoke_len) % cycle_len;
    };

    Configuration cfg{p.initial, {p.bottom}};
    std::vector<StateId> state_history{cfg.state};
    uint64_t consumed = 0;

    detail::LowPointStore lows;        // keyed on (state, input phase, top)
    detail::LowPointStore lambda_lows; // keyed on (state, top), current no-letter stretch only
    lows.match_or_insert(0, pack_key(cfg.state, phase_of(0), p.bottom), 1, 0);
    lambda_lows.match_or_insert(0, pack_key(cfg.state, 0, p.bottom), 1, 0);

    auto finish_complete = [&](uint64_t t1, uint64_t t2, size_t entry_height) {
        RunAnalysis r;
        r.completeness = Completeness::Complete;
        r.transient_steps = t1;
        r.period_steps = t2 - t1;
        FiniteWord entry_stack(cfg.stack.begin(), cfg.stack.begin() + static_cast<long>(entry_height));
        if (cfg.stack.size() > entry_height) {
            r.pumped_word.assign(cfg.stack.begin() + static_cast<long>(entry_height), cfg.stack.end());
            r.stack_limit = WordLimit::infinite(
                lasso_normalize(LassoWord(std::move(entry_stack), r.pumped_word)));
            r.strictly_unbounded = true;
        } else {
            r.stack_limit = WordLimit::finite(std::move(entry_stack));
        }
        for (uint64_t t = t1; t < t2; ++t) r.inf_states.insert(state_history[t]);
        if (opts.coloring) {
            unsigned best = ~0u;
            for (StateId q : r.inf_states) best = std::min(best, opts.coloring->colors.at(q));
            r.min_inf_color = best;
        }
        return r;
    };

    for (uint64_t t = 0;; ++t) {
        if (t >= ceiling)
            throw ResourceLimitError("run not certified within the step ceiling of " +
                                     std::to_string(ceiling) + " moves");

        const Symbol top = cfg.stack.back();
        const auto& lambda_acts = p.actions(cfg.state, std::nullopt, top);
        bool is_lambda = !lambda_acts.empty();
        const TransitionAction* move = nullptr;
        if (is_lambda) {
            move = &lambda_acts.front();
        } else {
            const auto& acts = p.actions(cfg.state, w.letter_at(consumed), top);
            if (acts.empty()) {
                RunAnalysis r;
                r.completeness = Completeness::Blocked;
                r.transient_steps = t;
                r.stack_limit = WordLimit::finite(cfg.stack);
                return r;
            }
            move = &acts.front();
        }

        switch (move->kind) {
        case ActKind::Skip: break;
        case ActKind::Pop: cfg.stack.pop_back(); break;
        case ActKind::Push: cfg.stack.push_back(move->symbol); break;
        }
        cfg.state = move->target;
        if (!is_lambda) ++consumed;
        state_history.push_back(cfg.state);
        const uint64_t now = t + 1;
        const size_t height = cfg.stack.size();
        const Symbol new_top = cfg.stack.back();

        if (is_lambda) {
            if (const auto* hit = lambda_lows.match_or_insert(
                    now, pack_key(cfg.state, 0, new_top), height, consumed)) {
                RunAnalysis r;
                r.completeness = Completeness::LambdaDivergent;
                r.transient_steps = hit->time;
                r.period_steps = now - hit->time;
                r.stack_limit = WordLimit::finite(cfg.stack);
                return r;
            }
        } else {
            lambda_lows.clear();
            lambda_lows.match_or_insert(now, pack_key(cfg.state, 0, new_top), height, consumed);
        }

        if (const auto* hit = lows.match_or_insert(
                now, pack_key(cfg.state, phase_of(consumed), new_top), height, consumed)) {
            if (consumed > hit->consumed) return finish_complete(hit->time, now, hit->height);
        }
    }
}

bool accepts_omega(const Pda& p, const AcceptanceCondition& cond, const LassoWord& w,
                   const AnalyzeOptions& opts) {
    if (std::holds_alternative<FinalStates>(cond))
        throw std::invalid_argument("final-state acceptance is undefined on infinite inputs");
    RunAnalysis r = analyze_run(p, w, opts);
    if (r.completeness != Completeness::Complete) return false;
    if (const auto* b = std::get_if<Buchi>(&cond)) {
        for (StateId q : r.inf_states)
            if (b->states.count(q)) return true;
        return false;
    }
    if (const auto* m = std::get_if<Muller>(&cond)) return m->table.count(r.inf_states) > 0;
    const Parity& par = std::get<Parity>(cond);
    unsigned best = ~0u;
    for (StateId q : r.inf_states) best = std::min(best, par.colors.at(q));
    return best % 2 == 0;
}

ContinuityReport check_continuity(const Pda& p, const std::vector<LassoWord>& samples,
                                  const AnalyzeOptions& opts, size_t max_perturbations) {
    ContinuityReport report;
    auto check_one = [&](const LassoWord& w) {
        ++report.runs_checked;
        if (analyze_run(p, w, opts).completeness != Completeness::Complete) {
            report.continuous = false;
            report.counterexample = w;
            return false;
        }
        return true;
    };
    for (const LassoWord& w : samples) {
        if (!check_one(w)) return report;
        size_t budget = max_perturbations;
        for (size_t part = 0; part < 2 && budget; ++part) {
            const FiniteWord& base = part == 0 ? w.spoke : w.cycle;
            for (size_t i = 0; i < base.size() && budget; ++i) {
                for (Symbol a : p.input_alphabet) {
                    if (a == base[i]) continue;
                    if (!budget) break;
                    --budget;
                    LassoWord variant = w;
                    (part == 0 ? variant.spoke : variant.cycle)[i] = a;
                    if (!check_one(variant)) return report;
                }
            }
        }
    }
    return report;
}

std::vector<LassoWord> sample_lassos(const std::vector<Symbol>& alphabet, size_t count,
                                     size_t max_total, uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<size_t> total_dist(1, max_total);
    std::uniform_int_distribution<size_t> letter_dist(0, alphabet.size() - 1);
    std::vector<LassoWord> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        size_t total = total_dist(rng);
        std::uniform_int_distribution<size_t> cycle_dist(1, total);
        size_t cycle_len = cycle_dist(rng);
        FiniteWord spoke, cycle;
        for (size_t j = 0; j + cycle_len < total; ++j) spoke.push_back(alphabet[letter_dist(rng)]);
        for (size_t j = 0; j < cycle_len; ++j) cycle.push_back(alphabet[letter_dist(rng)]);
        out.emplace_back(std::move(spoke), std::move(cycle));
    }
    return out;
}

} // namespace pdw
