#pragma once

#include "pdw/automata.hpp"

#include <optional>

namespace pdw {

enum class Completeness {
    Complete,        // the run consumes the whole infinite input
    LambdaDivergent, // the run eventually takes no-letter moves forever
    Blocked,         // some configuration has no applicable move
};

/// Everything the run engine certifies about the unique run of a
/// deterministic automaton on a lasso input.
///
/// For Complete runs: the run is eventually periodic; after transient_steps
/// moves it enters a cycle of period_steps moves that repeats forever. If
/// the cycle returns to the same configuration the stack limit is the finite
/// entry stack; if it ends higher, the freshly written suffix (pumped_word)
/// is appended once per period and the limit is the infinite word
/// entry-stack . pumped_word^ω.
struct RunAnalysis {
    Completeness completeness = Completeness::Blocked;
    uint64_t transient_steps = 0;
    uint64_t period_steps = 0;
    FiniteWord pumped_word;
    WordLimit stack_limit = WordLimit::finite({});
    bool strictly_unbounded = false;
    std::set<StateId> inf_states;            // populated only when Complete
    std::optional<unsigned> min_inf_color;   // when Complete and colored
};

uint64_t default_step_ceiling();
void set_default_step_ceiling(uint64_t ceiling);

struct AnalyzeOptions {
    uint64_t step_ceiling = 0; // 0: use default_step_ceiling()
    std::optional<Parity> coloring;
};

/// Certified analysis of the unique run of p on w. Throws
/// std::invalid_argument if p is not deterministic and ResourceLimitError if
/// no certificate is found within the step ceiling.
RunAnalysis analyze_run(const Pda& p, const LassoWord& w, const AnalyzeOptions& opts = {});

/// Acceptance of the lasso w by the deterministic automaton p under cond.
/// FinalStates conditions are rejected: they make no sense on infinite
/// inputs.
bool accepts_omega(const Pda& p, const AcceptanceCondition& cond, const LassoWord& w,
                   const AnalyzeOptions& opts = {});

struct ContinuityReport {
    bool continuous = true;
    std::optional<LassoWord> counterexample;
    size_t runs_checked = 0;
};

/// Samples evidence that every input has a complete run: analyzes each given
/// lasso plus all its single-letter perturbations (capped at
/// max_perturbations per sample). First incomplete run wins.
ContinuityReport check_continuity(const Pda& p, const std::vector<LassoWord>& samples,
                                  const AnalyzeOptions& opts = {},
                                  size_t max_perturbations = 10000);

/// Deterministic pseudo-random lassos over the given alphabet, for sampling
/// based checks. Total length (spoke plus cycle) is in [1, max_total].
std::vector<LassoWord> sample_lassos(const std::vector<Symbol>& alphabet, size_t count,
                                     size_t max_total, uint32_t seed);

} // namespace pdw
