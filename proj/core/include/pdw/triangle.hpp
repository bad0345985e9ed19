#pragma once

#include "pdw/automata.hpp"
#include "pdw/omega_runs.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pdw {

/// Last automaton of a composed chain, together with its ω-acceptance
/// condition (Buchi, Muller or Parity; never FinalStates).
struct TerminalAcceptor {
    Pda pda;
    AcceptanceCondition condition;

    bool operator==(const TerminalAcceptor&) const = default;
};

/// Composed language A₁ ▷ … ▷ Aₙ ▷ terminal. A lasso is a member when the
/// iterated stack limits through the chain all exist, are infinite, and the
/// last one is accepted by the terminal. The chain may be empty, in which
/// case membership is plain terminal acceptance.
struct TriangleChain {
    std::vector<Pda> chain;
    TerminalAcceptor terminal;
    bool real_time_class = false; // claims every automaton is real-time

    bool operator==(const TriangleChain&) const = default;
};

/// Structural diagnostics: alphabet chaining between consecutive automata,
/// determinism of every automaton, the real-time claim, and the terminal
/// condition kind. Empty result means valid.
std::vector<std::string> chain_validate(const TriangleChain& c);

/// Membership of w in the composed language. Empty chain: terminal
/// acceptance. Otherwise the head's run must be strictly unbounded and the
/// infinite stack limit must be a member of the tail chain.
bool triangle_member(const TriangleChain& c, const LassoWord& w, const AnalyzeOptions& opts = {});

/// Segment language 𝓛(q, q′, a, b): words σ that drive p from the height-1
/// configuration (q, a) to exactly (q′, a·b), consuming all of σ. The entry
/// symbol a is an impassable floor: a run popping it is dead.
bool seg_member_L(const Pda& p, StateId q, StateId q_to, Symbol a, Symbol b, const FiniteWord& sigma,
                  const AnalyzeOptions& opts = {});

struct SegDetail {
    bool member = false;     // conditions (a), (b), (c) all hold
    bool cond_a = false;     // σ ∈ 𝓛(q, q′, a, b)
    bool cond_b = false;     // every strict-prefix visit to (·, a·b) later returns to stack a
    bool cond_c = false;     // wrong-state full-length visits to (·, a·b) are excused
    bool c_decisive = false; // (a) and (b) hold but (c) rejects
};

/// Segment language 𝓤(q, q′, a, b) ⊆ 𝓛(q, q′, a, b), with the three
/// conditions reported separately so the interpretation of (c) stays
/// auditable.
SegDetail seg_member_U_detail(const Pda& p, StateId q, StateId q_to, Symbol a, Symbol b,
                              const FiniteWord& sigma, const AnalyzeOptions& opts = {});

bool seg_member_U(const Pda& p, StateId q, StateId q_to, Symbol a, Symbol b,
                  const FiniteWord& sigma, const AnalyzeOptions& opts = {});

/// One segment of a decomposition: the input stretch between consecutive
/// stabilization times, and the endpoint data of its 𝓤 language.
struct SegmentStep {
    FiniteWord word;
    StateId from_state = 0;
    StateId to_state = 0;
    Symbol from_letter;
    Symbol to_letter;
    bool in_u = false;

    bool operator==(const SegmentStep&) const = default;
};

struct Decomposition {
    std::vector<SegmentStep> segments;          // k segments, in order
    std::vector<uint64_t> stabilization_times;  // n_1 … n_{k+1}, in moves
    bool unique = true;                         // no alternative chained-𝓤 segmentation
    std::vector<std::string> collisions;        // rendered alternatives, if any
};

/// First k segments of the unique decomposition of w under p, read off the
/// stabilization times of the strictly unbounded run, then cross-checked by
/// brute-force enumeration of every chained-𝓤 segmentation of the consumed
/// prefix. Throws std::invalid_argument when the run is not strictly
/// unbounded.
Decomposition decompose_unique(const Pda& p, const LassoWord& w, size_t k,
                               const AnalyzeOptions& opts = {});

/// Padding construction. The output simulates p but precedes every
/// simulated step with a no-letter push of the primed copy of the base
/// letter under work, so each stack cell of p becomes a block Z·(Z′)ⁿ.
/// Pops become no-letter cascades removing a whole block. On every input
/// whose run under p is complete, the output's run is complete and strictly
/// unbounded, and erasing primed letters from its limit recovers p's limit
/// content.
Pda pad_transform(const Pda& p);

/// Acceptor lift to the padded alphabet `over ∪ over′`. The result accepts
/// a lasso iff its unprimed projection is finite, or is infinite and
/// accepted by (p, colors). Primed letters are consumed by skips through
/// hatted twin states carrying the dedicated color c_pad, the smallest even
/// number above every color of p.
TerminalAcceptor lift_accepting(const Pda& p, const Parity& colors,
                                const std::vector<Symbol>& over);

/// Intermediate-chain lift to the padded alphabet. The result reads primed
/// input letters by pushing a primed copy of its own top's base letter, so
/// its limit is the padded image of p's limit on the unprimed projection;
/// pops of a padded block drain through no-letter cascades.
Pda lift_intermediate(const Pda& p, const std::vector<Symbol>& over);

struct ComplementOptions {
    AnalyzeOptions analyze;
    size_t continuity_samples = 24;     // sampled lassos per automaton
    size_t continuity_max_total = 6;    // spoke+cycle bound for the samples
    uint32_t continuity_seed = 7;
    size_t continuity_perturbations = 400;
};

/// Complement of the composed language, assuming every automaton in c has
/// the continuity property (each checked on sampled inputs; a counterexample
/// throws std::invalid_argument). Empty chain: terminal parity colors shift
/// by +1 (Buchi terminals are converted to parity first, Muller terminals
/// are complemented by table complement). Nonempty chain: complement the
/// tail, pad the head, and lift the complemented tail to the padded
/// alphabet.
TriangleChain complement_chain(const TriangleChain& c, const ComplementOptions& opts = {});

} // namespace pdw
