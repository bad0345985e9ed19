#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pdw {

/// Interned alphabet letter. Identity is the token name: interning the same
/// name twice yields the same Symbol, so comparison and hashing are cheap.
/// Token names may not be empty, contain whitespace, or contain one of the
/// characters reserved by the text formats.
class Symbol {
public:
    /// Placeholder letter, meant to be overwritten before use.
    Symbol() : Symbol(intern("-unset-")) {}

    static Symbol intern(std::string_view name);

    /// True iff name is acceptable as a token (nonempty, no whitespace, no
    /// reserved delimiter characters).
    static bool valid_token(std::string_view name);

    const std::string& name() const;
    uint32_t id() const { return id_; }

    auto operator<=>(const Symbol&) const = default;

private:
    explicit Symbol(uint32_t id) : id_(id) {}
    uint32_t id_;
};

using FiniteWord = std::vector<Symbol>;
using SymbolSet = std::set<Symbol>;

FiniteWord make_word(std::initializer_list<std::string_view> names);
Symbol sym(std::string_view name);

/// Ultimately periodic infinite word spoke . cycle . cycle . cycle ...
/// The cycle is never empty.
struct LassoWord {
    FiniteWord spoke;
    FiniteWord cycle;

    LassoWord(FiniteWord s, FiniteWord c);

    Symbol letter_at(size_t i) const;

    /// Semantic equality: both denote the same infinite word.
    bool operator==(const LassoWord& other) const;
};

/// Canonical form: primitive cycle, shortest spoke. Two lassos denote the
/// same infinite word iff their normal forms are structurally identical.
LassoWord lasso_normalize(const LassoWord& w);

/// Decides semantic equality directly by prefix comparison up to
/// max(|spoke1|,|spoke2|) + |cycle1| + |cycle2| letters, which is sound by
/// the periodicity (Fine and Wilf) argument on the common tail.
bool lasso_equal(const LassoWord& a, const LassoWord& b);

/// Either a finite word or a lasso. Used for limits of stack contents.
class WordLimit {
public:
    static WordLimit finite(FiniteWord w) { return WordLimit(std::move(w)); }
    static WordLimit infinite(LassoWord w) { return WordLimit(std::move(w)); }

    bool is_infinite() const { return std::holds_alternative<LassoWord>(v_); }
    const FiniteWord& finite_word() const { return std::get<FiniteWord>(v_); }
    const LassoWord& lasso() const { return std::get<LassoWord>(v_); }

    bool operator==(const WordLimit& other) const;

private:
    explicit WordLimit(FiniteWord w) : v_(std::move(w)) {}
    explicit WordLimit(LassoWord w) : v_(std::move(w)) {}
    std::variant<FiniteWord, LassoWord> v_;
};

bool prefix_of(const FiniteWord& u, const FiniteWord& w);
bool prefix_of(const FiniteWord& u, const LassoWord& w);

/// Left-to-right backspace evaluation: every occurrence of eraser removes the
/// letter it follows; an eraser acting on an empty result vanishes.
FiniteWord eraser_evaluate(const FiniteWord& u, Symbol eraser);

/// Membership of u in the backspace closure of the language decided by
/// oracle: oracle(eraser_evaluate(u)).
bool tilde_member(const std::function<bool(const FiniteWord&)>& oracle,
                  const FiniteWord& u, Symbol eraser);

/// Drops every letter in the given set. A lasso whose cycle projects to
/// nothing collapses to a finite word.
FiniteWord project_erase(const FiniteWord& w, const SymbolSet& drop);
WordLimit project_erase(const LassoWord& w, const SymbolSet& drop);
WordLimit project_erase(const WordLimit& w, const SymbolSet& drop);

/// Primed variants carry a trailing apostrophe on the token name.
Symbol primed_copy(Symbol s);
bool is_primed(Symbol s);
SymbolSet primed_set(const std::vector<Symbol>& alphabet);

std::string word_to_string(const FiniteWord& w);

} // namespace pdw

template <> struct std::hash<pdw::Symbol> {
    size_t operator()(const pdw::Symbol& s) const noexcept {
        return std::hash<uint32_t>()(s.id());
    }
};
