#include "pdw/words.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pdw {

namespace {

struct Interner {
    std::mutex mutex;
    std::vector<std::string> names;
    std::unordered_map<std::string, uint32_t> ids;
};

Interner& interner() {
    static Interner table;
    return table;
}

// Characters claimed by the text formats: transition syntax, word literals,
// parity and muller acceptance syntax.
constexpr std::string_view kReserved = ",()=>{}";

} // namespace

bool Symbol::valid_token(std::string_view name) {
    if (name.empty()) return false;
    if (name == "λ" || name == "_") return false; // empty-word / empty-input markers
    for (char c : name) {
        if (static_cast<unsigned char>(c) <= ' ') return false;
        if (kReserved.find(c) != std::string_view::npos) return false;
    }
    return true;
}

Symbol Symbol::intern(std::string_view name) {
    if (!valid_token(name))
        throw std::invalid_argument("invalid symbol token: '" + std::string(name) + "'");
    Interner& t = interner();
    std::lock_guard<std::mutex> lock(t.mutex);
    auto it = t.ids.find(std::string(name));
    if (it != t.ids.end()) return Symbol(it->second);
    uint32_t id = static_cast<uint32_t>(t.names.size());
    t.names.emplace_back(name);
    t.ids.emplace(t.names.back(), id);
    return Symbol(id);
}

const std::string& Symbol::name() const {
    Interner& t = interner();
    std::lock_guard<std::mutex> lock(t.mutex);
    return t.names.at(id_);
}

Symbol sym(std::string_view name) { return Symbol::intern(name); }

FiniteWord make_word(std::initializer_list<std::string_view> names) {
    FiniteWord w;
    w.reserve(names.size());
    for (auto n : names) w.push_back(Symbol::intern(n));
    return w;
}

LassoWord::LassoWord(FiniteWord s, FiniteWord c) : spoke(std::move(s)), cycle(std::move(c)) {
    if (cycle.empty()) throw std::invalid_argument("lasso cycle must be nonempty");
}

Symbol LassoWord::letter_at(size_t i) const {
    if (i < spoke.size()) return spoke[i];
    return cycle[(i - spoke.size()) % cycle.size()];
}

namespace {

/// Length of the primitive root of w (the shortest u with w = u^k).
size_t primitive_root_len(const FiniteWord& w) {
    size_t n = w.size();
    for (size_t d = 1; d <= n / 2; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (size_t i = d; i < n && ok; ++i)
            if (w[i] != w[i - d]) ok = false;
        if (ok) return d;
    }
    return n;
}

} // namespace

LassoWord lasso_normalize(const LassoWord& w) {
    FiniteWord cycle(w.cycle.begin(), w.cycle.begin() + static_cast<long>(primitive_root_len(w.cycle)));
    FiniteWord spoke = w.spoke;
    // Absorb the spoke's tail into the cycle: u.x with cycle v ending in x
    // denotes the same word as u with the cycle rotated right once.
    while (!spoke.empty() && spoke.back() == cycle.back()) {
        spoke.pop_back();
        std::rotate(cycle.begin(), cycle.end() - 1, cycle.end());
    }
    return LassoWord(std::move(spoke), std::move(cycle));
}

bool lasso_equal(const LassoWord& a, const LassoWord& b) {
    size_t bound = std::max(a.spoke.size(), b.spoke.size()) + a.cycle.size() + b.cycle.size();
    for (size_t i = 0; i < bound; ++i)
        if (a.letter_at(i) != b.letter_at(i)) return false;
    return true;
}

bool LassoWord::operator==(const LassoWord& other) const { return lasso_equal(*this, other); }

bool WordLimit::operator==(const WordLimit& other) const {
    if (is_infinite() != other.is_infinite()) return false;
    if (is_infinite()) return lasso() == other.lasso();
    return finite_word() == other.finite_word();
}

bool prefix_of(const FiniteWord& u, const FiniteWord& w) {
    if (u.size() > w.size()) return false;
    return std::equal(u.begin(), u.end(), w.begin());
}

bool prefix_of(const FiniteWord& u, const LassoWord& w) {
    for (size_t i = 0; i < u.size(); ++i)
        if (u[i] != w.letter_at(i)) return false;
    return true;
}

FiniteWord eraser_evaluate(const FiniteWord& u, Symbol eraser) {
    FiniteWord out;
    out.reserve(u.size());
    for (Symbol c : u) {
        if (c == eraser) {
            if (!out.empty()) out.pop_back();
        } else {
            out.push_back(c);
        }
    }
    return out;
}

bool tilde_member(const std::function<bool(const FiniteWord&)>& oracle,
                  const FiniteWord& u, Symbol eraser) {
    return oracle(eraser_evaluate(u, eraser));
}

FiniteWord project_erase(const FiniteWord& w, const SymbolSet& drop) {
    FiniteWord out;
    for (Symbol c : w)
        if (!drop.count(c)) out.push_back(c);
    return out;
}

WordLimit project_erase(const LassoWord& w, const SymbolSet& drop) {
    FiniteWord spoke = project_erase(w.spoke, drop);
    FiniteWord cycle = project_erase(w.cycle, drop);
    if (cycle.empty()) return WordLimit::finite(std::move(spoke));
    return WordLimit::infinite(LassoWord(std::move(spoke), std::move(cycle)));
}

WordLimit project_erase(const WordLimit& w, const SymbolSet& drop) {
    if (w.is_infinite()) return project_erase(w.lasso(), drop);
    return WordLimit::finite(project_erase(w.finite_word(), drop));
}

Symbol primed_copy(Symbol s) { return Symbol::intern(s.name() + "'"); }

bool is_primed(Symbol s) {
    const std::string& n = s.name();
    return !n.empty() && n.back() == '\'';
}

SymbolSet primed_set(const std::vector<Symbol>& alphabet) {
    SymbolSet out;
    for (Symbol s : alphabet) out.insert(primed_copy(s));
    return out;
}

std::string word_to_string(const FiniteWord& w) {
    if (w.empty()) return "λ";
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << w[i].name();
    }
    return os.str();
}

} // namespace pdw
