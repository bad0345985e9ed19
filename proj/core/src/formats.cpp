#include "pdw/formats.hpp"

#include "pdw/catalog.hpp"
#include "pdw/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace pdw {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> lex_tokens(const std::string& text, bool braces = false) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
    };
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            flush();
        } else if (ch == '(' || ch == ')' || (braces && (ch == '{' || ch == '}'))) {
            flush();
            out.push_back(std::string(1, ch));
        } else {
            cur += ch;
        }
    }
    flush();
    return out;
}

Symbol letter_token(const std::string& tok) {
    if (!Symbol::valid_token(tok)) throw ParseError("bad symbol token: " + tok);
    return Symbol::intern(tok);
}

const std::string kBadNameChars = ",()=>{}:";

void check_state_name(const std::string& name) {
    if (name.empty()) throw ParseError("empty state name");
    for (char ch : name)
        if (std::isspace(static_cast<unsigned char>(ch)) || kBadNameChars.find(ch) != std::string::npos)
            throw ParseError("state name not representable in the text format: " + name);
}

TriangleChain load_chain_at(const std::string& ref, const std::filesystem::path& base_dir);

// ----------------------------------------------------------- word literals

} // namespace

std::string print_word(const FiniteWord& w) {
    if (w.empty()) return "λ";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w[i].name();
    }
    return out;
}

std::string print_lasso(const LassoWord& w) {
    std::string out;
    for (Symbol s : w.spoke) out += s.name() + " ";
    out += "(";
    for (Symbol s : w.cycle) out += " " + s.name();
    out += " )";
    return out;
}

FiniteWord parse_word(const std::string& text) {
    auto toks = lex_tokens(text);
    if (toks.empty()) throw ParseError("empty word literal (write λ for the empty word)");
    if (toks.size() == 1 && toks[0] == "λ") return {};
    FiniteWord out;
    for (const auto& t : toks) {
        if (t == "(" || t == ")") throw ParseError("unexpected parenthesis in a finite word");
        out.push_back(letter_token(t));
    }
    return out;
}

LassoWord parse_lasso(const std::string& text) {
    auto toks = lex_tokens(text);
    auto open = std::find(toks.begin(), toks.end(), "(");
    if (open == toks.end()) throw ParseError("lasso literal needs a ( cycle )");
    if (toks.empty() || toks.back() != ")")
        throw ParseError("lasso literal must end with the cycle's )");
    FiniteWord spoke, cycle;
    for (auto it = toks.begin(); it != open; ++it) {
        if (*it == ")") throw ParseError("unmatched ) in lasso literal");
        spoke.push_back(letter_token(*it));
    }
    for (auto it = open + 1; it + 1 != toks.end(); ++it) {
        if (*it == "(" || *it == ")") throw ParseError("nested parenthesis in lasso literal");
        cycle.push_back(letter_token(*it));
    }
    if (cycle.empty()) throw ParseError("lasso cycle may not be empty");
    return LassoWord{std::move(spoke), std::move(cycle)};
}

// ------------------------------------------------------- shared line logic

namespace {

struct Line {
    size_t no;
    std::string text;
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string line;
    size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        std::string t = trim(line);
        if (!t.empty()) out.push_back(Line{no, std::move(t)});
    }
    return out;
}

[[noreturn]] void fail(const Line& l, const std::string& why) {
    throw ParseError("line " + std::to_string(l.no) + ": " + why + ": " + l.text);
}

// A directive is "<single-token-head>: value"; everything else is a
// transition line.
std::optional<std::pair<std::string, std::string>> as_directive(const Line& l) {
    size_t colon = l.text.find(':');
    if (colon == std::string::npos) return std::nullopt;
    std::string head = trim(l.text.substr(0, colon));
    if (head.empty()) return std::nullopt;
    for (char ch : head)
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '(' || ch == '>')
            return std::nullopt;
    return std::make_pair(head, trim(l.text.substr(colon + 1)));
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

TransitionAction parse_action(const Line& l, const std::string& rhs,
                              const std::map<std::string, StateId>& states) {
    size_t open = rhs.find('(');
    if (open == std::string::npos || rhs.back() != ')') fail(l, "malformed action");
    std::string kind = trim(rhs.substr(0, open));
    std::string args = rhs.substr(open + 1, rhs.size() - open - 2);
    auto parts = split_on(args, ',');
    auto state_of = [&](const std::string& name) {
        auto it = states.find(name);
        if (it == states.end()) fail(l, "unknown state " + name);
        return it->second;
    };
    if (kind == "skip" && parts.size() == 1) return act_skip(state_of(parts[0]));
    if (kind == "pop" && parts.size() == 1) return act_pop(state_of(parts[0]));
    if (kind == "push" && parts.size() == 2)
        return act_push(state_of(parts[0]), letter_token(parts[1]));
    fail(l, "malformed action (want skip(q), pop(q) or push(q, X))");
}

std::string action_text(const TransitionAction& a, const std::vector<std::string>& names) {
    switch (a.kind) {
    case ActKind::Skip: return "skip(" + names[a.target] + ")";
    case ActKind::Pop: return "pop(" + names[a.target] + ")";
    case ActKind::Push: return "push(" + names[a.target] + ", " + a.symbol.name() + ")";
    }
    return {};
}

std::string acceptance_text(const AcceptanceCondition& c, const std::vector<std::string>& names) {
    std::string out;
    if (const auto* f = std::get_if<FinalStates>(&c)) {
        out = "final";
        for (StateId q : f->states) out += " " + names[q];
    } else if (const auto* b = std::get_if<Buchi>(&c)) {
        out = "buchi";
        for (StateId q : b->states) out += " " + names[q];
    } else if (const auto* p = std::get_if<Parity>(&c)) {
        out = "parity";
        for (const auto& [q, col] : p->colors) out += " " + names[q] + "=" + std::to_string(col);
    } else if (const auto* m = std::get_if<Muller>(&c)) {
        out = "muller";
        for (const auto& set : m->table) {
            out += " {";
            for (StateId q : set) out += " " + names[q];
            out += " }";
        }
    }
    return out;
}

AcceptanceCondition parse_acceptance(const Line& l, const std::string& value,
                                     const std::map<std::string, StateId>& states) {
    auto toks = lex_tokens(value, true);
    if (toks.empty()) fail(l, "empty acceptance");
    auto state_of = [&](const std::string& name) {
        auto it = states.find(name);
        if (it == states.end()) fail(l, "unknown state " + name);
        return it->second;
    };
    const std::string kind = toks[0];
    if (kind == "final" || kind == "buchi") {
        std::set<StateId> set;
        for (size_t i = 1; i < toks.size(); ++i) set.insert(state_of(toks[i]));
        if (kind == "final") return FinalStates{std::move(set)};
        return Buchi{std::move(set)};
    }
    if (kind == "parity") {
        Parity p;
        for (size_t i = 1; i < toks.size(); ++i) {
            size_t eq = toks[i].rfind('=');
            if (eq == std::string::npos) fail(l, "parity entries look like q=color");
            StateId q = state_of(toks[i].substr(0, eq));
            const std::string num = toks[i].substr(eq + 1);
            if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
                fail(l, "bad parity color " + num);
            p.colors[q] = static_cast<unsigned>(std::stoul(num));
        }
        return p;
    }
    if (kind == "muller") {
        Muller m;
        size_t i = 1;
        while (i < toks.size()) {
            if (toks[i] != "{") fail(l, "muller sets are brace groups");
            std::set<StateId> set;
            for (++i; i < toks.size() && toks[i] != "}"; ++i) set.insert(state_of(toks[i]));
            if (i == toks.size()) fail(l, "unterminated muller set");
            ++i;
            m.table.insert(std::move(set));
        }
        return m;
    }
    fail(l, "unknown acceptance kind " + kind);
}

struct ParsedDirectives {
    std::map<std::string, std::pair<Line, std::string>> once;
    std::vector<std::pair<Line, std::string>> owners;
    std::vector<Line> transitions;
};

ParsedDirectives scan_lines(const std::string& text, const std::set<std::string>& known_once) {
    ParsedDirectives out;
    for (const Line& l : split_lines(text)) {
        auto dir = as_directive(l);
        if (!dir) {
            if (l.text.find("->") == std::string::npos) fail(l, "neither directive nor transition");
            out.transitions.push_back(l);
            continue;
        }
        if (dir->first == "owner") {
            out.owners.emplace_back(l, dir->second);
            continue;
        }
        if (!known_once.count(dir->first)) fail(l, "unknown directive " + dir->first);
        if (!out.once.emplace(dir->first, std::make_pair(l, dir->second)).second)
            fail(l, "duplicate directive " + dir->first);
    }
    return out;
}

const std::pair<Line, std::string>& need(const ParsedDirectives& d, const std::string& key,
                                         const std::string& what) {
    auto it = d.once.find(key);
    if (it == d.once.end()) throw ParseError("missing " + key + ": line in " + what);
    return it->second;
}

std::vector<Symbol> symbols_of(const std::string& value) {
    std::vector<Symbol> out;
    for (const auto& t : lex_tokens(value)) out.push_back(letter_token(t));
    return out;
}

std::map<std::string, StateId> name_states(const Line& l, const std::string& value,
                                           std::vector<std::string>& names) {
    std::map<std::string, StateId> ids;
    for (const auto& t : lex_tokens(value)) {
        if (ids.count(t)) fail(l, "duplicate state " + t);
        ids[t] = static_cast<StateId>(names.size());
        names.push_back(t);
    }
    return ids;
}

} // namespace

// ----------------------------------------------------------- automaton form

std::string print_automaton(const ParsedAutomaton& a) {
    const Pda& p = a.pda;
    for (const auto& n : p.state_names) check_state_name(n);
    std::string out;
    out += "states:";
    for (const auto& n : p.state_names) out += " " + n;
    out += "\ninput:";
    for (Symbol s : p.input_alphabet) out += " " + s.name();
    out += "\nstack:";
    for (Symbol s : p.stack_alphabet) out += " " + s.name();
    out += "\nbottom: " + p.bottom.name();
    out += "\ninitial: " + p.state_names.at(p.initial);
    if (a.acceptance) out += "\nacceptance: " + acceptance_text(*a.acceptance, p.state_names);
    out += "\n";
    for (const auto& [key, acts] : p.delta)
        for (const auto& act : acts)
            out += p.state_names.at(key.state) + " , " + (key.input ? key.input->name() : "_")
                   + " , " + key.top.name() + " -> " + action_text(act, p.state_names) + "\n";
    return out;
}

ParsedAutomaton parse_automaton(const std::string& text) {
    auto d = scan_lines(text, {"states", "input", "stack", "bottom", "initial", "acceptance"});
    if (!d.owners.empty()) fail(d.owners.front().first, "owner lines belong to process files");
    ParsedAutomaton out;
    Pda& p = out.pda;
    auto& [states_line, states_value] = need(d, "states", "automaton file");
    auto ids = name_states(states_line, states_value, p.state_names);
    p.input_alphabet = symbols_of(need(d, "input", "automaton file").second);
    p.stack_alphabet = symbols_of(need(d, "stack", "automaton file").second);
    p.bottom = letter_token(trim(need(d, "bottom", "automaton file").second));
    auto& [init_line, init_value] = need(d, "initial", "automaton file");
    auto init = ids.find(trim(init_value));
    if (init == ids.end()) fail(init_line, "unknown initial state");
    p.initial = init->second;
    if (auto it = d.once.find("acceptance"); it != d.once.end())
        out.acceptance = parse_acceptance(it->second.first, it->second.second, ids);
    for (const Line& l : d.transitions) {
        auto sides = l.text.find("->");
        std::string lhs = l.text.substr(0, sides), rhs = trim(l.text.substr(sides + 2));
        auto parts = split_on(lhs, ',');
        if (parts.size() != 3) fail(l, "transition head wants state , input , top");
        auto q = ids.find(parts[0]);
        if (q == ids.end()) fail(l, "unknown state " + parts[0]);
        std::optional<Symbol> in;
        if (parts[1] != "_") in = letter_token(parts[1]);
        DeltaKey key{q->second, in, letter_token(parts[2])};
        p.delta[key].push_back(parse_action(l, rhs, ids));
    }
    return out;
}

// ------------------------------------------------------------- process form

namespace {

std::string process_text(const PushdownProcess& p) {
    for (const auto& n : p.state_names) check_state_name(n);
    std::string out;
    out += "states:";
    for (const auto& n : p.state_names) out += " " + n;
    out += "\nstack:";
    for (Symbol s : p.stack_alphabet) out += " " + s.name();
    out += "\nbottom: " + p.bottom.name();
    out += "\n";
    for (size_t q = 0; q < p.state_names.size(); ++q)
        out += "owner: " + p.state_names[q] + " -> "
               + (q < p.owners.size() && p.owners[q] == Owner::Adam ? "Adam" : "Eve") + "\n";
    for (const auto& [key, acts] : p.delta)
        for (const auto& act : acts)
            out += p.state_names.at(key.state) + " , " + key.top.name() + " -> "
                   + action_text(act, p.state_names) + "\n";
    return out;
}

PushdownProcess process_of(const ParsedDirectives& d, const std::string& what) {
    PushdownProcess p;
    auto& [states_line, states_value] = need(d, "states", what);
    auto ids = name_states(states_line, states_value, p.state_names);
    p.stack_alphabet = symbols_of(need(d, "stack", what).second);
    p.bottom = letter_token(trim(need(d, "bottom", what).second));
    p.owners.assign(p.state_names.size(), Owner::Eve);
    std::set<StateId> owned;
    for (const auto& [l, value] : d.owners) {
        auto arrow = value.find("->");
        if (arrow == std::string::npos) fail(l, "owner lines look like owner: q -> Eve");
        std::string name = trim(value.substr(0, arrow));
        std::string who = trim(value.substr(arrow + 2));
        auto q = ids.find(name);
        if (q == ids.end()) fail(l, "unknown state " + name);
        if (!owned.insert(q->second).second) fail(l, "duplicate owner for " + name);
        if (who == "Eve")
            p.owners[q->second] = Owner::Eve;
        else if (who == "Adam")
            p.owners[q->second] = Owner::Adam;
        else
            fail(l, "owner must be Eve or Adam");
    }
    if (owned.size() != p.state_names.size())
        throw ParseError("every state needs an owner line in a " + what);
    for (const Line& l : d.transitions) {
        auto sides = l.text.find("->");
        std::string lhs = l.text.substr(0, sides), rhs = trim(l.text.substr(sides + 2));
        auto parts = split_on(lhs, ',');
        if (parts.size() != 2) fail(l, "transition head wants state , top");
        auto q = ids.find(parts[0]);
        if (q == ids.end()) fail(l, "unknown state " + parts[0]);
        ProcKey key{q->second, letter_token(parts[1])};
        p.delta[key].push_back(parse_action(l, rhs, ids));
    }
    return p;
}

} // namespace

std::string print_process(const PushdownProcess& p) { return process_text(p); }

PushdownProcess parse_process(const std::string& text) {
    auto d = scan_lines(text, {"states", "stack", "bottom"});
    return process_of(d, "process file");
}

std::string print_game(const GameInstance& g, const std::string& condition_ref) {
    return process_text(g.process) + "condition: " + condition_ref + "\n";
}

GameInstance parse_game(const std::string& text, const std::filesystem::path& base_dir) {
    auto d = scan_lines(text, {"states", "stack", "bottom", "condition"});
    GameInstance g;
    g.process = process_of(d, "game file");
    const std::string ref = trim(need(d, "condition", "game file").second);
    g.condition = load_chain_at(ref, base_dir);
    return g;
}

// --------------------------------------------------------------- chain form

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path.string());
    out << text;
}

bool is_catalog_ref(const std::string& ref, const char* prefix) {
    return ref.rfind(prefix, 0) == 0;
}

ParsedAutomaton resolve_automaton(const std::string& ref, const std::filesystem::path& base_dir) {
    if (is_catalog_ref(ref, "automaton:")) return catalog_automaton(ref);
    std::filesystem::path p(ref);
    if (p.is_relative()) p = base_dir / p;
    return parse_automaton(slurp(p));
}

} // namespace

TriangleChain parse_chain(const std::string& text, const std::filesystem::path& base_dir) {
    TriangleChain c;
    bool have_terminal = false;
    for (const Line& l : split_lines(text)) {
        auto dir = as_directive(l);
        if (!dir) fail(l, "chain files hold element:/terminal:/class: lines");
        if (dir->first == "element") {
            c.chain.push_back(resolve_automaton(dir->second, base_dir).pda);
        } else if (dir->first == "terminal") {
            ParsedAutomaton a = resolve_automaton(dir->second, base_dir);
            if (!a.acceptance) fail(l, "terminal automaton carries no acceptance");
            c.terminal = TerminalAcceptor{std::move(a.pda), std::move(*a.acceptance)};
            have_terminal = true;
        } else if (dir->first == "class") {
            const std::string v = trim(dir->second);
            if (v == "realtime")
                c.real_time_class = true;
            else if (v == "lambda")
                c.real_time_class = false;
            else
                fail(l, "class is realtime or lambda");
        } else {
            fail(l, "unknown directive " + dir->first);
        }
    }
    if (!have_terminal) throw ParseError("chain file needs a terminal: line");
    return c;
}

ChainFiles write_chain(const TriangleChain& c, const std::filesystem::path& dir,
                       const std::string& stem) {
    std::filesystem::create_directories(dir);
    ChainFiles out;
    std::string chain_text;
    for (size_t i = 0; i < c.chain.size(); ++i) {
        std::string name = stem + "_element_" + std::to_string(i) + ".pda";
        spit(dir / name, print_automaton(ParsedAutomaton{c.chain[i], std::nullopt}));
        out.parts.push_back(dir / name);
        chain_text += "element: " + name + "\n";
    }
    std::string tname = stem + "_terminal.pda";
    spit(dir / tname, print_automaton(ParsedAutomaton{c.terminal.pda, c.terminal.condition}));
    out.parts.push_back(dir / tname);
    chain_text += "terminal: " + tname + "\n";
    chain_text += std::string("class: ") + (c.real_time_class ? "realtime" : "lambda") + "\n";
    out.chain_file = dir / (stem + ".chain");
    spit(out.chain_file, chain_text);
    return out;
}

// ----------------------------------------------------------- ref resolution

namespace {

TriangleChain load_chain_at(const std::string& ref, const std::filesystem::path& base_dir) {
    if (is_catalog_ref(ref, "chain:")) return catalog_chain(ref);
    if (is_catalog_ref(ref, "game:")) {
        const std::string suffix = ".chain";
        if (ref.size() > suffix.size() && ref.compare(ref.size() - suffix.size(), suffix.size(), suffix) == 0)
            return catalog_game(ref.substr(0, ref.size() - suffix.size())).condition;
        throw ParseError("game ids name a chain as <game-id>.chain");
    }
    std::filesystem::path p(ref);
    if (p.is_relative()) p = base_dir / p;
    return parse_chain(slurp(p), p.parent_path());
}

} // namespace

ParsedAutomaton load_automaton(const std::string& ref) {
    return resolve_automaton(ref, std::filesystem::current_path());
}

PushdownProcess load_process(const std::string& ref) {
    if (is_catalog_ref(ref, "process:")) return catalog_process(ref);
    if (is_catalog_ref(ref, "game:")) {
        const std::string suffix = ".process";
        if (ref.size() > suffix.size() && ref.compare(ref.size() - suffix.size(), suffix.size(), suffix) == 0)
            return catalog_game(ref.substr(0, ref.size() - suffix.size())).process;
        throw ParseError("game ids name a process as <game-id>.process");
    }
    return parse_process(slurp(ref));
}

TriangleChain load_chain(const std::string& ref) {
    return load_chain_at(ref, std::filesystem::current_path());
}

GameInstance load_game(const std::string& ref) {
    if (is_catalog_ref(ref, "game:")) return catalog_game(ref);
    std::filesystem::path p(ref);
    return parse_game(slurp(p), p.parent_path());
}

} // namespace pdw
