#include "cli.hpp"

#include "pdw/automata.hpp"
#include "pdw/battery.hpp"
#include "pdw/catalog.hpp"
#include "pdw/errors.hpp"
#include "pdw/formats.hpp"
#include "pdw/games.hpp"
#include "pdw/omega_runs.hpp"
#include "pdw/triangle.hpp"
#include "pdw/words.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <variant>

namespace pdw::cli {
namespace {

struct Usage {
    std::string message;
};

[[noreturn]] void usage(const std::string& message) { throw Usage{message}; }

struct Report {
    std::vector<std::string> human;
    std::vector<std::pair<std::string, std::string>> machine;

    void line(const std::string& s) { human.push_back(s); }
    void set(const std::string& key, const std::string& value) {
        machine.emplace_back(key, value);
    }
    void set(const std::string& key, bool value) {
        machine.emplace_back(key, value ? "true" : "false");
    }
    void set(const std::string& key, uint64_t value) {
        machine.emplace_back(key, std::to_string(value));
    }

    std::string render() const {
        std::ostringstream out;
        for (const std::string& s : human) out << s << "\n";
        out << "---\n";
        for (const auto& [k, v] : machine) out << k << "=" << v << "\n";
        return out.str();
    }
};

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) usage("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool is_catalog_ref(const std::string& arg) {
    for (const char* prefix : {"automaton:", "process:", "chain:", "game:", "lang:"})
        if (arg.rfind(prefix, 0) == 0) return true;
    return false;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

enum class FileKind { Automaton, Process, Chain, Game };

FileKind sniff_kind(const std::string& text) {
    bool has_owner = false;
    bool has_condition = false;
    bool has_chain = false;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t at = line.find_first_not_of(" \t");
        if (at == std::string::npos) continue;
        std::string_view rest(line.data() + at, line.size() - at);
        if (rest.rfind("owner:", 0) == 0) has_owner = true;
        if (rest.rfind("condition:", 0) == 0) has_condition = true;
        if (rest.rfind("element:", 0) == 0 || rest.rfind("terminal:", 0) == 0) has_chain = true;
    }
    if (has_condition) return FileKind::Game;
    if (has_chain) return FileKind::Chain;
    if (has_owner) return FileKind::Process;
    return FileKind::Automaton;
}

FiniteWord parse_stack_arg(const std::vector<std::string>& tokens, size_t from) {
    FiniteWord stack;
    for (size_t i = from; i < tokens.size(); ++i) {
        if (!Symbol::valid_token(tokens[i])) usage("bad stack symbol \"" + tokens[i] + "\"");
        stack.push_back(Symbol::intern(tokens[i]));
    }
    return stack;
}

std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string sanitize_stem(const std::string& id) {
    std::string stem = id;
    for (char& c : stem)
        if (c == ':' || c == '.') c = '_';
    return stem;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) usage("cannot write " + path.string());
    out << text;
}

int cmd_validate(const std::string& arg, Report& rep) {
    std::vector<std::string> issues;
    std::string kind;
    if (is_catalog_ref(arg)) {
        if (arg.rfind("lang:", 0) == 0) usage("nothing to validate in a language oracle");
        if (arg.rfind("automaton:", 0) == 0) {
            issues = validate_pda(catalog_automaton(arg).pda);
            kind = "automaton";
        } else if (arg.rfind("process:", 0) == 0 || ends_with(arg, ".process")) {
            issues = validate_process(load_process(arg));
            kind = "process";
        } else if (arg.rfind("chain:", 0) == 0 || ends_with(arg, ".chain")) {
            issues = chain_validate(load_chain(arg));
            kind = "chain";
        } else {
            issues = validate_game(load_game(arg));
            kind = "game";
        }
    } else {
        std::filesystem::path path(arg);
        std::string text = slurp(path);
        std::filesystem::path base = path.has_parent_path() ? path.parent_path() : ".";
        switch (sniff_kind(text)) {
            case FileKind::Automaton:
                issues = validate_pda(parse_automaton(text).pda);
                kind = "automaton";
                break;
            case FileKind::Process:
                issues = validate_process(parse_process(text));
                kind = "process";
                break;
            case FileKind::Chain:
                issues = chain_validate(parse_chain(text, base));
                kind = "chain";
                break;
            case FileKind::Game:
                issues = validate_game(parse_game(text, base));
                kind = "game";
                break;
        }
    }
    for (const std::string& issue : issues) rep.line(issue);
    if (issues.empty()) rep.line("no issues");
    rep.set("kind", kind);
    rep.set("valid", issues.empty());
    rep.set("issues", static_cast<uint64_t>(issues.size()));
    return issues.empty() ? 0 : 2;
}

int cmd_classify(const std::string& arg, Report& rep) {
    ParsedAutomaton a = load_automaton(arg);
    PdaClass cls = classify_pda(a.pda);
    rep.line(std::string(cls.deterministic ? "deterministic" : "nondeterministic") +
             (cls.real_time ? ", real-time" : ", with λ moves"));
    rep.set("deterministic", cls.deterministic);
    rep.set("realTime", cls.real_time);
    rep.set("acceptance", a.acceptance ? acceptance_kind_name(*a.acceptance) : "none");
    rep.set("states", static_cast<uint64_t>(a.pda.state_names.size()));
    return 0;
}

int cmd_accepts(const std::string& file, const std::string& word, Report& rep) {
    ParsedAutomaton a = load_automaton(file);
    if (!a.acceptance) usage("automaton has no acceptance condition");
    bool verdict;
    if (word.find('(') != std::string::npos) {
        verdict = accepts_omega(a.pda, *a.acceptance, parse_lasso(word));
    } else {
        const auto* finals = std::get_if<FinalStates>(&*a.acceptance);
        if (finals == nullptr)
            usage("finite-word acceptance needs final states; pass a lasso for ω-acceptance");
        verdict = accepts_finite(a.pda, finals->states, parse_word(word));
    }
    rep.line(verdict ? "accepted" : "rejected");
    rep.set("verdict", verdict);
    return verdict ? 0 : 1;
}

std::string completeness_name(Completeness c) {
    switch (c) {
        case Completeness::Complete: return "complete";
        case Completeness::LambdaDivergent: return "lambda-divergent";
        case Completeness::Blocked: return "blocked";
    }
    return "?";
}

int cmd_limit(const std::string& file, const std::string& lasso, Report& rep) {
    ParsedAutomaton a = load_automaton(file);
    AnalyzeOptions opts;
    if (a.acceptance)
        if (const auto* parity = std::get_if<Parity>(&*a.acceptance)) opts.coloring = *parity;
    RunAnalysis r = analyze_run(a.pda, parse_lasso(lasso), opts);
    rep.line("run is " + completeness_name(r.completeness));
    rep.set("completeness", completeness_name(r.completeness));
    rep.set("transientSteps", r.transient_steps);
    rep.set("periodSteps", r.period_steps);
    rep.set("pumpedWord", print_word(r.pumped_word));
    rep.set("limit", r.stack_limit.is_infinite() ? print_lasso(r.stack_limit.lasso())
                                                 : print_word(r.stack_limit.finite_word()));
    rep.set("strictlyUnbounded", r.strictly_unbounded);
    std::string states;
    for (StateId q : r.inf_states) {
        if (!states.empty()) states += " ";
        states += a.pda.state_name(q);
    }
    rep.set("infStates", states);
    if (r.min_inf_color) rep.set("minInfColor", static_cast<uint64_t>(*r.min_inf_color));
    return 0;
}

int cmd_triangle(const std::vector<std::string>& argv, Report& rep) {
    if (argv.size() < 2) usage("triangle member|complement ...");
    const std::string& sub = argv[1];
    if (sub == "member") {
        if (argv.size() != 4) usage("triangle member <chainfile> <lasso>");
        TriangleChain c = load_chain(argv[2]);
        bool verdict = triangle_member(c, parse_lasso(argv[3]));
        rep.line(verdict ? "member" : "not a member");
        rep.set("verdict", verdict);
        return verdict ? 0 : 1;
    }
    if (sub == "complement") {
        if (argv.size() != 5 || argv[3] != "-o")
            usage("triangle complement <chainfile> -o <dir>");
        TriangleChain c = load_chain(argv[2]);
        TriangleChain comp = complement_chain(c);
        ChainFiles files = write_chain(comp, argv[4], "complement");
        rep.line("wrote " + files.chain_file.string());
        for (const auto& part : files.parts) rep.line("wrote " + part.string());
        rep.set("chainFile", files.chain_file.string());
        rep.set("parts", static_cast<uint64_t>(files.parts.size()));
        rep.set("elements", static_cast<uint64_t>(comp.chain.size()));
        return 0;
    }
    usage("unknown triangle subcommand \"" + sub + "\"");
}

int cmd_game(const std::vector<std::string>& argv, Report& rep) {
    if (argv.size() < 2) usage("game solve|slice ...");
    const std::string& sub = argv[1];
    if (sub == "solve") {
        if (argv.size() != 4) usage("game solve <gamefile> <config>");
        GameInstance g = load_game(argv[2]);
        std::vector<std::string> tokens = split_tokens(argv[3]);
        if (tokens.empty()) usage("empty configuration, expected \"state stack...\"");
        std::optional<StateId> state = g.process.state_id(tokens[0]);
        if (!state) usage("unknown state \"" + tokens[0] + "\"");
        FiniteWord stack = parse_stack_arg(tokens, 1);
        if (stack.empty()) usage("configuration needs a nonempty stack");
        Verdict3 v = solve_bounded(g, Configuration{*state, stack}, default_bounds(stack.size()));
        switch (v.winner) {
            case Winner::EveWins:
                rep.line("Eve wins");
                rep.set("winner", std::string("eve"));
                rep.set("verdict", true);
                return 0;
            case Winner::AdamWins:
                rep.line("Adam wins");
                rep.set("winner", std::string("adam"));
                rep.set("verdict", false);
                return 1;
            case Winner::Unknown:
                rep.line("unresolved: " + v.reason);
                rep.set("winner", std::string("unknown"));
                rep.set("reason", v.reason);
                return 3;
        }
        return 3;
    }
    if (sub == "slice") {
        if (argv.size() < 5) usage("game slice <gamefile> <state> <N> [letters...]");
        GameInstance g = load_game(argv[2]);
        std::optional<StateId> q = g.process.state_id(argv[3]);
        if (!q) usage("unknown state \"" + argv[3] + "\"");
        size_t max_len = 0;
        try {
            max_len = static_cast<size_t>(std::stoul(argv[4]));
        } catch (const std::exception&) {
            usage("bad length bound \"" + argv[4] + "\"");
        }
        std::vector<Symbol> letters;
        for (size_t i = 5; i < argv.size(); ++i) {
            if (!Symbol::valid_token(argv[i])) usage("bad letter \"" + argv[i] + "\"");
            letters.push_back(Symbol::intern(argv[i]));
        }
        std::set<FiniteWord> wins =
            winning_set_slice(g, *q, max_len, default_bounds(max_len), {}, letters);
        for (const FiniteWord& w : wins) rep.line(print_word(w));
        rep.set("count", static_cast<uint64_t>(wins.size()));
        rep.set("maxLen", static_cast<uint64_t>(max_len));
        return 0;
    }
    usage("unknown game subcommand \"" + sub + "\"");
}

int cmd_catalog(const std::vector<std::string>& argv, Report& rep) {
    if (argv.size() < 2) usage("catalog export|list ...");
    const std::string& sub = argv[1];
    if (sub == "list") {
        for (const std::string& id : catalog_ids()) rep.line(id);
        rep.set("count", static_cast<uint64_t>(catalog_ids().size()));
        return 0;
    }
    if (sub != "export") usage("unknown catalog subcommand \"" + sub + "\"");
    if (argv.size() != 3 && !(argv.size() == 5 && argv[3] == "-o"))
        usage("catalog export <name> [-o <dir>]");
    const std::string& id = argv[2];
    std::optional<std::filesystem::path> dir;
    if (argv.size() == 5) dir = argv[4];
    CatalogObject obj = catalog_lookup(id);
    std::string stem = sanitize_stem(id);

    if (const auto* a = std::get_if<ParsedAutomaton>(&obj)) {
        std::string text = print_automaton(*a);
        rep.human.push_back(text);
        if (dir) {
            write_text_file(*dir / (stem + ".pda"), text);
            rep.set("file", (*dir / (stem + ".pda")).string());
        }
        rep.set("kind", std::string("automaton"));
        return 0;
    }
    if (const auto* p = std::get_if<PushdownProcess>(&obj)) {
        std::string text = print_process(*p);
        rep.human.push_back(text);
        if (dir) {
            write_text_file(*dir / (stem + ".process"), text);
            rep.set("file", (*dir / (stem + ".process")).string());
        }
        rep.set("kind", std::string("process"));
        return 0;
    }
    if (const auto* g = std::get_if<GameInstance>(&obj)) {
        std::string text = print_game(*g, id + ".chain");
        rep.human.push_back(text);
        if (dir) {
            write_text_file(*dir / (stem + ".game"), text);
            rep.set("file", (*dir / (stem + ".game")).string());
        }
        rep.set("kind", std::string("game"));
        return 0;
    }
    if (const auto* c = std::get_if<TriangleChain>(&obj)) {
        if (!dir) usage("chain export writes files, pass -o <dir>");
        ChainFiles files = write_chain(*c, *dir, stem);
        rep.line("wrote " + files.chain_file.string());
        for (const auto& part : files.parts) rep.line("wrote " + part.string());
        rep.set("kind", std::string("chain"));
        rep.set("chainFile", files.chain_file.string());
        rep.set("parts", static_cast<uint64_t>(files.parts.size()));
        return 0;
    }
    const auto& lang = std::get<NamedLanguage>(obj);
    rep.line(lang.name + ": " + lang.description);
    rep.set("kind", std::string("language"));
    rep.set("finitary", lang.finitary);
    return 0;
}

int cmd_suite(const std::vector<std::string>& argv, Report& rep) {
    std::vector<CriterionResult> results;
    if (argv.size() == 3 && argv[1] == "--criterion") {
        int n = 0;
        try {
            n = std::stoi(argv[2]);
        } catch (const std::exception&) {
            usage("bad criterion number \"" + argv[2] + "\"");
        }
        if (n < 1 || n > battery_size())
            usage("criterion number out of range 1.." + std::to_string(battery_size()));
        results.push_back(run_criterion(n));
    } else if (argv.size() == 1) {
        results = run_battery();
    } else {
        usage("suite [--criterion N]");
    }
    uint64_t passed = 0;
    uint64_t failed = 0;
    uint64_t exhausted = 0;
    for (const CriterionResult& r : results) {
        const char* status = r.passed ? "PASS" : (r.exhausted ? "EXHAUSTED" : "FAIL");
        if (r.passed)
            ++passed;
        else if (r.exhausted)
            ++exhausted;
        else
            ++failed;
        rep.line("criterion " + std::to_string(r.number) + ": " + status + "  " + r.title +
                 " (" + r.detail + ")");
    }
    rep.set("passed", passed);
    rep.set("failed", failed);
    rep.set("exhausted", exhausted);
    if (exhausted > 0) return 3;
    return failed > 0 ? 1 : 0;
}

void apply_env_ceiling() {
    const char* raw = std::getenv("WORKBENCH_STEP_CEILING");
    if (raw == nullptr || *raw == '\0') return;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0)
        usage(std::string("bad WORKBENCH_STEP_CEILING value \"") + raw + "\"");
    set_default_step_ceiling(v);
}

const char* kUsage =
    "usage: pdw <command>\n"
    "  validate <file>                      check an automaton, process, chain or game\n"
    "  classify <file>                      determinism and real-time profile\n"
    "  accepts <file> <word>                finite or ω-acceptance\n"
    "  limit <file> <lasso>                 run analysis of a deterministic automaton\n"
    "  triangle member <chainfile> <lasso>  chain membership\n"
    "  triangle complement <chainfile> -o <dir>\n"
    "  game solve <gamefile> <config>       config is \"state stack...\", bottom first\n"
    "  game slice <gamefile> <state> <N> [letters...]\n"
    "  catalog export <name> [-o <dir>]\n"
    "  catalog list\n"
    "  suite [--criterion N]                run the release battery\n"
    "files may be paths or catalog references like game:lemma42:anbn";

int dispatch(const std::vector<std::string>& argv, Report& rep) {
    if (argv.empty()) usage(kUsage);
    const std::string& cmd = argv[0];
    if (cmd == "validate") {
        if (argv.size() != 2) usage("validate <file>");
        return cmd_validate(argv[1], rep);
    }
    if (cmd == "classify") {
        if (argv.size() != 2) usage("classify <file>");
        return cmd_classify(argv[1], rep);
    }
    if (cmd == "accepts") {
        if (argv.size() != 3) usage("accepts <file> <word>");
        return cmd_accepts(argv[1], argv[2], rep);
    }
    if (cmd == "limit") {
        if (argv.size() != 3) usage("limit <file> <lasso>");
        return cmd_limit(argv[1], argv[2], rep);
    }
    if (cmd == "triangle") return cmd_triangle(argv, rep);
    if (cmd == "game") return cmd_game(argv, rep);
    if (cmd == "catalog") return cmd_catalog(argv, rep);
    if (cmd == "suite") return cmd_suite(argv, rep);
    usage("unknown command \"" + cmd + "\"\n" + kUsage);
}

} // namespace

CommandResult run_command(const std::vector<std::string>& argv) {
    Report rep;
    int code = 0;
    try {
        apply_env_ceiling();
        code = dispatch(argv, rep);
    } catch (const Usage& u) {
        rep.line(u.message);
        rep.set("error", u.message);
        code = 2;
    } catch (const ResourceLimitError& e) {
        rep.line(std::string("resource bound exhausted: ") + e.what());
        rep.set("error", std::string(e.what()));
        code = 3;
    } catch (const ParseError& e) {
        rep.line(std::string("parse error: ") + e.what());
        rep.set("error", std::string(e.what()));
        code = 2;
    } catch (const std::exception& e) {
        rep.line(std::string("error: ") + e.what());
        rep.set("error", std::string(e.what()));
        code = 2;
    }
    return {code, rep.render()};
}

} // namespace pdw::cli
