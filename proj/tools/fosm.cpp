// fosm: command-line front end for the stable model library.

#include <fosm/error.hpp>
#include <fosm/formula_parser.hpp>
#include <fosm/incremental.hpp>
#include <fosm/printer.hpp>
#include <fosm/sm.hpp>
#include <fosm/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace fosm;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    bool ascii = false;
    bool formula = false;
    std::string intensional;
    std::size_t max_candidates = std::size_t{1} << 24;
    int jobs = 1;

    [[nodiscard]] PrintOptions print() const { return PrintOptions{ascii}; }
    [[nodiscard]] EngineOptions engine() const { return EngineOptions{max_candidates, static_cast<unsigned>(jobs)}; }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

bool formula_file(const std::string& path, const Settings& s) {
    return s.formula || (path.size() > 3 && path.ends_with(".fo"));
}

// A program file unless `--formula` is given or the file ends in `.fo`.
Formula load_sentence(const std::string& path, const Settings& s) {
    std::string text = read_file(path);
    if (formula_file(path, s))
        return parse_formula(text);
    return fol_representation(parse_program(text));
}

std::vector<std::string> split_top_level(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(')
            ++depth;
        if (c == ')')
            --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

// `p,q/2`; a bare name takes its arity from `context` when that is unique.
PredicateList parse_predicates(const std::string& text, const PredicateList& context) {
    PredicateList out;
    for (const auto& item : split_top_level(text)) {
        auto slash = item.find('/');
        Predicate p{item.substr(0, slash), 0};
        if (slash != std::string::npos) {
            try {
                p.arity = std::stoi(item.substr(slash + 1));
            } catch (const std::exception&) {
                throw UsageError("bad predicate '" + item + "'");
            }
        } else {
            int found = 0;
            for (const auto& q : context)
                if (q.name == p.name) {
                    p.arity = q.arity;
                    ++found;
                }
            if (found > 1)
                throw UsageError("predicate '" + item + "' is ambiguous; write it as name/arity");
        }
        if (p.name.empty())
            throw UsageError("empty predicate name");
        out = list_union(out, {p});
    }
    return out;
}

AtomSet parse_atoms(const std::string& text) {
    AtomSet out;
    for (const auto& item : split_top_level(text))
        out.insert(parse_ground_atom(item));
    return out;
}

// Facts of a ground program file as true atoms.
AtomSet load_facts(const std::string& path) {
    AtomSet out;
    for (const auto& r : parse_program(read_file(path)).rules) {
        if (!r.is_fact() || !r.is_ground() || r.head.front().negated)
            throw UsageError(path + ": line " + std::to_string(r.line) + " is not a ground fact");
        out.insert(ground_atom(r.head.front().atom));
    }
    return out;
}

void print_models(const std::vector<AtomSet>& models) {
    for (const auto& m : models)
        std::cout << to_string(m) << "\n";
    if (models.empty())
        std::cout << "no stable models\n";
}

PredicateList intensional_or_all(const Settings& s, const Formula& f) {
    PredicateList all = sorted(predicates_of(f));
    return s.intensional.empty() ? all : parse_predicates(s.intensional, all);
}

int cmd_fol(const std::string& path, const Settings& s) {
    std::cout << to_string(fol_representation(parse_program(read_file(path))), s.print()) << "\n";
    return 0;
}

int cmd_sm(const std::string& path, const Settings& s) {
    Formula f = load_sentence(path, s);
    std::cout << to_string(build_sm(f, intensional_or_all(s, f)), s.print()) << "\n";
    return 0;
}

int cmd_solve(const std::string& path, const Settings& s) {
    Formula f = load_sentence(path, s);
    if (s.intensional.empty()) {
        print_models(answer_sets(f, s.engine()));
        return 0;
    }
    // Every extent of the other predicates, then the stable models over them.
    PredicateList p = intensional_or_all(s, f);
    Signature sig = herbrand_signature(f);
    Signature rest = sig;
    rest.predicates.clear();
    for (const auto& q : sig.predicates)
        if (!contains(p, q))
            rest.predicates.insert(q);
    std::vector<AtomSet> out;
    for (const auto& x : herbrand_models(Formula::truth(), rest, s.engine()))
        for (const auto& m : stable_models(f, p, PartialInterpretation::herbrand(rest, x), s.engine()))
            out.push_back(m.atoms());
    std::sort(out.begin(), out.end());
    print_models(out);
    return 0;
}

int cmd_deps(const std::string& path, const Settings& s) {
    Formula f = load_sentence(path, s);
    std::cout << to_dot(dependency_graph(f, intensional_or_all(s, f)));
    return 0;
}

int cmd_split(const std::string& first, const std::string& second, const std::string& shared, const std::string& p_text,
              const std::string& q_text, const Settings& s) {
    Formula f = load_sentence(first, s), g = load_sentence(second, s);
    Formula h = shared.empty() ? Formula::truth() : load_sentence(shared, s);
    PredicateList context = predicates_of(Formula::conj(Formula::conj(f, g), h));
    PredicateList p = p_text.empty() ? head_predicates(f) : parse_predicates(p_text, context);
    PredicateList q = q_text.empty() ? head_predicates(g) : parse_predicates(q_text, context);
    std::cout << "p = " << to_string(p) << ", q = " << to_string(q) << "\n";
    SplitReport r = check_split(f, g, h, p, q);
    std::cout << r.describe();
    return r.ok() ? 0 : 1;
}

FOModule load_module(const std::string& path) {
    std::vector<std::string> warnings;
    FOModule m = module_from_program(parse_program(read_file(path)), &warnings);
    for (const auto& w : warnings)
        std::cerr << path << ": warning: " << w << "\n";
    return m;
}

DLPModule load_dlp_module(const std::string& path) {
    Program p = parse_program(read_file(path));
    DLPModule m;
    m.rules = p.rules;
    auto atoms = [&](const std::optional<PredicateList>& preds) {
        AtomSet out;
        for (const auto& q : preds.value_or(PredicateList{})) {
            if (q.arity != 0)
                throw UsageError(path + ": DLP-module interfaces list 0-ary atoms, not " + to_string(q));
            out.insert(GroundAtom{q.name, {}});
        }
        return out;
    };
    m.inputs = atoms(p.inputs);
    m.outputs = atoms(p.outputs);
    m.validate();
    return m;
}

int cmd_modsolve(const std::string& module_path, const std::string& input_path, const Settings& s) {
    FOModule m = load_module(module_path);
    AtomSet facts = input_path.empty() ? AtomSet{} : load_facts(input_path);
    Signature sig = symbols_of(m.formula());
    for (const auto& a : facts) {
        Predicate p{a.predicate, static_cast<int>(a.args.size())};
        if (!contains(m.inputs, p))
            throw Error("input atom " + to_string(a) + " is not over an input predicate");
        for (const auto& arg : a.args)
            sig.objects.insert(arg);
    }
    sig.predicates.clear();
    sig.predicates.insert(m.inputs.begin(), m.inputs.end());
    PartialInterpretation inputs = PartialInterpretation::herbrand(sig, facts);
    std::vector<AtomSet> out;
    for (const auto& i : module_stable_models(m, inputs, s.engine()))
        out.push_back(i.atoms());
    print_models(out);
    return 0;
}

int cmd_join(const std::string& first, const std::string& second, bool dlp, const Settings& s) {
    if (dlp) {
        DLPModule a = load_dlp_module(first), b = load_dlp_module(second);
        DLPJoinReport r = dlp_joinable(a, b);
        if (!r.ok()) {
            std::cout << r.describe();
            return 1;
        }
        std::cout << to_string(dlp_join(a, b)) << "\n";
        return 0;
    }
    FOModule a = load_module(first), b = load_module(second);
    JoinReport r = joinable(a, b);
    if (!r.ok()) {
        std::cout << r.describe();
        return 1;
    }
    std::cout << to_string(join(a, b), s.print()) << "\n";
    return 0;
}

int cmd_instantiate(const std::string& path, const std::string& input, bool dm, const Settings& s) {
    if (dm) {
        if (formula_file(path, s))
            throw UsageError("--dm needs a program file");
        std::cout << to_string(dm_instantiate(parse_program(read_file(path)), parse_atoms(input))) << "\n";
        return 0;
    }
    Formula f = load_sentence(path, s);
    std::cout << format_trace(fm_instantiate(f, parse_predicates(input, predicates_of(f))), s.print());
    return 0;
}

int cmd_incr(const std::string& path, long long step, const Settings& s) {
    IncrementalTheory t = IncrementalTheory::from_program(parse_program(read_file(path)));
    AcyclicityReport report = acyclic_check(t, step);
    if (!report.ok()) {
        std::cout << report.describe();
        return 1;
    }
    AssemblyState a = assemble(t, step);
    for (std::size_t i = 0; i < a.accumulated.size(); ++i)
        std::cout << "P" << i << ": Out = " << to_string(a.accumulated[i].outputs) << "\n";
    std::cout << "R" << step << ": Out = " << to_string(a.result.outputs) << "\n";
    std::vector<AtomSet> out;
    for (const auto& i : incremental_solve(t, step, s.engine()))
        out.push_back(i.atoms());
    print_models(out);
    return 0;
}

int cmd_verify(const std::string& name, int bound, std::size_t cases, std::uint64_t seed, const Settings& s) {
    std::vector<std::string> names = name == "all" ? suite_names() : std::vector<std::string>{name};
    bool ok = true;
    for (const auto& n : names) {
        SuiteOptions opts;
        opts.seed = seed;
        opts.cases = cases;
        opts.bound = bound;
        opts.engine = s.engine();
        SuiteResult r = run_suite(n, opts);
        std::cout << r.summary() << "\n";
        for (const auto& f : r.failures)
            std::cout << "  counterexample: " << f << "\n";
        ok = ok && r.ok();
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stable models of first-order formulas, modules and incremental theories"};
    app.require_subcommand(1);
    Settings s;
    app.add_flag("--ascii", s.ascii, "Print ASCII connectives");
    app.add_option("--max-candidates", s.max_candidates, "Enumeration guard")->check(CLI::PositiveNumber);
    app.add_option("--jobs", s.jobs, "Worker threads for model search")->check(CLI::PositiveNumber);

    std::string file, file2, shared, p_text, q_text, input, model;
    bool dm = false, dlp = false;
    long long step = 0;
    int bound = 2;
    std::size_t cases = 0;
    std::uint64_t seed = 1;
    std::function<int()> action;

    auto with_formula = [&](CLI::App* sub) {
        sub->add_flag("--formula", s.formula, "The file holds a formula rather than a program");
    };

    auto* fol = app.add_subcommand("fol", "FOL-representation of a program");
    fol->add_option("file", file)->required();
    fol->callback([&] { action = [&] { return cmd_fol(file, s); }; });

    auto* sm = app.add_subcommand("sm", "Print SM[F; p]");
    sm->add_option("file", file)->required();
    sm->add_option("--intensional", s.intensional, "Intensional predicates (default: all)");
    with_formula(sm);
    sm->callback([&] { action = [&] { return cmd_sm(file, s); }; });

    auto* solve = app.add_subcommand("solve", "Herbrand stable models");
    solve->add_option("file", file)->required();
    solve->add_option("--intensional", s.intensional, "Intensional predicates (default: all)");
    with_formula(solve);
    solve->callback([&] { action = [&] { return cmd_solve(file, s); }; });

    auto* deps = app.add_subcommand("deps", "Predicate dependency graph in DOT");
    deps->add_option("file", file)->required();
    deps->add_option("--intensional", s.intensional, "Vertices (default: all predicates)");
    with_formula(deps);
    deps->callback([&] { action = [&] { return cmd_deps(file, s); }; });

    auto* split = app.add_subcommand("split", "Check whether SM[F & G & H; pq] splits");
    split->add_option("first", file, "F")->required();
    split->add_option("second", file2, "G")->required();
    split->add_option("--shared", shared, "H (default: true)");
    split->add_option("--p", p_text, "p (default: strictly positive predicates of F)");
    split->add_option("--q", q_text, "q (default: strictly positive predicates of G)");
    with_formula(split);
    split->callback([&] { action = [&] { return cmd_split(file, file2, shared, p_text, q_text, s); }; });

    auto* modsolve = app.add_subcommand("modsolve", "Stable models of a module for given input facts");
    modsolve->add_option("module", file)->required();
    modsolve->add_option("input", model, "Ground facts over the input predicates");
    modsolve->callback([&] { action = [&] { return cmd_modsolve(file, model, s); }; });

    auto* join = app.add_subcommand("join", "Join two modules");
    join->add_option("first", file)->required();
    join->add_option("second", file2)->required();
    join->add_flag("--dlp", dlp, "Treat both files as ground DLP-modules");
    join->callback([&] { action = [&] { return cmd_join(file, file2, dlp, s); }; });

    auto* inst = app.add_subcommand("instantiate", "Module instantiation with its projection trace");
    inst->add_option("file", file)->required();
    inst->add_option("--input", input, "Input predicates (ground atoms with --dm)");
    inst->add_flag("--dm", dm, "Ground program instantiation");
    with_formula(inst);
    inst->callback([&] { action = [&] { return cmd_instantiate(file, input, dm, s); }; });

    auto* incr = app.add_subcommand("incr", "Assemble and solve an incremental theory");
    incr->add_option("file", file)->required();
    incr->add_option("--step", step, "k")->check(CLI::NonNegativeNumber);
    incr->callback([&] { action = [&] { return cmd_incr(file, step, s); }; });

    auto* verify = app.add_subcommand("verify", "Run a property suite");
    std::string suite = "all";
    verify->add_option("suite", suite, "Suite name or 'all'");
    verify->add_option("--bound", bound, "Universe sizes for the splitting suite")->check(CLI::PositiveNumber);
    verify->add_option("--cases", cases, "Instances per suite (default: suite default)");
    verify->add_option("--seed", seed, "Random seed");
    verify->callback([&] { action = [&] { return cmd_verify(suite, bound, cases, seed, s); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fosm::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const fosm::ArityError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const fosm::SignatureError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const fosm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
