#include <fosm/error.hpp>
#include <fosm/incremental.hpp>
#include <fosm/printer.hpp>

#include <algorithm>
#include <array>
#include <map>

namespace fosm {

namespace {

using Kind = Formula::Kind;
using RewriteRule = std::optional<Formula> (*)(const Formula&);

bool is_top(const Formula& f) { return f.is_truth(); }
bool is_bottom(const Formula& f) { return f.is_falsity(); }

std::optional<Formula> not_top(const Formula& f) {
    if (f.kind() == Kind::Implies && is_top(f.left()) && is_bottom(f.right()))
        return Formula::falsity();
    return std::nullopt;
}
std::optional<Formula> and_bottom_left(const Formula& f) {
    if (f.kind() == Kind::And && is_bottom(f.left()))
        return Formula::falsity();
    return std::nullopt;
}
std::optional<Formula> and_bottom_right(const Formula& f) {
    if (f.kind() == Kind::And && is_bottom(f.right()))
        return Formula::falsity();
    return std::nullopt;
}
std::optional<Formula> and_top_left(const Formula& f) {
    if (f.kind() == Kind::And && is_top(f.left()))
        return f.right();
    return std::nullopt;
}
std::optional<Formula> and_top_right(const Formula& f) {
    if (f.kind() == Kind::And && is_top(f.right()))
        return f.left();
    return std::nullopt;
}
std::optional<Formula> or_bottom_left(const Formula& f) {
    if (f.kind() == Kind::Or && is_bottom(f.left()))
        return f.right();
    return std::nullopt;
}
std::optional<Formula> or_bottom_right(const Formula& f) {
    if (f.kind() == Kind::Or && is_bottom(f.right()))
        return f.left();
    return std::nullopt;
}
std::optional<Formula> or_top_left(const Formula& f) {
    if (f.kind() == Kind::Or && is_top(f.left()))
        return Formula::truth();
    return std::nullopt;
}
std::optional<Formula> or_top_right(const Formula& f) {
    if (f.kind() == Kind::Or && is_top(f.right()))
        return Formula::truth();
    return std::nullopt;
}
// ⊥ → ⊥ is already ⊤.
std::optional<Formula> implies_bottom_left(const Formula& f) {
    if (f.kind() == Kind::Implies && is_bottom(f.left()) && !is_bottom(f.right()))
        return Formula::truth();
    return std::nullopt;
}
std::optional<Formula> implies_top_left(const Formula& f) {
    if (f.kind() == Kind::Implies && is_top(f.left()))
        return f.right();
    return std::nullopt;
}
std::optional<Formula> quantified_constant(const Formula& f) {
    if (f.is_quantifier() && (is_top(f.body()) || is_bottom(f.body())))
        return f.body();
    return std::nullopt;
}

constexpr std::array<RewriteRule, 12> table{not_top,        and_bottom_left, and_bottom_right, and_top_left,
                                            and_top_right,  or_bottom_left,  or_bottom_right,  or_top_left,
                                            or_top_right,   implies_bottom_left, implies_top_left,
                                            quantified_constant};

std::optional<Formula> rewrite_once(const Formula& f, bool reversed) {
    if (reversed) {
        for (auto it = table.rbegin(); it != table.rend(); ++it)
            if (auto r = (*it)(f))
                return r;
    } else {
        for (auto rule : table)
            if (auto r = rule(f))
                return r;
    }
    return std::nullopt;
}

Formula rebuild(const Formula& f, Formula a, Formula b) {
    switch (f.kind()) {
        case Kind::And: return Formula::conj(std::move(a), std::move(b));
        case Kind::Or: return Formula::disj(std::move(a), std::move(b));
        default: return Formula::implies(std::move(a), std::move(b));
    }
}

Formula rebuild(const Formula& f, Formula body) {
    return f.kind() == Kind::Forall ? Formula::forall(f.variable(), std::move(body))
                                    : Formula::exists(f.variable(), std::move(body));
}

Formula bottom_up(const Formula& f, bool& changed) {
    Formula out = f;
    if (f.is_binary() && !is_top(f)) {
        bool local = false;
        Formula a = bottom_up(f.left(), local);
        Formula b = bottom_up(f.right(), local);
        if (local) {
            out = rebuild(f, std::move(a), std::move(b));
            changed = true;
        }
    } else if (f.is_quantifier()) {
        bool local = false;
        Formula body = bottom_up(f.body(), local);
        if (local) {
            out = rebuild(f, std::move(body));
            changed = true;
        }
    }
    while (auto r = rewrite_once(out, false)) {
        out = *r;
        changed = true;
    }
    return out;
}

Formula top_down(const Formula& f, bool& changed) {
    Formula out = f;
    while (auto r = rewrite_once(out, true)) {
        out = *r;
        changed = true;
    }
    if (out.is_binary() && !is_top(out)) {
        bool local = false;
        Formula a = top_down(out.left(), local);
        Formula b = top_down(out.right(), local);
        if (local) {
            out = rebuild(out, std::move(a), std::move(b));
            changed = true;
        }
    } else if (out.is_quantifier()) {
        bool local = false;
        Formula body = top_down(out.body(), local);
        if (local) {
            out = rebuild(out, std::move(body));
            changed = true;
        }
    }
    return out;
}

} // namespace

Formula simplify(const Formula& f, RewriteStrategy strategy) {
    Formula out = f;
    bool changed = true;
    while (changed) {
        changed = false;
        out = strategy == RewriteStrategy::BottomUp ? bottom_up(out, changed) : top_down(out, changed);
    }
    return out;
}

Formula project_formula(const Formula& f, const PredicateList& p, RewriteStrategy strategy) {
    Formula replaced = map_atoms(f, [&](const Formula& a) {
        return a.kind() == Kind::Atom && !contains(p, a.predicate()) ? Formula::falsity() : a;
    });
    return simplify(replaced, strategy);
}

// ---------------------------------------------------------------------------
// Ground programs
// ---------------------------------------------------------------------------

AtomSet head_atoms(const std::vector<Rule>& rules) {
    AtomSet out;
    for (const auto& r : rules)
        for (const auto& h : r.head)
            if (!h.negated)
                out.insert(ground_atom(h.atom));
    return out;
}

std::vector<Rule> project_program(const std::vector<Rule>& rules, const AtomSet& x) {
    std::vector<Rule> out;
    for (const auto& r : rules) {
        if (r.formula || !r.is_ground())
            throw Error("program projection needs ground rules");
        bool keep = true;
        for (const auto& l : r.body)
            if ((l.kind == Literal::Kind::Positive || l.kind == Literal::Kind::DoubleNegative) &&
                !x.count(ground_atom(l.atom)))
                keep = false;
        if (!keep)
            continue;
        Rule kept = r;
        std::erase_if(kept.body, [&](const Literal& l) {
            return l.kind == Literal::Kind::Negative && !x.count(ground_atom(l.atom));
        });
        out.push_back(std::move(kept));
    }
    return out;
}

namespace {

void collect(const Term& t, std::set<std::string>& vars) {
    for (const auto& v : term_variables(t))
        vars.insert(v);
}

void collect(const Atom& a, std::set<std::string>& vars) {
    for (const auto& t : a.args)
        collect(t, vars);
}

Atom substitute(const Atom& a, const std::map<std::string, Term>& sub) {
    Atom out = a;
    for (auto& t : out.args)
        t = fosm::substitute(t, sub);
    return out;
}

} // namespace

Program ground_program(const Program& p, const Signature& sig) {
    if (!sig.function_free())
        throw UnsupportedError("grounding requires a function-free signature");
    std::vector<std::string> universe(sig.objects.begin(), sig.objects.end());
    Program out = p;
    out.rules.clear();
    for (const auto& r : p.rules) {
        if (r.formula)
            throw UnsupportedError("grounding does not accept #formula statements");
        std::set<std::string> vars;
        for (const auto& h : r.head)
            collect(h.atom, vars);
        for (const auto& l : r.body) {
            switch (l.kind) {
                case Literal::Kind::Count: throw UnsupportedError("grounding does not accept aggregates");
                case Literal::Kind::Equal:
                case Literal::Kind::NotEqual:
                    collect(*l.lhs, vars);
                    collect(*l.rhs, vars);
                    break;
                default: collect(l.atom, vars);
            }
        }
        if (vars.empty()) {
            out.rules.push_back(r);
            continue;
        }
        if (universe.empty())
            throw Error("cannot ground rule '" + to_string(r) + "': the Herbrand universe is empty");
        std::vector<std::string> names(vars.begin(), vars.end());
        std::vector<std::size_t> pos(names.size(), 0);
        while (true) {
            std::map<std::string, Term> sub;
            for (std::size_t i = 0; i < names.size(); ++i)
                sub.emplace(names[i], Term::constant(universe[pos[i]]));
            Rule g = r;
            for (auto& h : g.head)
                h.atom = substitute(h.atom, sub);
            for (auto& l : g.body) {
                if (l.kind == Literal::Kind::Equal || l.kind == Literal::Kind::NotEqual) {
                    l.lhs = fosm::substitute(*l.lhs, sub);
                    l.rhs = fosm::substitute(*l.rhs, sub);
                } else {
                    l.atom = substitute(l.atom, sub);
                }
            }
            out.rules.push_back(std::move(g));
            std::size_t i = names.size();
            while (i > 0 && ++pos[i - 1] == universe.size())
                pos[--i] = 0;
            if (i == 0)
                break;
        }
    }
    return out;
}

Program ground_program(const Program& p) { return ground_program(p, program_signature(p)); }

DLPModule dm_instantiate(const Program& p, const AtomSet& inputs) {
    Program g = ground_program(p);
    AtomSet x = inputs;
    AtomSet heads = head_atoms(g.rules);
    x.insert(heads.begin(), heads.end());
    DLPModule m;
    m.inputs = inputs;
    m.outputs = head_atoms(project_program(g.rules, x));
    AtomSet io = inputs;
    io.insert(m.outputs.begin(), m.outputs.end());
    m.rules = project_program(g.rules, io);
    return m;
}

FMResult fm_instantiate(const Formula& f, const PredicateList& inputs, RewriteStrategy strategy) {
    FMResult r;
    r.trace.push_back(f);
    while (true) {
        const Formula& last = r.trace.back();
        Formula next = project_formula(last, list_union(inputs, head_predicates(last)), strategy);
        bool done = next == last;
        r.trace.push_back(std::move(next));
        if (done)
            break;
    }
    r.module = FOModule::from_formula(r.trace.back(), inputs, list_difference(sorted(predicates_of(f)), inputs));
    return r;
}

std::string format_trace(const FMResult& r, const PrintOptions& opts) {
    std::string out;
    for (std::size_t i = 0; i < r.trace.size(); ++i)
        out += "F" + std::to_string(i) + " = " + to_string(r.trace[i], opts) + "\n";
    return out + "FM = " + to_string(r.module, opts) + "\n";
}

} // namespace fosm
