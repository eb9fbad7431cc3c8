#include <fosm/error.hpp>
#include <fosm/printer.hpp>
#include <fosm/program.hpp>

namespace fosm {

bool Atom::is_ground() const {
    if (step)
        return false;
    for (const auto& t : args)
        if (!t.is_ground())
            return false;
    return true;
}

Literal Literal::positive(Atom a) {
    Literal l;
    l.kind = Kind::Positive;
    l.atom = std::move(a);
    return l;
}

Literal Literal::negative(Atom a) {
    Literal l = positive(std::move(a));
    l.kind = Kind::Negative;
    return l;
}

Literal Literal::double_negative(Atom a) {
    Literal l = positive(std::move(a));
    l.kind = Kind::DoubleNegative;
    return l;
}

Literal Literal::equal(Term lhs, Term rhs) {
    Literal l;
    l.kind = Kind::Equal;
    l.lhs = std::move(lhs);
    l.rhs = std::move(rhs);
    return l;
}

Literal Literal::not_equal(Term lhs, Term rhs) {
    Literal l = equal(std::move(lhs), std::move(rhs));
    l.kind = Kind::NotEqual;
    return l;
}

Literal Literal::count(int bound, std::vector<std::string> vars, std::vector<Literal> elements, bool negated) {
    Literal l;
    l.kind = Kind::Count;
    l.negated = negated;
    l.aggregate = std::make_shared<const Aggregate>(Aggregate{bound, std::move(vars), std::move(elements)});
    return l;
}

namespace {

bool literal_ground(const Literal& l) {
    switch (l.kind) {
        case Literal::Kind::Positive:
        case Literal::Kind::Negative:
        case Literal::Kind::DoubleNegative: return l.atom.is_ground();
        case Literal::Kind::Equal:
        case Literal::Kind::NotEqual: return l.lhs->is_ground() && l.rhs->is_ground();
        case Literal::Kind::Count: return false;
    }
    return false;
}

} // namespace

bool Rule::is_ground() const {
    if (formula)
        return all_variables(*formula).empty() && !has_parameterized_atoms(*formula);
    for (const auto& h : head)
        if (!h.atom.is_ground())
            return false;
    for (const auto& l : body)
        if (!literal_ground(l))
            return false;
    return true;
}

bool Program::is_ground() const {
    for (const auto& r : rules)
        if (!r.is_ground())
            return false;
    return true;
}

std::vector<Rule> Program::section(Section s) const {
    std::vector<Rule> out;
    for (const auto& r : rules)
        if (r.section == s)
            out.push_back(r);
    return out;
}

// ---------------------------------------------------------------------------
// FOL-representation
// ---------------------------------------------------------------------------

Formula expand_count(int b, const std::vector<std::string>& vars, const Formula& body,
                     const std::set<std::string>& taken) {
    if (b < 1)
        throw Error("count aggregate bound must be at least 1");
    if (vars.empty())
        throw Error("count aggregate needs at least one variable");
    std::set<std::string> used = taken;
    used.merge(all_variables(body));
    used.insert(vars.begin(), vars.end());

    std::vector<std::vector<std::string>> copies;
    for (int i = 1; i <= b; ++i) {
        std::vector<std::string> names;
        for (const auto& v : vars) {
            std::string name = fresh_name(v + std::to_string(i), used);
            used.insert(name);
            names.push_back(name);
        }
        copies.push_back(std::move(names));
    }

    std::vector<Formula> parts;
    for (const auto& names : copies) {
        std::map<std::string, Term> sub;
        for (std::size_t k = 0; k < vars.size(); ++k)
            sub.emplace(vars[k], Term::variable(names[k]));
        for (auto& c : conjuncts(substitute(body, sub)))
            parts.push_back(std::move(c));
    }
    for (int i = 0; i < b; ++i) {
        for (int j = i + 1; j < b; ++j) {
            std::vector<Formula> eqs;
            for (std::size_t k = 0; k < vars.size(); ++k)
                eqs.push_back(Formula::equal(Term::variable(copies[i][k]), Term::variable(copies[j][k])));
            parts.push_back(Formula::negation(conjoin(eqs)));
        }
    }
    Formula out = conjoin(parts);
    for (auto it = copies.rbegin(); it != copies.rend(); ++it)
        for (auto name = it->rbegin(); name != it->rend(); ++name)
            out = Formula::exists(*name, out);
    return out;
}

Formula literal_formula(const Literal& l) {
    switch (l.kind) {
        case Literal::Kind::Positive: return l.atom.to_formula();
        case Literal::Kind::Negative: return Formula::negation(l.atom.to_formula());
        case Literal::Kind::DoubleNegative: return Formula::negation(Formula::negation(l.atom.to_formula()));
        case Literal::Kind::Equal: return Formula::equal(*l.lhs, *l.rhs);
        case Literal::Kind::NotEqual: return Formula::negation(Formula::equal(*l.lhs, *l.rhs));
        case Literal::Kind::Count: {
            std::vector<Formula> parts;
            for (const auto& e : l.aggregate->elements)
                parts.push_back(literal_formula(e));
            Formula f = expand_count(l.aggregate->bound, l.aggregate->variables, conjoin(parts));
            return l.negated ? Formula::negation(f) : f;
        }
    }
    return Formula::falsity();
}

Formula rule_formula(const Rule& r) {
    if (r.formula)
        return universal_closure(*r.formula);
    Formula head = Formula::falsity();
    if (r.choice) {
        Formula a = r.head.front().atom.to_formula();
        head = Formula::disj(a, Formula::negation(a));
    } else {
        std::vector<Formula> parts;
        for (const auto& h : r.head) {
            Formula a = h.atom.to_formula();
            parts.push_back(h.negated ? Formula::negation(a) : a);
        }
        head = disjoin(parts);
    }
    if (r.body.empty())
        return universal_closure(head);
    std::vector<Formula> body;
    for (const auto& l : r.body)
        body.push_back(literal_formula(l));
    return universal_closure(Formula::implies(conjoin(body), head));
}

Formula fol_representation(const std::vector<Rule>& rules) {
    std::vector<Formula> parts;
    parts.reserve(rules.size());
    for (const auto& r : rules)
        parts.push_back(rule_formula(r));
    return conjoin(parts);
}

Formula fol_representation(const Program& p) { return fol_representation(p.rules); }

Rule desugar_choice(const Rule& r) {
    if (!r.choice)
        return r;
    Rule out = r;
    out.choice = false;
    out.head = {HeadElement{r.head.front().atom, false}, HeadElement{r.head.front().atom, true}};
    return out;
}

// ---------------------------------------------------------------------------
// Incremental instantiation
// ---------------------------------------------------------------------------

std::string instantiated_name(const std::string& base, long long v) { return base + "_" + std::to_string(v); }

namespace {

long long checked_step(const StepExpr& s, const std::string& name, long long step) {
    long long v = s.evaluate(step);
    if (v < 0)
        throw StepError("step expression " + to_string(s) + " of '" + name + "' evaluates to " + std::to_string(v) +
                        " at step " + std::to_string(step));
    return v;
}

Atom instantiate_atom(const Atom& a, long long step) {
    if (!a.step)
        return a;
    long long v = checked_step(*a.step, a.predicate.name, step);
    return Atom{Predicate{instantiated_name(a.predicate.name, v), a.predicate.arity}, a.args, std::nullopt};
}

Literal instantiate_literal(const Literal& l, long long step) {
    Literal out = l;
    out.atom = instantiate_atom(l.atom, step);
    if (l.aggregate) {
        Aggregate agg = *l.aggregate;
        for (auto& e : agg.elements)
            e = instantiate_literal(e, step);
        out.aggregate = std::make_shared<const Aggregate>(std::move(agg));
    }
    return out;
}

} // namespace

Formula instantiate_at(const Formula& f, long long step) {
    return map_atoms(f, [step](const Formula& a) {
        if (!a.step())
            return a;
        long long v = checked_step(*a.step(), a.predicate().name, step);
        return Formula::atom(Predicate{instantiated_name(a.predicate().name, v), a.predicate().arity}, a.args());
    });
}

Rule instantiate_at(const Rule& r, long long step) {
    Rule out = r;
    if (r.formula)
        out.formula = instantiate_at(*r.formula, step);
    for (auto& h : out.head)
        h.atom = instantiate_atom(h.atom, step);
    for (auto& l : out.body)
        l = instantiate_literal(l, step);
    return out;
}

Program instantiate_at(const Program& p, long long step) {
    Program out = p;
    for (auto& r : out.rules)
        r = instantiate_at(r, step);
    return out;
}

Signature program_signature(const Program& p) {
    Signature sig = symbols_of(fol_representation(p));
    for (const auto* list : {&p.inputs, &p.outputs})
        if (*list)
            sig.predicates.insert((*list)->begin(), (*list)->end());
    return sig;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

std::string to_string(const Atom& a) {
    std::string out = a.predicate.name;
    if (a.step)
        out += "@(" + to_string(*a.step) + ")";
    if (!a.args.empty()) {
        out += "(";
        for (std::size_t i = 0; i < a.args.size(); ++i) {
            if (i)
                out += ",";
            out += to_string(a.args[i]);
        }
        out += ")";
    }
    return out;
}

std::string to_string(const Literal& l) {
    switch (l.kind) {
        case Literal::Kind::Positive: return to_string(l.atom);
        case Literal::Kind::Negative: return "not " + to_string(l.atom);
        case Literal::Kind::DoubleNegative: return "not not " + to_string(l.atom);
        case Literal::Kind::Equal: return to_string(*l.lhs) + " = " + to_string(*l.rhs);
        case Literal::Kind::NotEqual: return to_string(*l.lhs) + " != " + to_string(*l.rhs);
        case Literal::Kind::Count: {
            std::string out = l.negated ? "not " : "";
            out += std::to_string(l.aggregate->bound) + "{";
            for (std::size_t i = 0; i < l.aggregate->variables.size(); ++i)
                out += (i ? ", " : "") + l.aggregate->variables[i];
            out += " : ";
            for (std::size_t i = 0; i < l.aggregate->elements.size(); ++i)
                out += (i ? ", " : "") + to_string(l.aggregate->elements[i]);
            return out + "}";
        }
    }
    return {};
}

std::string to_string(const Rule& r) {
    if (r.formula)
        return "#formula " + to_string(*r.formula) + ".";
    std::string out;
    if (r.choice) {
        out = "{" + to_string(r.head.front().atom) + "}";
    } else {
        for (std::size_t i = 0; i < r.head.size(); ++i) {
            if (i)
                out += " ; ";
            if (r.head[i].negated)
                out += "not ";
            out += to_string(r.head[i].atom);
        }
    }
    if (!r.body.empty() || r.head.empty()) {
        out += out.empty() ? ":-" : " :-";
        for (std::size_t i = 0; i < r.body.size(); ++i)
            out += (i ? ", " : " ") + to_string(r.body[i]);
    }
    return out + ".";
}

std::string to_string(const Program& p) {
    std::string out;
    if (p.inputs)
        out += "#input " + to_string(*p.inputs).substr(1, to_string(*p.inputs).size() - 2) + ".\n";
    if (p.outputs)
        out += "#output " + to_string(*p.outputs).substr(1, to_string(*p.outputs).size() - 2) + ".\n";
    std::optional<Section> current;
    for (const auto& r : p.rules) {
        if (p.sectioned && current != r.section) {
            current = r.section;
            switch (r.section) {
                case Section::Base: out += "#base.\n"; break;
                case Section::Cumulative: out += "#cumulative " + p.counter + ".\n"; break;
                case Section::Volatile: out += "#volatile " + p.counter + ".\n"; break;
            }
        }
        out += to_string(r) + "\n";
    }
    return out;
}

} // namespace fosm
