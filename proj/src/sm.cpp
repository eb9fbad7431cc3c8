#include <fosm/error.hpp>
#include <fosm/sm.hpp>

namespace fosm {

namespace {

void check_matched(const PredicateList& p, const PredicateList& u) {
    if (p.size() != u.size())
        throw ArityError("predicate variable list has " + std::to_string(u.size()) + " members, expected " +
                         std::to_string(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i].arity != u[i].arity)
            throw ArityError("predicate variable '" + u[i].name + "' does not match the arity of '" + p[i].name +
                             "'");
}

std::vector<Term> tuple_variables(int arity) {
    std::vector<Term> out;
    if (arity == 1)
        out.push_back(Term::variable("x"));
    else
        for (int i = 1; i <= arity; ++i)
            out.push_back(Term::variable("x" + std::to_string(i)));
    return out;
}

Formula close_over(const std::vector<Term>& vars, Formula f) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        f = Formula::forall(it->name(), f);
    return f;
}

Formula star(const Formula& f, const PredicateList& p, const PredicateList& u) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            for (std::size_t i = 0; i < p.size(); ++i)
                if (p[i] == f.predicate())
                    return Formula::atom(u[i], f.args(), f.step());
            return f;
        case Formula::Kind::Equal:
        case Formula::Kind::False: return f;
        case Formula::Kind::And: return Formula::conj(star(f.left(), p, u), star(f.right(), p, u));
        case Formula::Kind::Or: return Formula::disj(star(f.left(), p, u), star(f.right(), p, u));
        case Formula::Kind::Implies:
            return Formula::conj(Formula::implies(star(f.left(), p, u), star(f.right(), p, u)), f);
        case Formula::Kind::Forall: return Formula::forall(f.variable(), star(f.body(), p, u));
        case Formula::Kind::Exists: return Formula::exists(f.variable(), star(f.body(), p, u));
    }
    return f;
}

} // namespace

Formula star_transform(const Formula& f, const PredicateList& p, const PredicateList& u) {
    check_matched(p, u);
    return star(f, p, u);
}

Formula u_less_than_p(const PredicateList& p, const PredicateList& u) {
    check_matched(p, u);
    std::vector<Formula> below, above;
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto vars = tuple_variables(p[i].arity);
        Formula ui = Formula::atom(u[i], vars);
        Formula pi = Formula::atom(p[i], vars);
        below.push_back(close_over(vars, Formula::implies(ui, pi)));
        above.push_back(close_over(vars, Formula::implies(pi, ui)));
    }
    return Formula::conj(conjoin(below), Formula::negation(conjoin(above)));
}

SecondOrderSentence build_sm(const Formula& f, const PredicateList& p) {
    Signature sig = symbols_of(f);
    std::set<std::string> taken = sig.objects;
    for (const auto& [name, arity] : sig.functions)
        taken.insert(name);
    for (const auto& q : sig.predicates)
        taken.insert(q.name);
    for (const auto& q : p)
        taken.insert(q.name);
    PredicateList u;
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::string name = "u" + std::to_string(i + 1);
        while (taken.count(name))
            name += "'";
        taken.insert(name);
        u.push_back(Predicate{name, p[i].arity});
    }
    return SecondOrderSentence{f, p, u, u_less_than_p(p, u), star(f, p, u)};
}

Formula choice_formula(const PredicateList& p) {
    std::vector<Formula> parts;
    for (const auto& q : p) {
        auto vars = tuple_variables(q.arity);
        Formula a = Formula::atom(q, vars);
        parts.push_back(close_over(vars, Formula::disj(a, Formula::negation(a))));
    }
    return conjoin(parts);
}

std::string to_string(const SecondOrderSentence& s, const PrintOptions& opts) {
    auto names = [](const PredicateList& list) {
        std::string out;
        for (std::size_t i = 0; i < list.size(); ++i)
            out += (i ? ", " : "") + list[i].name;
        return out;
    };
    std::string vars;
    for (std::size_t i = 0; i < s.variables.size(); ++i)
        vars += (i ? " " : "") + s.variables[i].name;
    if (vars.empty())
        vars = "()";
    std::string conj = opts.ascii ? " & " : " ∧ ";
    std::string head = to_string(s.formula, opts);
    if (s.formula.kind() == Formula::Kind::Or ||
        (s.formula.kind() == Formula::Kind::Implies && !s.formula.is_negation()))
        head = "(" + head + ")";
    std::string starred = to_string(s.starred, opts);
    if (s.starred.kind() == Formula::Kind::Or || s.starred.kind() == Formula::Kind::Implies)
        starred = "(" + starred + ")";
    return head + conj + (opts.ascii ? "~exists " : "¬∃") + vars + "(((" + names(s.variables) + ") < (" +
           names(s.intensional) + "))" + conj + starred + ")";
}

} // namespace fosm
