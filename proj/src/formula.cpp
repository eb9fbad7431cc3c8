#include <fosm/error.hpp>
#include <fosm/formula.hpp>

#include <algorithm>
#include <cassert>

namespace fosm {

// ---------------------------------------------------------------------------
// Predicate lists and signatures
// ---------------------------------------------------------------------------

bool contains(const PredicateList& list, const Predicate& p) {
    return std::find(list.begin(), list.end(), p) != list.end();
}

PredicateList list_union(const PredicateList& a, const PredicateList& b) {
    PredicateList out = a;
    for (const auto& p : b)
        if (!contains(out, p))
            out.push_back(p);
    return out;
}

PredicateList list_difference(const PredicateList& a, const PredicateList& b) {
    PredicateList out;
    for (const auto& p : a)
        if (!contains(b, p))
            out.push_back(p);
    return out;
}

PredicateList list_intersection(const PredicateList& a, const PredicateList& b) {
    PredicateList out;
    for (const auto& p : a)
        if (contains(b, p))
            out.push_back(p);
    return out;
}

bool same_members(const PredicateList& a, const PredicateList& b) {
    return std::set<Predicate>(a.begin(), a.end()) == std::set<Predicate>(b.begin(), b.end());
}

PredicateList sorted(PredicateList list) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    return list;
}

void Signature::validate() const {
    for (const auto& [name, arity] : functions) {
        if (arity < 1)
            throw SignatureError("function constant '" + name + "' must have arity >= 1");
        if (objects.count(name))
            throw SignatureError("'" + name + "' is both an object and a function constant");
    }
    for (const auto& p : predicates) {
        if (p.arity < 0)
            throw SignatureError("predicate '" + p.name + "' has negative arity");
        if (objects.count(p.name))
            throw SignatureError("'" + p.name + "' is both an object and a predicate constant");
        if (functions.count(p.name))
            throw SignatureError("'" + p.name + "' is both a function and a predicate constant");
    }
}

Signature& Signature::merge(const Signature& other) {
    objects.insert(other.objects.begin(), other.objects.end());
    for (const auto& [name, arity] : other.functions) {
        auto [it, fresh] = functions.emplace(name, arity);
        if (!fresh && it->second != arity)
            throw SignatureError("function '" + name + "' used with arities " + std::to_string(it->second) +
                                 " and " + std::to_string(arity));
    }
    predicates.insert(other.predicates.begin(), other.predicates.end());
    return *this;
}

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

struct Term::Node {
    Kind kind;
    std::string name;
    std::vector<Term> args;
};

Term Term::variable(std::string name) {
    return Term(std::make_shared<const Node>(Node{Kind::Variable, std::move(name), {}}));
}
Term Term::constant(std::string name) {
    return Term(std::make_shared<const Node>(Node{Kind::Constant, std::move(name), {}}));
}
Term Term::function(std::string name, std::vector<Term> args) {
    if (args.empty())
        return constant(std::move(name));
    return Term(std::make_shared<const Node>(Node{Kind::Function, std::move(name), std::move(args)}));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }
const std::string& Term::name() const noexcept { return node_->name; }
const std::vector<Term>& Term::args() const noexcept { return node_->args; }

bool Term::is_ground() const {
    if (kind() == Kind::Variable)
        return false;
    return std::all_of(args().begin(), args().end(), [](const Term& t) { return t.is_ground(); });
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_)
        return true;
    return a.kind() == b.kind() && a.name() == b.name() && a.args() == b.args();
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (auto c = a.kind() <=> b.kind(); c != 0)
        return c;
    if (auto c = a.name() <=> b.name(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.args().begin(), a.args().end(), b.args().begin(),
                                                  b.args().end());
}

long long StepExpr::evaluate(long long step) const noexcept {
    switch (kind) {
        case Kind::Counter: return step;
        case Kind::Plus: return step + offset;
        case Kind::Minus: return step - offset;
        case Kind::Constant: return offset;
    }
    return step;
}

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------

struct Formula::Node {
    Kind kind;
    Predicate pred;
    std::vector<Term> terms; // atom arguments, or {lhs, rhs} for equality
    std::optional<StepExpr> step;
    std::optional<Formula> a; // left operand or quantifier body
    std::optional<Formula> b; // right operand
    std::string var;
};

Formula Formula::make(Node&& n) { return Formula(std::make_shared<const Node>(std::move(n))); }

Formula Formula::atom(Predicate pred, std::vector<Term> args, std::optional<StepExpr> step) {
    if (static_cast<int>(args.size()) != pred.arity)
        throw ArityError("atom '" + pred.name + "' expects " + std::to_string(pred.arity) + " arguments, got " +
                         std::to_string(args.size()));
    return make(Node{Kind::Atom, std::move(pred), std::move(args), step, {}, {}, {}});
}

Formula Formula::equal(Term lhs, Term rhs) {
    return make(Node{Kind::Equal, {}, {std::move(lhs), std::move(rhs)}, {}, {}, {}, {}});
}

Formula Formula::falsity() {
    static const Formula f = make(Node{Kind::False, {}, {}, {}, {}, {}, {}});
    return f;
}

Formula Formula::truth() {
    static const Formula t = implies(falsity(), falsity());
    return t;
}

Formula Formula::conj(Formula a, Formula b) {
    return make(Node{Kind::And, {}, {}, {}, std::move(a), std::move(b), {}});
}
Formula Formula::disj(Formula a, Formula b) {
    return make(Node{Kind::Or, {}, {}, {}, std::move(a), std::move(b), {}});
}
Formula Formula::implies(Formula a, Formula b) {
    return make(Node{Kind::Implies, {}, {}, {}, std::move(a), std::move(b), {}});
}
Formula Formula::negation(Formula f) { return implies(std::move(f), falsity()); }

Formula Formula::forall(std::string var, Formula body) {
    return make(Node{Kind::Forall, {}, {}, {}, std::move(body), {}, std::move(var)});
}
Formula Formula::exists(std::string var, Formula body) {
    return make(Node{Kind::Exists, {}, {}, {}, std::move(body), {}, std::move(var)});
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const Predicate& Formula::predicate() const {
    assert(kind() == Kind::Atom);
    return node_->pred;
}
const std::vector<Term>& Formula::args() const {
    assert(kind() == Kind::Atom);
    return node_->terms;
}
const std::optional<StepExpr>& Formula::step() const { return node_->step; }
const Term& Formula::lhs_term() const {
    assert(kind() == Kind::Equal);
    return node_->terms[0];
}
const Term& Formula::rhs_term() const {
    assert(kind() == Kind::Equal);
    return node_->terms[1];
}
const Formula& Formula::left() const {
    assert(is_binary());
    return *node_->a;
}
const Formula& Formula::right() const {
    assert(is_binary());
    return *node_->b;
}
const std::string& Formula::variable() const {
    assert(is_quantifier());
    return node_->var;
}
const Formula& Formula::body() const {
    assert(is_quantifier());
    return *node_->a;
}

bool Formula::is_truth() const noexcept {
    return kind() == Kind::Implies && node_->a->is_falsity() && node_->b->is_falsity();
}
bool Formula::is_negation() const noexcept { return kind() == Kind::Implies && node_->b->is_falsity(); }
bool Formula::is_binary() const noexcept {
    return kind() == Kind::And || kind() == Kind::Or || kind() == Kind::Implies;
}
bool Formula::is_quantifier() const noexcept { return kind() == Kind::Forall || kind() == Kind::Exists; }

// Alpha-equivalence: bound variables are compared by binder position.
namespace {
using Binders = std::vector<std::string>;

int binder_index(const Binders& b, const std::string& name) {
    for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i)
        if (b[i] == name)
            return i;
    return -1;
}

bool terms_alpha_equal(const Term& x, const Term& y, const Binders& bx, const Binders& by) {
    if (x.kind() != y.kind())
        return false;
    if (x.kind() == Term::Kind::Variable) {
        int ix = binder_index(bx, x.name());
        int iy = binder_index(by, y.name());
        if (ix != iy)
            return false;
        return ix >= 0 || x.name() == y.name();
    }
    if (x.name() != y.name() || x.args().size() != y.args().size())
        return false;
    for (std::size_t i = 0; i < x.args().size(); ++i)
        if (!terms_alpha_equal(x.args()[i], y.args()[i], bx, by))
            return false;
    return true;
}

bool alpha_equal(const Formula& x, const Formula& y, Binders& bx, Binders& by) {
    if (x.same_node(y) && bx == by)
        return true;
    if (x.kind() != y.kind())
        return false;
    switch (x.kind()) {
        case Formula::Kind::False: return true;
        case Formula::Kind::Atom: {
            if (x.predicate() != y.predicate() || x.step() != y.step())
                return false;
            for (std::size_t i = 0; i < x.args().size(); ++i)
                if (!terms_alpha_equal(x.args()[i], y.args()[i], bx, by))
                    return false;
            return true;
        }
        case Formula::Kind::Equal:
            return terms_alpha_equal(x.lhs_term(), y.lhs_term(), bx, by) &&
                   terms_alpha_equal(x.rhs_term(), y.rhs_term(), bx, by);
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
            return alpha_equal(x.left(), y.left(), bx, by) && alpha_equal(x.right(), y.right(), bx, by);
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            bx.push_back(x.variable());
            by.push_back(y.variable());
            bool eq = alpha_equal(x.body(), y.body(), bx, by);
            bx.pop_back();
            by.pop_back();
            return eq;
        }
    }
    return false;
}
} // namespace

bool operator==(const Formula& a, const Formula& b) {
    Binders bx, by;
    return alpha_equal(a, b, bx, by);
}

// ---------------------------------------------------------------------------
// Structural helpers
// ---------------------------------------------------------------------------

Formula conjoin(std::span<const Formula> parts) {
    if (parts.empty())
        return Formula::truth();
    Formula acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        acc = Formula::conj(acc, parts[i]);
    return acc;
}

Formula disjoin(std::span<const Formula> parts) {
    if (parts.empty())
        return Formula::falsity();
    Formula acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        acc = Formula::disj(acc, parts[i]);
    return acc;
}

namespace {
void collect_conjuncts(const Formula& f, std::vector<Formula>& out) {
    if (f.kind() == Formula::Kind::And) {
        collect_conjuncts(f.left(), out);
        collect_conjuncts(f.right(), out);
    } else {
        out.push_back(f);
    }
}
} // namespace

std::vector<Formula> conjuncts(const Formula& f) {
    std::vector<Formula> out;
    collect_conjuncts(f, out);
    return out;
}

std::set<std::string> term_variables(const Term& t) {
    std::set<std::string> out;
    if (t.is_variable()) {
        out.insert(t.name());
        return out;
    }
    for (const auto& a : t.args())
        out.merge(term_variables(a));
    return out;
}

namespace {
void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
    auto add_term = [&](const Term& t) {
        for (const auto& v : term_variables(t))
            if (!bound.count(v))
                out.insert(v);
    };
    switch (f.kind()) {
        case Formula::Kind::False: return;
        case Formula::Kind::Atom:
            for (const auto& t : f.args())
                add_term(t);
            return;
        case Formula::Kind::Equal:
            add_term(f.lhs_term());
            add_term(f.rhs_term());
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
            collect_free(f.left(), bound, out);
            collect_free(f.right(), bound, out);
            return;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            bool inserted = bound.insert(f.variable()).second;
            collect_free(f.body(), bound, out);
            if (inserted)
                bound.erase(f.variable());
            return;
        }
    }
}

void collect_all_vars(const Formula& f, std::set<std::string>& out) {
    switch (f.kind()) {
        case Formula::Kind::False: return;
        case Formula::Kind::Atom:
            for (const auto& t : f.args())
                out.merge(term_variables(t));
            return;
        case Formula::Kind::Equal:
            out.merge(term_variables(f.lhs_term()));
            out.merge(term_variables(f.rhs_term()));
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
            collect_all_vars(f.left(), out);
            collect_all_vars(f.right(), out);
            return;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            out.insert(f.variable());
            collect_all_vars(f.body(), out);
            return;
    }
}
} // namespace

std::set<std::string> free_variables(const Formula& f) {
    std::set<std::string> bound, out;
    collect_free(f, bound, out);
    return out;
}

std::set<std::string> all_variables(const Formula& f) {
    std::set<std::string> out;
    collect_all_vars(f, out);
    return out;
}

bool is_sentence(const Formula& f) { return free_variables(f).empty(); }

Formula universal_closure(const Formula& f) {
    auto vars = free_variables(f);
    Formula out = f;
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        out = Formula::forall(*it, out);
    return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
    if (!taken.count(base))
        return base;
    for (int i = 1;; ++i) {
        std::string candidate = base + std::to_string(i);
        if (!taken.count(candidate))
            return candidate;
    }
}

Term substitute(const Term& t, const std::map<std::string, Term>& sub) {
    switch (t.kind()) {
        case Term::Kind::Variable: {
            auto it = sub.find(t.name());
            return it == sub.end() ? t : it->second;
        }
        case Term::Kind::Constant: return t;
        case Term::Kind::Function: {
            std::vector<Term> args;
            args.reserve(t.args().size());
            for (const auto& a : t.args())
                args.push_back(substitute(a, sub));
            return Term::function(t.name(), std::move(args));
        }
    }
    return t;
}

Formula substitute(const Formula& f, const std::map<std::string, Term>& sub) {
    if (sub.empty())
        return f;
    switch (f.kind()) {
        case Formula::Kind::False: return f;
        case Formula::Kind::Atom: {
            std::vector<Term> args;
            args.reserve(f.args().size());
            for (const auto& a : f.args())
                args.push_back(substitute(a, sub));
            return Formula::atom(f.predicate(), std::move(args), f.step());
        }
        case Formula::Kind::Equal: return Formula::equal(substitute(f.lhs_term(), sub), substitute(f.rhs_term(), sub));
        case Formula::Kind::And: return Formula::conj(substitute(f.left(), sub), substitute(f.right(), sub));
        case Formula::Kind::Or: return Formula::disj(substitute(f.left(), sub), substitute(f.right(), sub));
        case Formula::Kind::Implies: return Formula::implies(substitute(f.left(), sub), substitute(f.right(), sub));
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            const std::string& v = f.variable();
            auto body_free = free_variables(f.body());
            std::map<std::string, Term> inner;
            std::set<std::string> incoming;
            for (const auto& [name, term] : sub) {
                if (name == v || !body_free.count(name))
                    continue;
                inner.emplace(name, term);
                incoming.merge(term_variables(term));
            }
            if (inner.empty())
                return f;
            std::string var = v;
            Formula body = f.body();
            if (incoming.count(v)) {
                std::set<std::string> taken = all_variables(f.body());
                taken.insert(incoming.begin(), incoming.end());
                for (const auto& [name, term] : inner)
                    taken.insert(name);
                var = fresh_name(v, taken);
                body = substitute(body, {{v, Term::variable(var)}});
            }
            body = substitute(body, inner);
            return f.kind() == Formula::Kind::Forall ? Formula::forall(var, body) : Formula::exists(var, body);
        }
    }
    return f;
}

Formula map_atoms(const Formula& f, const std::function<Formula(const Formula&)>& fn) {
    switch (f.kind()) {
        case Formula::Kind::Atom: return fn(f);
        case Formula::Kind::False:
        case Formula::Kind::Equal: return f;
        case Formula::Kind::And: return Formula::conj(map_atoms(f.left(), fn), map_atoms(f.right(), fn));
        case Formula::Kind::Or: return Formula::disj(map_atoms(f.left(), fn), map_atoms(f.right(), fn));
        case Formula::Kind::Implies: return Formula::implies(map_atoms(f.left(), fn), map_atoms(f.right(), fn));
        case Formula::Kind::Forall: return Formula::forall(f.variable(), map_atoms(f.body(), fn));
        case Formula::Kind::Exists: return Formula::exists(f.variable(), map_atoms(f.body(), fn));
    }
    return f;
}

// ---------------------------------------------------------------------------
// Polarity
// ---------------------------------------------------------------------------

namespace {
void walk(const Formula& f, int depth, const std::function<void(const Formula&, int)>& visit) {
    visit(f, depth);
    switch (f.kind()) {
        case Formula::Kind::And:
        case Formula::Kind::Or:
            walk(f.left(), depth, visit);
            walk(f.right(), depth, visit);
            break;
        case Formula::Kind::Implies:
            walk(f.left(), depth + 1, visit);
            walk(f.right(), depth, visit);
            break;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: walk(f.body(), depth, visit); break;
        default: break;
    }
}
} // namespace

void for_each_occurrence(const Formula& f, const std::function<void(const Formula&, int)>& visit) {
    walk(f, 0, visit);
}

bool is_negative_on(const Formula& f, const PredicateList& preds) {
    bool negative = true;
    for_each_occurrence(f, [&](const Formula& sub, int depth) {
        if (negative && depth == 0 && sub.kind() == Formula::Kind::Atom && contains(preds, sub.predicate()))
            negative = false;
    });
    return negative;
}

PredicateList head_predicates(const Formula& f) {
    std::set<Predicate> heads;
    for_each_occurrence(f, [&](const Formula& sub, int depth) {
        if (depth == 0 && sub.kind() == Formula::Kind::Atom)
            heads.insert(sub.predicate());
    });
    return {heads.begin(), heads.end()};
}

std::vector<Formula> rules_of(const Formula& f) {
    std::vector<Formula> rules;
    for_each_occurrence(f, [&](const Formula& sub, int depth) {
        if (depth == 0 && sub.kind() == Formula::Kind::Implies)
            rules.push_back(sub);
    });
    return rules;
}

// ---------------------------------------------------------------------------
// Symbols
// ---------------------------------------------------------------------------

namespace {
void term_symbols(const Term& t, Signature& sig) {
    switch (t.kind()) {
        case Term::Kind::Variable: return;
        case Term::Kind::Constant: sig.objects.insert(t.name()); return;
        case Term::Kind::Function: {
            auto [it, fresh] = sig.functions.emplace(t.name(), static_cast<int>(t.args().size()));
            if (!fresh && it->second != static_cast<int>(t.args().size()))
                throw ArityError("function '" + t.name() + "' used with different arities");
            for (const auto& a : t.args())
                term_symbols(a, sig);
            return;
        }
    }
}
} // namespace

Signature symbols_of(const Formula& f) {
    Signature sig;
    for_each_occurrence(f, [&](const Formula& sub, int) {
        if (sub.kind() == Formula::Kind::Atom) {
            sig.predicates.insert(sub.predicate());
            for (const auto& t : sub.args())
                term_symbols(t, sig);
        } else if (sub.kind() == Formula::Kind::Equal) {
            term_symbols(sub.lhs_term(), sig);
            term_symbols(sub.rhs_term(), sig);
        }
    });
    return sig;
}

PredicateList predicates_of(const Formula& f) {
    std::set<Predicate> preds;
    for_each_occurrence(f, [&](const Formula& sub, int) {
        if (sub.kind() == Formula::Kind::Atom)
            preds.insert(sub.predicate());
    });
    return {preds.begin(), preds.end()};
}

bool has_parameterized_atoms(const Formula& f) {
    bool found = false;
    for_each_occurrence(f, [&](const Formula& sub, int) {
        if (sub.kind() == Formula::Kind::Atom && sub.step())
            found = true;
    });
    return found;
}

} // namespace fosm
