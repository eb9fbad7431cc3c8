#pragma once
// Brute-force reference implementations used only by the tests. They work
// on atom names as strings and share no code with the library's engines.

#include <fosm/dependency.hpp>
#include <fosm/program.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Names = std::set<std::string>;

inline std::string key(const fosm::Atom& a) {
    std::string out = a.predicate.name;
    if (a.args.empty())
        return out;
    out += "(";
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i)
            out += ",";
        out += a.args[i].name();
    }
    return out + ")";
}

inline Names atoms_of(const std::vector<fosm::Rule>& rules) {
    Names out;
    for (const auto& r : rules) {
        for (const auto& h : r.head)
            out.insert(key(h.atom));
        for (const auto& l : r.body)
            if (l.kind != fosm::Literal::Kind::Equal && l.kind != fosm::Literal::Kind::NotEqual)
                out.insert(key(l.atom));
    }
    return out;
}

// Positive disjunctive rule after the reduct.
struct Positive {
    std::vector<std::string> head;
    std::vector<std::string> body;
};

inline std::vector<Positive> reduct(const std::vector<fosm::Rule>& rules, const Names& x) {
    using K = fosm::Literal::Kind;
    std::vector<Positive> out;
    for (const auto& r : rules) {
        if (r.formula)
            throw std::invalid_argument("oracle: #formula");
        Positive p;
        bool drop = false;
        for (const auto& l : r.body) {
            switch (l.kind) {
                case K::Positive: p.body.push_back(key(l.atom)); break;
                case K::Negative: drop |= x.count(key(l.atom)) != 0; break;
                case K::DoubleNegative: drop |= x.count(key(l.atom)) == 0; break;
                case K::Equal: drop |= l.lhs->name() != l.rhs->name(); break;
                case K::NotEqual: drop |= l.lhs->name() == l.rhs->name(); break;
                default: throw std::invalid_argument("oracle: aggregate");
            }
        }
        if (r.choice) {
            // {a} is a ; not a
            if (!x.count(key(r.head[0].atom)))
                drop = true;
            else
                p.head.push_back(key(r.head[0].atom));
        } else {
            for (const auto& h : r.head) {
                if (!h.negated)
                    p.head.push_back(key(h.atom));
                else if (!x.count(key(h.atom)))
                    drop = true;
            }
        }
        if (!drop)
            out.push_back(std::move(p));
    }
    return out;
}

inline bool models(const std::vector<Positive>& rules, const Names& y) {
    for (const auto& r : rules) {
        bool body = std::all_of(r.body.begin(), r.body.end(), [&](const auto& a) { return y.count(a) != 0; });
        bool head = std::any_of(r.head.begin(), r.head.end(), [&](const auto& a) { return y.count(a) != 0; });
        if (body && !head)
            return false;
    }
    return true;
}

inline std::vector<Names> subsets(const std::vector<std::string>& atoms) {
    if (atoms.size() > 20)
        throw std::invalid_argument("oracle: too many atoms");
    std::vector<Names> out;
    for (std::uint32_t mask = 0; mask < (1u << atoms.size()); ++mask) {
        Names s;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (mask >> i & 1u)
                s.insert(atoms[i]);
        out.push_back(std::move(s));
    }
    return out;
}

inline std::vector<Names> proper_subsets(const Names& x) {
    auto all = subsets({x.begin(), x.end()});
    all.pop_back();
    return all;
}

/// X is an answer set iff X is a minimal model of the reduct relative to X.
inline std::vector<Names> answer_sets(const std::vector<fosm::Rule>& rules) {
    Names universe = atoms_of(rules);
    std::vector<Names> out;
    for (const auto& x : subsets({universe.begin(), universe.end()})) {
        auto red = reduct(rules, x);
        if (!models(red, x))
            continue;
        bool minimal = true;
        for (const auto& y : proper_subsets(x))
            if (models(red, y)) {
                minimal = false;
                break;
            }
        if (minimal)
            out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Classical truth of a propositional formula (0-ary atoms only).
inline bool holds(const fosm::Formula& f, const Names& x) {
    using K = fosm::Formula::Kind;
    switch (f.kind()) {
        case K::Atom:
            if (!f.args().empty())
                throw std::invalid_argument("oracle: not propositional");
            return x.count(f.predicate().name) != 0;
        case K::Equal: return f.lhs_term().name() == f.rhs_term().name();
        case K::False: return false;
        case K::And: return holds(f.left(), x) && holds(f.right(), x);
        case K::Or: return holds(f.left(), x) || holds(f.right(), x);
        case K::Implies: return !holds(f.left(), x) || holds(f.right(), x);
        default: throw std::invalid_argument("oracle: not propositional");
    }
}

/// Replaces every maximal subformula false in X by ⊥.
inline fosm::Formula reduct(const fosm::Formula& f, const Names& x) {
    using K = fosm::Formula::Kind;
    if (!holds(f, x))
        return fosm::Formula::falsity();
    switch (f.kind()) {
        case K::And: return fosm::Formula::conj(reduct(f.left(), x), reduct(f.right(), x));
        case K::Or: return fosm::Formula::disj(reduct(f.left(), x), reduct(f.right(), x));
        case K::Implies: return fosm::Formula::implies(reduct(f.left(), x), reduct(f.right(), x));
        default: return f;
    }
}

/// Stable models of a propositional formula: X is a minimal model of F^X.
inline std::vector<Names> stable_models(const fosm::Formula& f, const std::vector<std::string>& atoms) {
    std::vector<Names> out;
    for (const auto& x : subsets(atoms)) {
        if (!holds(f, x))
            continue;
        fosm::Formula red = reduct(f, x);
        bool minimal = true;
        for (const auto& y : proper_subsets(x))
            if (holds(red, y)) {
                minimal = false;
                break;
            }
        if (minimal)
            out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Components via mutual reachability in the transitive closure.
inline std::vector<fosm::PredicateList> components(const fosm::DependencyGraph& g) {
    const auto& v = g.vertices;
    std::size_t n = v.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    auto at = [&](const fosm::Predicate& p) {
        return static_cast<std::size_t>(std::find(v.begin(), v.end(), p) - v.begin());
    };
    for (std::size_t i = 0; i < n; ++i)
        reach[i][i] = true;
    for (const auto& [a, b] : g.edges)
        reach[at(a)][at(b)] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j])
                    reach[i][j] = true;
    std::vector<fosm::PredicateList> out;
    std::vector<bool> done(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (done[i])
            continue;
        fosm::PredicateList c;
        for (std::size_t j = 0; j < n; ++j)
            if (reach[i][j] && reach[j][i]) {
                c.push_back(v[j]);
                done[j] = true;
            }
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

} // namespace oracle
