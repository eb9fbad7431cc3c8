// Answer sets of ground programs by the reduct definition. Shares no code
// with formulas or the SM evaluator.

#include <fosm/error.hpp>
#include <fosm/herbrand.hpp>
#include <fosm/printer.hpp>

#include <algorithm>
#include <map>

namespace fosm {

GroundAtom ground_atom(const Atom& a) {
    if (!a.is_ground())
        throw UnsupportedError("atom '" + to_string(a) + "' is not ground");
    GroundAtom out{a.predicate.name, {}};
    for (const auto& t : a.args)
        out.args.push_back(to_string(t));
    return out;
}

namespace {

struct GroundRule {
    std::uint64_t head = 0;     // positive head atoms
    std::uint64_t head_not = 0; // `not a` head elements
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
    std::uint64_t dneg = 0;
};

bool is_model(const std::vector<GroundRule>& reduct, std::uint64_t y) {
    for (const auto& r : reduct)
        if ((r.pos & ~y) == 0 && (r.head & y) == 0)
            return false;
    return true;
}

} // namespace

std::vector<AtomSet> gl_answer_sets(const std::vector<Rule>& ground, const EngineOptions& opts) {
    std::map<GroundAtom, int> index;
    auto id = [&](const Atom& a) {
        auto [it, fresh] = index.emplace(ground_atom(a), 0);
        return it;
    };
    for (const auto& r : ground) {
        if (r.formula)
            throw UnsupportedError("the reduct oracle does not accept #formula statements");
        for (const auto& h : r.head)
            id(h.atom);
        for (const auto& l : r.body) {
            if (l.kind == Literal::Kind::Count)
                throw UnsupportedError("the reduct oracle does not accept aggregates");
            if (l.kind != Literal::Kind::Equal && l.kind != Literal::Kind::NotEqual)
                id(l.atom);
            else if (!l.lhs->is_ground() || !l.rhs->is_ground())
                throw UnsupportedError("the reduct oracle needs a ground program");
        }
    }
    if (index.size() >= 63)
        throw EnumerationLimitError("too many atoms for the reduct oracle");
    int next = 0;
    std::vector<GroundAtom> atoms;
    for (auto& [a, i] : index) {
        i = next++;
        atoms.push_back(a);
    }
    auto bit = [&](const Atom& a) { return std::uint64_t{1} << index.at(ground_atom(a)); };

    std::vector<GroundRule> rules;
    for (const auto& source : ground) {
        Rule r = desugar_choice(source);
        GroundRule g;
        bool body_false = false;
        for (const auto& h : r.head)
            (h.negated ? g.head_not : g.head) |= bit(h.atom);
        for (const auto& l : r.body) {
            switch (l.kind) {
                case Literal::Kind::Positive: g.pos |= bit(l.atom); break;
                case Literal::Kind::Negative: g.neg |= bit(l.atom); break;
                case Literal::Kind::DoubleNegative: g.dneg |= bit(l.atom); break;
                case Literal::Kind::Equal: body_false |= to_string(*l.lhs) != to_string(*l.rhs); break;
                case Literal::Kind::NotEqual: body_false |= to_string(*l.lhs) == to_string(*l.rhs); break;
                case Literal::Kind::Count: break;
            }
        }
        if (!body_false)
            rules.push_back(g);
    }

    std::size_t n = atoms.size();
    if (n >= 63 || (std::uint64_t{1} << n) > opts.max_candidates)
        throw EnumerationLimitError("reduct oracle over " + std::to_string(n) + " atoms exceeds the candidate limit");

    std::vector<AtomSet> out;
    std::vector<GroundRule> reduct;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        reduct.clear();
        for (const auto& r : rules) {
            if (r.neg & x)
                continue;
            if ((r.dneg & ~x) != 0)
                continue;
            if ((r.head_not & ~x) != 0)
                continue;
            GroundRule red;
            red.head = r.head;
            red.pos = r.pos;
            reduct.push_back(red);
        }
        if (!is_model(reduct, x))
            continue;
        bool minimal = true;
        // Proper subsets of x, by the standard submask walk.
        for (std::uint64_t y = (x - 1) & x; minimal && y != x; y = (y - 1) & x) {
            if (is_model(reduct, y))
                minimal = false;
            if (y == 0)
                break;
        }
        if (!minimal)
            continue;
        AtomSet set;
        for (std::size_t b = 0; b < n; ++b)
            if (x >> b & 1U)
                set.insert(atoms[b]);
        out.push_back(std::move(set));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AtomSet> gl_answer_sets(const Program& ground, const EngineOptions& opts) {
    return gl_answer_sets(ground.rules, opts);
}

} // namespace fosm
