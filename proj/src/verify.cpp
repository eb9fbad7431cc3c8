#include <fosm/error.hpp>
#include <fosm/printer.hpp>
#include <fosm/verify.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

namespace fosm {

int Rng::below(int n) {
    if (n <= 0)
        throw InternalError("Rng::below needs a positive bound");
    return std::uniform_int_distribution<int>(0, n - 1)(gen_);
}

bool Rng::chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(gen_) < p; }

namespace {

using Names = std::vector<std::string>;

Names letters(int n) {
    Names out;
    for (int i = 0; i < n; ++i)
        out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

Atom prop(const std::string& name) { return Atom{Predicate{name, 0}, {}, std::nullopt}; }

Literal random_literal(Rng& rng, const Atom& a, bool double_negation = true) {
    int roll = rng.below(20);
    if (roll < 10)
        return Literal::positive(a);
    if (roll < 17 || !double_negation)
        return Literal::negative(a);
    return Literal::double_negative(a);
}

std::string program_text(const std::vector<Rule>& rules) {
    std::string out;
    for (const auto& r : rules)
        out += (out.empty() ? "" : " ") + to_string(r);
    return out.empty() ? "(empty program)" : out;
}

std::string sets_text(const std::vector<AtomSet>& sets) {
    std::string out = "[";
    for (std::size_t i = 0; i < sets.size(); ++i)
        out += (i ? ", " : "") + to_string(sets[i]);
    return out + "]";
}

PredicateList props(const Names& names) {
    PredicateList out;
    for (const auto& n : names)
        out.push_back({n, 0});
    return out;
}

AtomSet atoms_of(const Names& names, std::uint64_t mask) {
    AtomSet out;
    for (std::size_t b = 0; b < names.size(); ++b)
        if (mask >> b & 1U)
            out.insert(GroundAtom{names[b], {}});
    return out;
}

// Propositional interpretation covering exactly `names`.
PartialInterpretation prop_interpretation(const Names& names, const AtomSet& truth) {
    Signature sig;
    for (const auto& n : names)
        sig.predicates.insert({n, 0});
    AtomSet kept;
    for (const auto& a : truth)
        if (std::find(names.begin(), names.end(), a.predicate) != names.end())
            kept.insert(a);
    return PartialInterpretation::herbrand(sig, kept);
}

Names names_union(Names a, const Names& b) {
    for (const auto& n : b)
        if (std::find(a.begin(), a.end(), n) == a.end())
            a.push_back(n);
    std::sort(a.begin(), a.end());
    return a;
}

Names names_intersection(const Names& a, const Names& b) {
    Names out;
    for (const auto& n : a)
        if (std::find(b.begin(), b.end(), n) != b.end())
            out.push_back(n);
    return out;
}

class Recorder {
public:
    explicit Recorder(SuiteResult& r) : r_(r) {}
    void fail(const std::string& what) {
        ++r_.failed;
        if (r_.failures.size() < 5)
            r_.failures.push_back(what);
    }
    void check(bool ok, const std::function<std::string()>& what) {
        if (!ok)
            fail(what());
    }

private:
    SuiteResult& r_;
};

// ---------------------------------------------------------------------------
// Propositional modules
// ---------------------------------------------------------------------------

Rule random_module_rule(Rng& rng, const Names& inputs, const Names& outputs, bool extras) {
    Rule r;
    Names body_pool = names_union(inputs, outputs);
    int shape = rng.below(20);
    if (extras && shape == 0) {
        r.choice = true;
        r.head.push_back({prop(rng.pick(outputs)), false});
    } else if (shape < 3) {
        // constraint
    } else {
        int size = rng.chance(0.25) ? 2 : 1;
        for (int i = 0; i < size; ++i)
            r.head.push_back({prop(rng.pick(outputs)), false});
    }
    int body = rng.below(r.head.empty() ? 3 : 4) + (r.head.empty() ? 1 : 0);
    for (int i = 0; i < body; ++i)
        r.body.push_back(random_literal(rng, prop(rng.pick(body_pool)), extras));
    return r;
}

FOModule random_prop_module(Rng& rng, const Names& inputs, const Names& outputs, int rules) {
    FOModule m;
    for (int i = 0; i < rules; ++i)
        m.conjuncts.push_back(rule_formula(random_module_rule(rng, inputs, outputs, true)));
    m.inputs = props(inputs);
    m.outputs = props(outputs);
    return m;
}

Formula random_constraint(Rng& rng, const Names& pool) {
    Rule r;
    int size = 1 + rng.below(2);
    for (int i = 0; i < size; ++i)
        r.body.push_back(random_literal(rng, prop(rng.pick(pool))));
    return rule_formula(r);
}

struct Layout {
    Names pool;
    std::vector<Names> outputs, inputs;
};

// Disjoint output sets of 1-2 atoms each; every other atom of the pool is an
// input with probability `input_rate`.
Layout random_layout(Rng& rng, int modules, int pool_size, double input_rate) {
    Layout l;
    l.pool = letters(pool_size);
    Names order = l.pool;
    std::shuffle(order.begin(), order.end(), rng.engine());
    std::size_t next = 0;
    for (int m = 0; m < modules; ++m) {
        int size = 1 + (next + static_cast<std::size_t>(modules - m) < order.size() && rng.chance(0.5) ? 1 : 0);
        Names out(order.begin() + static_cast<long>(next), order.begin() + static_cast<long>(next) + size);
        next += static_cast<std::size_t>(size);
        std::sort(out.begin(), out.end());
        l.outputs.push_back(out);
    }
    for (int m = 0; m < modules; ++m) {
        Names in;
        for (const auto& a : l.pool)
            if (std::find(l.outputs[static_cast<std::size_t>(m)].begin(), l.outputs[static_cast<std::size_t>(m)].end(),
                          a) == l.outputs[static_cast<std::size_t>(m)].end() &&
                rng.chance(input_rate))
                in.push_back(a);
        l.inputs.push_back(in);
    }
    return l;
}

bool same_stable_models(const FOModule& a, const FOModule& b, const Names& pool, const EngineOptions& opts) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
        PartialInterpretation i = prop_interpretation(pool, atoms_of(pool, mask));
        if (satisfies_sm(i, a.formula(), a.outputs, opts) != satisfies_sm(i, b.formula(), b.outputs, opts))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

void oracle_suite(SuiteResult& res, const SuiteOptions& opts, Rng& rng, std::size_t cases) {
    Recorder rec(res);
    for (std::size_t c = 0; c < cases; ++c) {
        auto rules = random_ground_program(rng, 1 + rng.below(6), 1 + rng.below(8));
        auto lhs = answer_sets(fol_representation(rules), opts.engine);
        auto rhs = gl_answer_sets(rules, opts.engine);
        ++res.cases;
        rec.check(lhs == rhs, [&] {
            return program_text(rules) + ": formula " + sets_text(lhs) + ", reduct " + sets_text(rhs);
        });
    }
}

void module_theorem_suite(SuiteResult& res, const SuiteOptions& opts, Rng& rng, std::size_t cases) {
    Recorder rec(res);
    for (std::size_t attempt = 0; res.cases < cases && attempt < cases * 20; ++attempt) {
        Layout l = random_layout(rng, 2, 3 + rng.below(4), 0.6);
        FOModule m1 = random_prop_module(rng, l.inputs[0], l.outputs[0], 1 + rng.below(3));
        FOModule m2 = random_prop_module(rng, l.inputs[1], l.outputs[1], 1 + rng.below(3));
        Names a1 = names_union(l.inputs[0], l.outputs[0]), a2 = names_union(l.inputs[1], l.outputs[1]);
        Names common = names_intersection(a1, a2);
        if (!common.empty() && rng.chance(0.3)) {
            Formula h = random_constraint(rng, common);
            m1.conjuncts.push_back(h);
            m2.conjuncts.push_back(h);
        }
        if (!joinable(m1, m2).ok()) {
            ++res.skipped;
            continue;
        }
        ++res.cases;
        Names all = names_union(a1, a2);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
            AtomSet x = atoms_of(all, mask);
            bool ok = module_theorem_check(m1, m2, prop_interpretation(a1, x), prop_interpretation(a2, x), opts.engine);
            rec.check(ok, [&] { return to_string(m1) + " and " + to_string(m2) + " at " + to_string(x); });
            if (!ok)
                break;
        }
    }
}

void join_algebra_suite(SuiteResult& res, const SuiteOptions& opts, Rng& rng, std::size_t cases) {
    Recorder rec(res);
    for (std::size_t attempt = 0; res.cases < cases && attempt < cases * 20; ++attempt) {
        Layout l = random_layout(rng, 3, 4 + rng.below(3), 0.5);
        std::vector<FOModule> m;
        for (std::size_t i = 0; i < 3; ++i)
            m.push_back(random_prop_module(rng, l.inputs[i], l.outputs[i], 1 + rng.below(3)));
        if (rng.chance(0.2)) {
            Names common = names_intersection(names_union(l.inputs[0], l.outputs[0]),
                                              names_union(l.inputs[1], l.outputs[1]));
            if (!common.empty()) {
                Formula h = random_constraint(rng, common);
                m[0].conjuncts.push_back(h);
                m[1].conjuncts.push_back(h);
            }
        }
        auto text = [&] { return to_string(m[0]) + ", " + to_string(m[1]) + ", " + to_string(m[2]); };

        bool d12 = joinable(m[0], m[1]).ok();
        rec.check(d12 == joinable(m[1], m[0]).ok(), [&] { return "commutativity of definedness: " + text(); });
        if (d12)
            rec.check(same_stable_models(join(m[0], m[1]), join(m[1], m[0]), l.pool, opts.engine),
                      [&] { return "commutativity: " + text(); });

        bool left = d12 && joinable(join(m[0], m[1]), m[2]).ok();
        bool d23 = joinable(m[1], m[2]).ok();
        bool right = d23 && joinable(m[0], join(m[1], m[2])).ok();
        rec.check(left == right, [&] { return "associativity of definedness: " + text(); });
        if (left && right) {
            ++res.cases;
            rec.check(same_stable_models(join(join(m[0], m[1]), m[2]), join(m[0], join(m[1], m[2])), l.pool,
                                         opts.engine),
                      [&] { return "associativity: " + text(); });
        } else {
            ++res.skipped;
        }
    }
}

DLPModule random_dlp_module(Rng& rng, const Names& inputs, const Names& outputs, int rules) {
    DLPModule m;
    for (int i = 0; i < rules; ++i)
        m.rules.push_back(random_module_rule(rng, inputs, outputs, false));
    for (const auto& a : inputs)
        m.inputs.insert(GroundAtom{a, {}});
    for (const auto& a : outputs)
        m.outputs.insert(GroundAtom{a, {}});
    return m;
}

AtomSet restrict_atoms(const AtomSet& x, const AtomSet& to) {
    AtomSet out;
    for (const auto& a : x)
        if (to.count(a))
            out.insert(a);
    return out;
}

void dlp_suite(SuiteResult& res, const SuiteOptions& opts, Rng& rng, std::size_t cases) {
    Recorder rec(res);
    auto module_answer_sets = [&](const DLPModule& m) {
        auto facts = dlp_answer_sets_by_facts(m, opts.engine);
        auto choice = dlp_answer_sets_by_choice(m, opts.engine);
        rec.check(facts == choice, [&] {
            return "module answer sets of " + to_string(m) + ": by facts " + sets_text(facts) + ", by choice " +
                   sets_text(choice);
        });
        return choice;
    };
    // Module answer sets against the stable models of the first-order image.
    auto reduction = [&](const DLPModule& m, const std::vector<AtomSet>& expected) {
        FOModule f = dlp_to_fo(m);
        Names inputs;
        for (const auto& a : m.inputs)
            inputs.push_back(to_string(a));
        std::vector<AtomSet> found;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inputs.size()); ++mask)
            for (const auto& model :
                 module_stable_models(f, prop_interpretation(inputs, atoms_of(inputs, mask)), opts.engine))
                found.push_back(model.atoms());
        std::sort(found.begin(), found.end());
        std::vector<AtomSet> mapped;
        for (const auto& x : expected)
            mapped.push_back(opaque(x));
        std::sort(mapped.begin(), mapped.end());
        rec.check(found == mapped, [&] { return "first-order image of " + to_string(m) + " differs"; });
    };

    for (std::size_t attempt = 0; res.cases < cases && attempt < cases * 20; ++attempt) {
        Layout l = random_layout(rng, 2, 3 + rng.below(4), 0.5);
        std::optional<Rule> shared;
        if (rng.chance(0.3)) {
            const std::string& x = rng.pick(l.outputs[0]);
            const std::string& y = rng.pick(l.outputs[1]);
            for (auto [side, atom] : {std::pair{0, y}, std::pair{1, x}}) {
                auto& in = l.inputs[static_cast<std::size_t>(side)];
                if (std::find(in.begin(), in.end(), atom) == in.end())
                    in.push_back(atom);
            }
            Rule r;
            r.head = {{prop(x), false}, {prop(y), false}};
            Names common = names_intersection(names_union(l.inputs[0], l.outputs[0]),
                                              names_union(l.inputs[1], l.outputs[1]));
            int body = rng.below(3);
            for (int i = 0; i < body; ++i)
                r.body.push_back(random_literal(rng, prop(rng.pick(common)), false));
            shared = r;
        }
        DLPModule m1 = random_dlp_module(rng, l.inputs[0], l.outputs[0], 1 + rng.below(3));
        DLPModule m2 = random_dlp_module(rng, l.inputs[1], l.outputs[1], 1 + rng.below(3));
        if (shared) {
            m1.rules.push_back(*shared);
            m2.rules.push_back(*shared);
        }
        m1.validate();
        m2.validate();
        auto as1 = module_answer_sets(m1);
        auto as2 = module_answer_sets(m2);
        reduction(m1, as1);
        if (!dlp_joinable(m1, m2).ok()) {
            ++res.skipped;
            continue;
        }
        ++res.cases;
        DLPModule j = dlp_join(m1, m2);
        auto joined = module_answer_sets(j);
        AtomSet a1 = m1.inputs, a2 = m2.inputs;
        a1.insert(m1.outputs.begin(), m1.outputs.end());
        a2.insert(m2.outputs.begin(), m2.outputs.end());
        std::vector<AtomSet> composed;
        for (const auto& x1 : as1) {
            for (const auto& x2 : as2) {
                if (restrict_atoms(x1, a2) != restrict_atoms(x2, a1))
                    continue;
                AtomSet u = x1;
                u.insert(x2.begin(), x2.end());
                composed.push_back(u);
            }
        }
        std::sort(composed.begin(), composed.end());
        composed.erase(std::unique(composed.begin(), composed.end()), composed.end());
        rec.check(joined == composed, [&] {
            return to_string(m1) + " and " + to_string(m2) + ": join " + sets_text(joined) + ", composed " +
                   sets_text(composed);
        });
    }
}

Formula param_atom(const std::string& name, StepExpr::Kind kind, int offset) {
    return Formula::atom(Predicate{name, 0}, {}, StepExpr{kind, offset});
}

Formula random_rule_formula(Rng& rng, const std::vector<Formula>& heads, const std::vector<Formula>& body_pool,
                            double constraint_rate) {
    std::vector<Formula> body;
    int size = rng.below(3);
    for (int i = 0; i < size; ++i) {
        Formula a = rng.pick(body_pool);
        body.push_back(rng.chance(0.35) ? Formula::negation(a) : a);
    }
    if (heads.empty() || rng.chance(constraint_rate)) {
        if (body.empty())
            body.push_back(Formula::negation(rng.pick(body_pool)));
        return Formula::negation(conjoin(body));
    }
    Formula head = rng.pick(heads);
    if (heads.size() > 1 && rng.chance(0.2))
        head = Formula::disj(head, rng.pick(heads));
    return body.empty() ? head : Formula::implies(conjoin(body), head);
}

IncrementalTheory random_theory(Rng& rng) {
    using K = StepExpr::Kind;
    Formula b1 = Formula::atom({"b1", 0}, {}), b2 = Formula::atom({"b2", 0}, {});
    Formula x0 = param_atom("x", K::Constant, 0);
    Formula xt = param_atom("x", K::Counter, 0), yt = param_atom("y", K::Counter, 0);
    Formula xp = param_atom("x", K::Minus, 1), yp = param_atom("y", K::Minus, 1);
    Formula gt = param_atom("g", K::Counter, 0);

    auto conj_of = [&](int n, const std::vector<Formula>& heads, const std::vector<Formula>& pool, double rate) {
        std::vector<Formula> parts;
        for (int i = 0; i < n; ++i)
            parts.push_back(random_rule_formula(rng, heads, pool, rate));
        return conjoin(parts);
    };
    IncrementalTheory t;
    t.base = conj_of(rng.below(3), {b1, b2, x0}, {b1, b2}, 0.1);
    t.cumulative = conj_of(1 + rng.below(3), {xt, yt}, {xt, yt, xp, yp, b1}, 0.15);
    t.volatile_part = conj_of(rng.below(3), {gt}, {xt, yt, gt, b1}, 0.4);
    return t;
}

void incremental_suite(SuiteResult& res, const SuiteOptions& opts, Rng& rng, std::size_t cases) {
    Recorder rec(res);
    for (std::size_t attempt = 0; res.cases < cases && attempt < cases * 20; ++attempt) {
        IncrementalTheory t = random_theory(rng);
        long long k = rng.below(4);
        auto text = [&] {
            return "B = " + to_string(t.base) + ", P[t] = " + to_string(t.cumulative) +
                   ", Q[t] = " + to_string(t.volatile_part) + ", k = " + std::to_string(k);
        };
        if (!acyclic_check(t, k).ok()) {
            ++res.skipped;
            continue;
        }
        ++res.cases;
        try {
            AssemblyState s = assemble(t, k);
            Formula expansion = k_expansion(t, k);
            rec.check(same_members(s.result.outputs, predicates_of(expansion)),
                      [&] { return "outputs of the assembled module: " + text(); });
            std::vector<AtomSet> composed;
            for (const auto& i : incremental_solve(t, k, opts.engine))
                composed.push_back(i.atoms());
            auto direct = answer_sets(expansion, opts.engine);
            rec.check(composed == direct, [&] {
                return text() + ": assembled " + sets_text(composed) + ", expansion " + sets_text(direct);
            });
        } catch (const InternalError& e) {
            rec.fail(text() + ": " + e.what());
        }
    }
}

void projection_suite(SuiteResult& res, const SuiteOptions&, Rng& rng, std::size_t cases) {
    Recorder rec(res);
    FormulaShape shape;
    for (std::size_t c = 0; c < cases; ++c) {
        Formula f = random_formula(rng, shape);
        PredicateList p;
        for (const auto& q : shape.predicates)
            if (rng.chance(0.5))
                p.push_back(q);
        ++res.cases;
        Formula a = project_formula(f, p, RewriteStrategy::BottomUp);
        Formula b = project_formula(f, p, RewriteStrategy::TopDown);
        rec.check(a == b && to_string(a) == to_string(b), [&] {
            return "order dependence on " + to_string(f) + " onto " + to_string(p) + ": " + to_string(a) + " vs " +
                   to_string(b);
        });
        Formula again = project_formula(a, p);
        rec.check(to_string(again) == to_string(a),
                  [&] { return "not idempotent on " + to_string(f) + " onto " + to_string(p); });
        for (const auto& q : predicates_of(a))
            rec.check(contains(p, q), [&] { return to_string(q) + " survives projection of " + to_string(f); });
        Formula s1 = simplify(f, RewriteStrategy::BottomUp), s2 = simplify(f, RewriteStrategy::TopDown);
        rec.check(to_string(s1) == to_string(s2), [&] { return "simplification order dependence on " + to_string(f); });
    }
}

Rule random_fo_rule(Rng& rng, const PredicateList& heads, const PredicateList& all) {
    auto atom = [&](const Predicate& p) {
        Atom a{p, {}, std::nullopt};
        for (int i = 0; i < p.arity; ++i)
            a.args.push_back(rng.chance(0.75) ? Term::variable("X") : Term::constant("a"));
        return a;
    };
    Rule r;
    if (!rng.chance(0.15))
        r.head.push_back({atom(rng.pick(heads)), false});
    int body = rng.below(3) + (r.head.empty() ? 1 : 0);
    for (int i = 0; i < body; ++i)
        r.body.push_back(random_literal(rng, atom(rng.pick(all))));
    return r;
}

void splitting_suite(SuiteResult& res, const SuiteOptions& opts, Rng& rng, std::size_t cases) {
    Recorder rec(res);
    PredicateList p{{"p", 1}, {"q", 1}}, q{{"r", 1}, {"s", 0}};
    PredicateList all{{"p", 1}, {"q", 1}, {"r", 1}, {"s", 0}, {"e", 1}};
    auto conj_rules = [&](const PredicateList& heads) {
        std::vector<Formula> parts;
        int n = 1 + rng.below(2);
        for (int i = 0; i < n; ++i)
            parts.push_back(rule_formula(random_fo_rule(rng, heads, all)));
        return conjoin(parts);
    };
    for (std::size_t attempt = 0; res.cases < cases && attempt < cases * 20; ++attempt) {
        Formula f = conj_rules(p), g = conj_rules(q);
        Formula h = Formula::truth();
        if (rng.chance(0.3)) {
            Rule c = random_fo_rule(rng, all, all);
            c.head.clear();
            if (c.body.empty())
                c.body.push_back(Literal::negative(Atom{{"s", 0}, {}, std::nullopt}));
            h = rule_formula(c);
        }
        if (!check_split(f, g, h, p, q).ok()) {
            ++res.skipped;
            continue;
        }
        ++res.cases;
        rec.check(verify_split_equivalence(f, g, h, p, q, opts.bound, opts.engine), [&] {
            return "F = " + to_string(f) + ", G = " + to_string(g) + ", H = " + to_string(h);
        });
    }
}

void dm_fm_suite(SuiteResult& res, const SuiteOptions& opts, Rng& rng, std::size_t cases) {
    Recorder rec(res);
    for (std::size_t c = 0; c < cases; ++c) {
        int n = 2 + rng.below(5);
        Names pool = letters(n);
        Program prog;
        int rules = 1 + rng.below(6);
        for (int i = 0; i < rules; ++i)
            prog.rules.push_back(random_module_rule(rng, pool, pool, false));
        AtomSet heads = head_atoms(prog.rules);
        Names inputs;
        AtomSet input_atoms;
        for (const auto& a : pool) {
            if (!heads.count(GroundAtom{a, {}}) && rng.chance(0.5)) {
                inputs.push_back(a);
                input_atoms.insert(GroundAtom{a, {}});
            }
        }
        ++res.cases;
        auto dm = dlp_module_answer_sets(dm_instantiate(prog, input_atoms), opts.engine);
        FMResult fm = fm_instantiate(fol_representation(prog), props(inputs));
        std::vector<AtomSet> found;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inputs.size()); ++mask)
            for (const auto& m : stable_models(fm.module.formula(), fm.module.outputs,
                                               prop_interpretation(inputs, atoms_of(inputs, mask)), opts.engine))
                found.push_back(m.atoms());
        std::sort(found.begin(), found.end());
        rec.check(dm == found, [&] {
            return program_text(prog.rules) + " with inputs " + to_string(input_atoms) + ": DM " + sets_text(dm) +
                   ", FM " + sets_text(found);
        });
    }
}

void fm_equivalence_suite(SuiteResult& res, const SuiteOptions& opts, Rng& rng, std::size_t cases) {
    Recorder rec(res);
    FormulaShape shape;
    shape.depth = 4;
    shape.predicates = {{"p", 0}, {"q", 1}, {"r", 1}, {"s", 0}};
    for (std::size_t c = 0; c < cases; ++c) {
        Formula f = random_formula(rng, shape);
        PredicateList preds = sorted(predicates_of(f));
        PredicateList inputs;
        for (const auto& q : preds)
            if (rng.chance(0.4))
                inputs.push_back(q);
        PredicateList outputs = list_difference(preds, inputs);
        FMResult fm = fm_instantiate(f, inputs);
        Signature sig = symbols_of(f);
        sig.objects.insert("a");
        ++res.cases;
        for (const auto& x : herbrand_models(Formula::truth(), sig, opts.engine)) {
            PartialInterpretation i = PartialInterpretation::herbrand(sig, x);
            bool ok = satisfies_sm(i, f, outputs, opts.engine) ==
                      satisfies_sm(i, fm.module.formula(), outputs, opts.engine);
            rec.check(ok, [&] {
                return to_string(f) + " with inputs " + to_string(inputs) + " at " + to_string(x);
            });
            if (!ok)
                break;
        }
    }
}

using Suite = void (*)(SuiteResult&, const SuiteOptions&, Rng&, std::size_t);

const std::map<std::string, std::pair<Suite, std::size_t>>& suites() {
    static const std::map<std::string, std::pair<Suite, std::size_t>> table{
        {"oracle", {oracle_suite, 500}},
        {"module-theorem", {module_theorem_suite, 200}},
        {"join-algebra", {join_algebra_suite, 200}},
        {"dlp", {dlp_suite, 200}},
        {"incremental", {incremental_suite, 100}},
        {"projection", {projection_suite, 1000}},
        {"splitting", {splitting_suite, 100}},
        {"dm-fm", {dm_fm_suite, 200}},
        {"fm-equivalence", {fm_equivalence_suite, 200}},
    };
    return table;
}

} // namespace

std::vector<Rule> random_ground_program(Rng& rng, int atoms, int rules) {
    Names names = letters(atoms);
    std::vector<Rule> out;
    for (int i = 0; i < rules; ++i) {
        Rule r;
        int shape = rng.below(20);
        if (shape == 0) {
            r.choice = true;
            r.head.push_back({prop(rng.pick(names)), false});
        } else if (shape > 2) {
            int size = shape > 14 ? 2 : 1;
            for (int k = 0; k < size; ++k)
                r.head.push_back({prop(rng.pick(names)), rng.chance(0.05)});
        }
        int body = r.head.empty() ? 1 + rng.below(3) : rng.below(4);
        for (int k = 0; k < body; ++k)
            r.body.push_back(random_literal(rng, prop(rng.pick(names))));
        out.push_back(std::move(r));
    }
    return out;
}

Formula random_formula(Rng& rng, const FormulaShape& shape) {
    std::vector<std::string> scope;
    std::function<Term()> term = [&]() {
        if (!scope.empty() && (shape.objects.empty() || rng.chance(0.7)))
            return Term::variable(rng.pick(scope));
        return Term::constant(rng.pick(shape.objects));
    };
    std::function<Formula(int)> gen = [&](int depth) -> Formula {
        bool has_terms = !scope.empty() || !shape.objects.empty();
        if (depth <= 1 || rng.chance(0.2)) {
            int roll = rng.below(20);
            if (roll < 2)
                return Formula::falsity();
            if (roll < 3)
                return Formula::truth();
            if (roll < 5 && has_terms)
                return Formula::equal(term(), term());
            PredicateList usable;
            for (const auto& p : shape.predicates)
                if (p.arity == 0 || has_terms)
                    usable.push_back(p);
            if (usable.empty())
                return Formula::falsity();
            const Predicate& p = rng.pick(usable);
            std::vector<Term> args;
            for (int i = 0; i < p.arity; ++i)
                args.push_back(term());
            return Formula::atom(p, std::move(args));
        }
        int roll = rng.below(shape.quantifiers ? 12 : 9);
        if (roll < 3)
            return Formula::conj(gen(depth - 1), gen(depth - 1));
        if (roll < 5)
            return Formula::disj(gen(depth - 1), gen(depth - 1));
        if (roll < 7)
            return Formula::implies(gen(depth - 1), gen(depth - 1));
        if (roll < 9)
            return Formula::negation(gen(depth - 1));
        std::string var = "x" + std::to_string(scope.size() + 1);
        scope.push_back(var);
        Formula body = gen(depth - 1);
        scope.pop_back();
        return roll < 11 ? Formula::forall(var, body) : Formula::exists(var, body);
    };
    return gen(shape.depth);
}

std::string SuiteResult::summary() const {
    std::ostringstream out;
    out << name << ": " << cases << " cases, " << skipped << " skipped, " << failed << " failed, " << std::fixed
        << std::setprecision(2) << seconds << " s";
    return out.str();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, suite] : suites())
            out.push_back(name);
        return out;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
    auto it = suites().find(name);
    if (it == suites().end())
        throw Error("unknown property suite '" + name + "'");
    SuiteResult res;
    res.name = name;
    Rng rng(opts.seed);
    auto start = std::chrono::steady_clock::now();
    it->second.first(res, opts, rng, opts.cases ? opts.cases : it->second.second);
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

} // namespace fosm
