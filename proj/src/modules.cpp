#include <fosm/error.hpp>
#include <fosm/modules.hpp>
#include <fosm/printer.hpp>

#include <algorithm>

namespace fosm {

void FOModule::validate() const {
    PredicateList common = list_intersection(inputs, outputs);
    if (!common.empty())
        throw Error("module inputs and outputs overlap on " + to_string(common));
    for (const auto& p : predicates_of(formula()))
        if (!contains(inputs, p) && !contains(outputs, p))
            throw Error("predicate " + to_string(p) + " of the module is neither an input nor an output");
}

FOModule FOModule::from_formula(const Formula& f, PredicateList inputs, PredicateList outputs) {
    return FOModule{fosm::conjuncts(f), std::move(inputs), std::move(outputs)};
}

std::string to_string(const FOModule& m, const PrintOptions& opts) {
    return "(" + to_string(m.formula(), opts) + ", " + to_string(m.inputs) + ", " + to_string(m.outputs) + ")";
}

// ---------------------------------------------------------------------------
// Joinability and join
// ---------------------------------------------------------------------------

namespace {

std::string yes_no(bool ok, const std::string& why) { return ok ? "yes\n" : "no, " + why + "\n"; }

// Removes one occurrence of each member of `take` from `from`; false if some
// member is missing.
bool remove_each(std::vector<Formula>& from, const std::vector<Formula>& take) {
    for (const auto& t : take) {
        auto it = std::find(from.begin(), from.end(), t);
        if (it == from.end())
            return false;
        from.erase(it);
    }
    return true;
}

} // namespace

std::string JoinReport::describe() const {
    std::string out = "(i) output lists disjoint: " + yes_no(outputs_disjoint, "both define " + to_string(common_outputs));
    out += "(ii) every strongly connected component within O1 or within O2: " +
           yes_no(components_ok, bad_component ? "component " + to_string(*bad_component) : "");
    out += "(iii) first module negative on O2: " +
           yes_no(first_negative, first_witness ? to_string(*first_witness) + " occurs strictly positively" : "");
    out += "(iv) second module negative on O1: " +
           yes_no(second_negative, second_witness ? to_string(*second_witness) + " occurs strictly positively" : "");
    out += ok() ? "joinable\n" : "not joinable\n";
    return out;
}

JoinReport joinable(const FOModule& m1, const FOModule& m2, const std::optional<std::vector<Formula>>& shared) {
    JoinReport r;
    r.rest1 = m1.conjuncts;
    r.rest2 = m2.conjuncts;
    if (shared) {
        r.shared = *shared;
        if (!remove_each(r.rest1, r.shared) || !remove_each(r.rest2, r.shared))
            throw Error("the declared shared part does not occur in both modules");
    } else {
        std::vector<Formula> rest1;
        for (const auto& c : m1.conjuncts) {
            auto it = std::find(r.rest2.begin(), r.rest2.end(), c);
            if (it != r.rest2.end()) {
                r.shared.push_back(c);
                r.rest2.erase(it);
            } else {
                rest1.push_back(c);
            }
        }
        r.rest1 = std::move(rest1);
    }

    r.common_outputs = list_intersection(m1.outputs, m2.outputs);
    r.outputs_disjoint = r.common_outputs.empty();

    Formula f1 = conjoin(r.rest1), f2 = conjoin(r.rest2), h = conjoin(r.shared);
    SplitReport split = check_split(f1, f2, h, m1.outputs, m2.outputs);
    r.components_ok = split.components_ok;
    r.bad_component = split.bad_component;
    r.first_witness = positive_witness(f1, m2.outputs);
    r.first_negative = !r.first_witness;
    r.second_witness = positive_witness(f2, m1.outputs);
    r.second_negative = !r.second_witness;
    return r;
}

NotJoinableError::NotJoinableError(JoinReport report)
    : Error("modules are not joinable:\n" + report.describe()), report_(std::move(report)) {}

FOModule join(const FOModule& m1, const FOModule& m2, const std::optional<std::vector<Formula>>& shared) {
    JoinReport r = joinable(m1, m2, shared);
    if (!r.ok())
        throw NotJoinableError(std::move(r));
    FOModule out;
    out.conjuncts = r.rest1;
    out.conjuncts.insert(out.conjuncts.end(), r.rest2.begin(), r.rest2.end());
    out.conjuncts.insert(out.conjuncts.end(), r.shared.begin(), r.shared.end());
    out.outputs = list_union(m1.outputs, m2.outputs);
    out.inputs = list_difference(list_union(m1.inputs, m2.inputs), out.outputs);
    return out;
}

// ---------------------------------------------------------------------------
// Stable models of modules
// ---------------------------------------------------------------------------

namespace {

void require_cover(const PartialInterpretation& i, const Formula& f, const PredicateList& extra,
                   const PredicateList& skip) {
    Signature sig = symbols_of(f);
    for (const auto& o : sig.objects)
        if (!i.objects().count(o))
            throw UncoveredConstantError("object constant '" + o + "' is not covered");
    for (const auto& [name, arity] : sig.functions)
        if (!i.functions().count(name))
            throw UncoveredConstantError("function constant '" + name + "' is not covered");
    for (const auto& p : list_union(sig.predicate_list(), extra))
        if (!contains(skip, p) && !i.covers(p))
            throw UncoveredConstantError("predicate " + to_string(p) + " is not covered");
}

} // namespace

std::vector<PartialInterpretation> module_stable_models(const FOModule& m, const PartialInterpretation& inputs,
                                                        const EngineOptions& opts) {
    Formula f = m.formula();
    require_cover(inputs, f, {}, m.outputs);
    return stable_models(f, m.outputs, inputs, opts);
}

bool module_theorem_check(const FOModule& m1, const FOModule& m2, const PartialInterpretation& i1,
                          const PartialInterpretation& i2, const EngineOptions& opts) {
    if (!compatible(i1, i2))
        throw IncompatibleError("partial interpretations are not compatible");
    require_cover(i1, m1.formula(), m1.outputs, {});
    require_cover(i2, m2.formula(), m2.outputs, {});
    FOModule joined = join(m1, m2);
    bool lhs = satisfies_sm(unite(i1, i2), joined.formula(), joined.outputs, opts);
    bool rhs = satisfies_sm(i1, m1.formula(), m1.outputs, opts) && satisfies_sm(i2, m2.formula(), m2.outputs, opts);
    return lhs == rhs;
}

FOModule module_from_program(const Program& p, std::vector<std::string>* warnings) {
    FOModule m = FOModule::from_formula(fol_representation(p), p.inputs.value_or(PredicateList{}),
                                        p.outputs.value_or(PredicateList{}));
    for (const auto& q : predicates_of(m.formula())) {
        if (contains(m.inputs, q) || contains(m.outputs, q))
            continue;
        m.outputs.push_back(q);
        if (warnings && p.outputs)
            warnings->push_back("predicate " + to_string(q) + " is not declared; treating it as an output");
    }
    m.validate();
    return m;
}

// ---------------------------------------------------------------------------
// DLP-modules
// ---------------------------------------------------------------------------

Atom to_atom(const GroundAtom& a) {
    Atom out;
    out.predicate = Predicate{a.predicate, static_cast<int>(a.args.size())};
    for (const auto& arg : a.args)
        out.args.push_back(Term::constant(arg));
    return out;
}

Predicate opaque_predicate(const GroundAtom& a) { return Predicate{to_string(a), 0}; }

AtomSet opaque(const AtomSet& atoms) {
    AtomSet out;
    for (const auto& a : atoms)
        out.insert(GroundAtom{to_string(a), {}});
    return out;
}

namespace {

std::vector<GroundAtom> rule_atoms(const Rule& r) {
    std::vector<GroundAtom> out;
    for (const auto& h : r.head)
        out.push_back(ground_atom(h.atom));
    for (const auto& l : r.body)
        if (l.kind == Literal::Kind::Positive || l.kind == Literal::Kind::Negative ||
            l.kind == Literal::Kind::DoubleNegative)
            out.push_back(ground_atom(l.atom));
    return out;
}

Rule fact(const GroundAtom& a, bool choice) {
    Rule r;
    r.head.push_back({to_atom(a), false});
    r.choice = choice;
    return r;
}

bool has_rule(const std::vector<Rule>& rules, const Rule& r) {
    std::string text = to_string(r);
    return std::any_of(rules.begin(), rules.end(), [&](const Rule& x) { return to_string(x) == text; });
}

std::string atom_list(const AtomSet& s) {
    std::string out = to_string(s);
    return out;
}

} // namespace

void DLPModule::validate() const {
    for (const auto& a : inputs)
        if (outputs.count(a))
            throw Error("atom " + to_string(a) + " is both an input and an output");
    for (const auto& r : rules) {
        if (r.formula || !r.is_ground())
            throw Error("DLP-module rules must be ground rules");
        for (const auto& l : r.body)
            if (l.kind == Literal::Kind::Count)
                throw Error("DLP-module rules cannot contain aggregates");
        for (const auto& a : rule_atoms(r))
            if (!inputs.count(a) && !outputs.count(a))
                throw Error("atom " + to_string(a) + " is neither an input nor an output");
        if (!r.head.empty() && std::none_of(r.head.begin(), r.head.end(), [&](const HeadElement& h) {
                return outputs.count(ground_atom(h.atom)) != 0;
            }))
            throw Error("rule '" + to_string(r) + "' has no head atom among the outputs");
    }
}

std::string to_string(const DLPModule& m) {
    std::string rules;
    for (std::size_t i = 0; i < m.rules.size(); ++i)
        rules += (i ? " " : "") + to_string(m.rules[i]);
    return "({" + rules + "}, " + atom_list(m.inputs) + ", " + atom_list(m.outputs) + ")";
}

std::vector<AtomSet> dlp_answer_sets_by_facts(const DLPModule& m, const EngineOptions& opts) {
    std::vector<GroundAtom> inputs(m.inputs.begin(), m.inputs.end());
    if (inputs.size() >= 63 || (std::uint64_t{1} << inputs.size()) > opts.max_candidates)
        throw EnumerationLimitError("too many input atoms");
    std::vector<AtomSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inputs.size()); ++mask) {
        std::vector<Rule> rules = m.rules;
        AtomSet chosen;
        for (std::size_t b = 0; b < inputs.size(); ++b) {
            if (mask >> b & 1U) {
                rules.push_back(fact(inputs[b], false));
                chosen.insert(inputs[b]);
            }
        }
        for (auto& x : gl_answer_sets(rules, opts)) {
            AtomSet in;
            for (const auto& a : x)
                if (m.inputs.count(a))
                    in.insert(a);
            if (in == chosen)
                out.push_back(std::move(x));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AtomSet> dlp_answer_sets_by_choice(const DLPModule& m, const EngineOptions& opts) {
    std::vector<Rule> rules = m.rules;
    for (const auto& a : m.inputs)
        rules.push_back(fact(a, true));
    return gl_answer_sets(rules, opts);
}

std::vector<AtomSet> dlp_module_answer_sets(const DLPModule& m, const EngineOptions& opts) {
    auto by_choice = dlp_answer_sets_by_choice(m, opts);
    if (by_choice != dlp_answer_sets_by_facts(m, opts))
        throw InternalError("choice-rule and fact-based module answer sets differ for " + to_string(m));
    return by_choice;
}

DependencyGraph dlp_dependency_graph(const std::vector<Rule>& rules, const AtomSet& outputs) {
    DependencyGraph g;
    for (const auto& o : outputs)
        g.vertices.push_back(opaque_predicate(o));
    for (const auto& r : rules) {
        for (const auto& h : r.head) {
            if (h.negated)
                continue;
            GroundAtom head = ground_atom(h.atom);
            if (!outputs.count(head))
                continue;
            for (const auto& l : r.body) {
                if (l.kind != Literal::Kind::Positive)
                    continue;
                GroundAtom b = ground_atom(l.atom);
                if (outputs.count(b))
                    g.edges.emplace(opaque_predicate(head), opaque_predicate(b));
            }
        }
    }
    return g;
}

std::string DLPJoinReport::describe() const {
    std::string why = witness.value_or("");
    std::string out = "(i) output sets disjoint: " + yes_no(outputs_disjoint, why);
    out += "(ii) every strongly connected component within O1 or within O2: " + yes_no(components_ok, why);
    out += "(iii) rules defining the other module's outputs are shared: " + yes_no(rules_shared, why);
    out += ok() ? "joinable\n" : "not joinable\n";
    return out;
}

DLPJoinReport dlp_joinable(const DLPModule& m1, const DLPModule& m2) {
    DLPJoinReport r;
    for (const auto& a : m1.outputs) {
        if (m2.outputs.count(a)) {
            r.outputs_disjoint = false;
            r.witness = "both define " + to_string(a);
            return r;
        }
    }
    std::vector<Rule> all = m1.rules;
    for (const auto& x : m2.rules)
        if (!has_rule(all, x))
            all.push_back(x);
    AtomSet outputs = m1.outputs;
    outputs.insert(m2.outputs.begin(), m2.outputs.end());
    PredicateList o1, o2;
    for (const auto& a : m1.outputs)
        o1.push_back(opaque_predicate(a));
    for (const auto& a : m2.outputs)
        o2.push_back(opaque_predicate(a));
    for (const auto& comp : strongly_connected_components(dlp_dependency_graph(all, outputs))) {
        auto within = [&](const PredicateList& side) {
            return std::all_of(comp.begin(), comp.end(), [&](const Predicate& x) { return contains(side, x); });
        };
        if (!within(o1) && !within(o2)) {
            r.components_ok = false;
            r.witness = "component " + to_string(comp);
            return r;
        }
    }
    auto check_rules = [&](const DLPModule& a, const DLPModule& b) {
        for (const auto& rule : a.rules) {
            bool meets = std::any_of(rule.head.begin(), rule.head.end(), [&](const HeadElement& h) {
                return b.outputs.count(ground_atom(h.atom)) != 0;
            });
            if (meets && !has_rule(b.rules, rule)) {
                r.rules_shared = false;
                r.witness = "rule '" + to_string(rule) + "' is not shared";
                return false;
            }
        }
        return true;
    };
    if (check_rules(m1, m2))
        check_rules(m2, m1);
    return r;
}

DLPModule dlp_join(const DLPModule& m1, const DLPModule& m2) {
    DLPJoinReport report = dlp_joinable(m1, m2);
    if (!report.ok())
        throw Error("DLP-modules are not joinable:\n" + report.describe());
    DLPModule out;
    out.rules = m1.rules;
    for (const auto& r : m2.rules)
        if (!has_rule(out.rules, r))
            out.rules.push_back(r);
    out.outputs = m1.outputs;
    out.outputs.insert(m2.outputs.begin(), m2.outputs.end());
    for (const auto* side : {&m1.inputs, &m2.inputs})
        for (const auto& a : *side)
            if (!out.outputs.count(a))
                out.inputs.insert(a);
    return out;
}

FOModule dlp_to_fo(const DLPModule& m) {
    auto opaque_atom = [](const Atom& a) { return Atom{opaque_predicate(ground_atom(a)), {}, std::nullopt}; };
    FOModule out;
    for (const auto& source : m.rules) {
        Rule r = source;
        for (auto& h : r.head)
            h.atom = opaque_atom(h.atom);
        for (auto& l : r.body)
            if (l.kind == Literal::Kind::Positive || l.kind == Literal::Kind::Negative ||
                l.kind == Literal::Kind::DoubleNegative)
                l.atom = opaque_atom(l.atom);
        for (auto& c : conjuncts(rule_formula(r)))
            out.conjuncts.push_back(std::move(c));
    }
    for (const auto& a : m.inputs)
        out.inputs.push_back(opaque_predicate(a));
    for (const auto& a : m.outputs)
        out.outputs.push_back(opaque_predicate(a));
    return out;
}

} // namespace fosm
