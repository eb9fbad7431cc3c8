#include <fosm/error.hpp>
#include <fosm/incremental.hpp>
#include <fosm/printer.hpp>

#include <algorithm>
#include <map>

namespace fosm {

IncrementalTheory IncrementalTheory::from_program(const Program& p) {
    IncrementalTheory t;
    t.base = fol_representation(p.section(Section::Base));
    t.cumulative = fol_representation(p.section(Section::Cumulative));
    t.volatile_part = fol_representation(p.section(Section::Volatile));
    return t;
}

Formula IncrementalTheory::base_at() const { return instantiate_at(base, 0); }
Formula IncrementalTheory::cumulative_at(long long i) const { return instantiate_at(cumulative, i); }
Formula IncrementalTheory::volatile_at(long long i) const { return instantiate_at(volatile_part, i); }

namespace {

struct Component {
    std::string name;
    Formula formula;
};

std::vector<Component> components(const IncrementalTheory& t, long long k) {
    if (k < 0)
        throw StepError("the step must be nonnegative");
    std::vector<Component> out{{"B", t.base_at()}};
    for (long long i = 1; i <= k; ++i)
        out.push_back({"P[" + std::to_string(i) + "]", t.cumulative_at(i)});
    out.push_back({"Q[" + std::to_string(k) + "]", t.volatile_at(k)});
    return out;
}

} // namespace

std::string AcyclicityReport::describe() const {
    if (ok())
        return "acyclic\n";
    std::string out;
    for (const auto& v : violations)
        out += v.later + " is not negative on " + to_string(v.predicate) + " of " + v.earlier + "\n";
    return out + "not acyclic\n";
}

AcyclicityReport acyclic_check(const IncrementalTheory& t, long long k) {
    AcyclicityReport report;
    auto parts = components(t, k);
    // The chain is totally ordered: B ≺ P[1] ≺ … ≺ P[k] ≺ Q[k].
    for (std::size_t later = 1; later < parts.size(); ++later) {
        for (std::size_t earlier = 0; earlier < later; ++earlier) {
            PredicateList prev = predicates_of(parts[earlier].formula);
            for (const auto& h : head_predicates(parts[later].formula))
                if (contains(prev, h))
                    report.violations.push_back({parts[earlier].name, parts[later].name, h});
        }
    }
    return report;
}

NotAcyclicError::NotAcyclicError(AcyclicityReport report)
    : Error("the incremental theory is not acyclic:\n" + report.describe()), report_(std::move(report)) {}

AssemblyState assemble(const IncrementalTheory& t, long long k) {
    AcyclicityReport report = acyclic_check(t, k);
    if (!report.ok())
        throw NotAcyclicError(std::move(report));
    AssemblyState s;
    s.k = k;
    for (auto& c : components(t, k))
        s.instantiated.push_back(std::move(c.formula));

    auto checked_join = [](const FOModule& a, const FOModule& b, const std::string& what) {
        JoinReport r = joinable(a, b);
        if (!r.ok())
            throw InternalError("join of " + what + " failed for an acyclic theory:\n" + r.describe());
        return join(a, b);
    };

    Formula prefix = s.instantiated.front();
    s.components.push_back(fm_instantiate(prefix, {}).module);
    s.accumulated.push_back(s.components.back());
    for (std::size_t i = 1; i + 1 < s.instantiated.size(); ++i) {
        const FOModule& prev = s.accumulated.back();
        s.components.push_back(fm_instantiate(s.instantiated[i], prev.outputs).module);
        s.accumulated.push_back(checked_join(prev, s.components.back(), "P[" + std::to_string(i) + "]"));
        prefix = Formula::conj(prefix, s.instantiated[i]);
        if (!same_members(s.accumulated.back().outputs, predicates_of(prefix)))
            throw InternalError("outputs of the assembled module differ from the predicates of the prefix");
    }
    s.components.push_back(fm_instantiate(s.instantiated.back(), s.accumulated.back().outputs).module);
    s.result = checked_join(s.accumulated.back(), s.components.back(), "Q[" + std::to_string(k) + "]");
    return s;
}

Formula k_expansion(const IncrementalTheory& t, long long k) {
    std::vector<Formula> parts;
    for (auto& c : components(t, k))
        parts.push_back(std::move(c.formula));
    return conjoin(parts);
}

std::vector<PartialInterpretation> solve_in_order(const std::vector<FOModule>& chain,
                                                  const PartialInterpretation& frame, const EngineOptions& opts) {
    std::vector<PartialInterpretation> states{frame};
    for (const auto& m : chain) {
        Formula f = m.formula();
        PredicateList overlap = list_intersection(m.inputs, predicates_of(f));
        std::map<AtomSet, std::vector<PartialInterpretation>> memo;
        std::vector<PartialInterpretation> next;
        for (const auto& s : states) {
            for (const auto& q : overlap)
                if (!s.covers(q))
                    throw UncoveredConstantError("input " + to_string(q) + " is not covered by the earlier modules");
            AtomSet key = s.atoms(overlap);
            auto it = memo.find(key);
            if (it == memo.end()) {
                std::vector<PartialInterpretation> found;
                for (const auto& model : stable_models(f, m.outputs, s.restrict(overlap), opts))
                    found.push_back(model.restrict(m.outputs));
                it = memo.emplace(std::move(key), std::move(found)).first;
            }
            for (const auto& ext : it->second)
                if (compatible(s, ext))
                    next.push_back(unite(s, ext));
        }
        states = std::move(next);
        if (states.empty())
            break;
    }
    std::sort(states.begin(), states.end(), [](const auto& a, const auto& b) { return a.atoms() < b.atoms(); });
    return states;
}

std::vector<PartialInterpretation> incremental_solve(const IncrementalTheory& t, long long k,
                                                     const EngineOptions& opts) {
    AssemblyState s = assemble(t, k);
    Signature sig = herbrand_signature(k_expansion(t, k));
    return solve_in_order(s.components, PartialInterpretation::herbrand(sig).restrict(PredicateList{}), opts);
}

} // namespace fosm
