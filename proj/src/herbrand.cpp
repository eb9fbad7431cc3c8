#include "evaluator.hpp"
#include "parallel.hpp"
#include "sm_checker.hpp"

#include <fosm/error.hpp>
#include <fosm/herbrand.hpp>
#include <fosm/sm.hpp>

#include <algorithm>
#include <memory>

namespace fosm {

namespace {

using detail::CompiledFormula;
using detail::SmChecker;
using detail::checked_space;

bool ground_atom_formula(const Formula& f) {
    if (f.kind() != Formula::Kind::Atom || f.step())
        return false;
    for (const auto& t : f.args())
        if (!t.is_ground() || t.kind() == Term::Kind::Function)
            return false;
    return true;
}

// F is a conjunction of ground atoms (⊤ conjuncts allowed) over predicates of p.
bool facts_only(const Formula& f, const PredicateList& p) {
    for (const auto& c : conjuncts(f)) {
        if (c.is_truth())
            continue;
        if (!ground_atom_formula(c) || !contains(p, c.predicate()))
            return false;
    }
    return true;
}

// Enumerates all extents of `vary` over the frame, reporting the masks
// (bit b = b-th atom in canonical order) that `accept` keeps.
template <class MakeWorker>
std::vector<std::uint64_t> enumerate_masks(std::size_t atoms, const EngineOptions& opts, const char* what,
                                           MakeWorker make_worker) {
    std::uint64_t space = checked_space(atoms, opts, what);
    return detail::parallel_collect(space, opts.jobs, [&](std::uint64_t begin, std::uint64_t end) {
        auto accept = make_worker();
        std::vector<std::uint64_t> found;
        for (std::uint64_t mask = begin; mask < end; ++mask)
            if (accept(mask))
                found.push_back(mask);
        return found;
    });
}

struct AtomSlot {
    std::size_t pred;
    std::size_t index;
};

std::vector<AtomSlot> atom_slots(const PartialInterpretation& frame, const PredicateList& preds) {
    std::vector<AtomSlot> out;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        Extent shape(preds[i].arity, frame.size());
        for (std::size_t k = 0; k < shape.size(); ++k)
            out.push_back({i, k});
    }
    return out;
}

void apply_mask(const std::vector<Extent*>& extents, const std::vector<AtomSlot>& slots, std::uint64_t mask) {
    for (auto* e : extents)
        e->clear();
    for (std::size_t b = 0; b < slots.size(); ++b)
        if (mask >> b & 1U)
            extents[slots[b].pred]->set(slots[b].index);
}

} // namespace

bool evaluate(const Interpretation& i, const Formula& f) { return CompiledFormula(f, i).eval(); }

bool satisfies_sm(const Interpretation& i, const Formula& f, const PredicateList& p, const EngineOptions& opts) {
    for (const auto& q : p)
        if (!i.covers(q))
            throw UncoveredConstantError("predicate '" + q.name + "' is not covered");
    SmChecker checker(f, p, i, opts);
    return checker.model() && checker.stable();
}

std::vector<PartialInterpretation> stable_models(const Formula& f, const PredicateList& p,
                                                 const PartialInterpretation& fixed, const EngineOptions& opts) {
    PredicateList preds = sorted(p);
    PartialInterpretation frame = fixed;
    for (const auto& q : preds)
        frame.cover(q).clear();

    if (facts_only(f, preds)) {
        for (const auto& c : conjuncts(f)) {
            if (c.is_truth())
                continue;
            std::vector<int> tuple;
            for (const auto& t : c.args()) {
                auto it = frame.objects().find(t.name());
                if (it == frame.objects().end())
                    throw UncoveredConstantError("object constant '" + t.name() + "' is not covered");
                tuple.push_back(it->second);
            }
            Extent& e = frame.extent(c.predicate());
            e.set(e.index(tuple));
        }
        return {frame};
    }

    std::vector<AtomSlot> slots = atom_slots(frame, preds);
    auto masks = enumerate_masks(slots.size(), opts, "stable model search", [&] {
        auto checker = std::make_shared<SmChecker>(f, preds, frame, opts);
        return [checker, &slots](std::uint64_t mask) {
            apply_mask(checker->p_extents(), slots, mask);
            return checker->model() && checker->stable();
        };
    });

    std::vector<PartialInterpretation> out;
    std::vector<Extent*> extents;
    for (const auto& q : preds)
        extents.push_back(&frame.extent(q));
    for (auto mask : masks) {
        apply_mask(extents, slots, mask);
        out.push_back(frame);
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return a.atoms(preds) < b.atoms(preds); });
    return out;
}

Signature herbrand_signature(const Formula& f) {
    Signature sig = symbols_of(f);
    if (!sig.function_free())
        throw UnsupportedError("model search requires a function-free signature");
    if (sig.objects.empty()) {
        bool needs_universe = false;
        for_each_occurrence(f, [&](const Formula& sub, int) {
            if (sub.is_quantifier() || sub.kind() == Formula::Kind::Equal ||
                (sub.kind() == Formula::Kind::Atom && sub.predicate().arity > 0))
                needs_universe = true;
        });
        if (needs_universe)
            throw Error("the formula has no object constant, so its Herbrand universe is empty");
    }
    sig.validate();
    return sig;
}

std::vector<AtomSet> answer_sets(const Formula& f, const EngineOptions& opts) {
    Signature sig = herbrand_signature(f);
    PartialInterpretation frame = PartialInterpretation::herbrand(sig);
    PredicateList p = sig.predicate_list();
    std::vector<AtomSet> out;
    for (const auto& m : stable_models(f, p, frame, opts))
        out.push_back(m.atoms());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AtomSet> herbrand_models(const Formula& f, const Signature& sig, const EngineOptions& opts) {
    PartialInterpretation frame = PartialInterpretation::herbrand(sig);
    PredicateList preds = sig.predicate_list();
    std::vector<AtomSlot> slots = atom_slots(frame, preds);
    auto masks = enumerate_masks(slots.size(), opts, "model enumeration", [&] {
        auto local = std::make_shared<PartialInterpretation>(frame);
        auto compiled = std::make_shared<CompiledFormula>(f, *local);
        auto extents = std::make_shared<std::vector<Extent*>>();
        for (const auto& q : preds)
            extents->push_back(&local->extent(q));
        return [local, compiled, extents, &slots](std::uint64_t mask) {
            apply_mask(*extents, slots, mask);
            return compiled->eval();
        };
    });
    std::vector<AtomSet> out;
    std::vector<Extent*> extents;
    for (const auto& q : preds)
        extents.push_back(&frame.extent(q));
    for (auto mask : masks) {
        apply_mask(extents, slots, mask);
        out.push_back(frame.atoms());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace fosm
