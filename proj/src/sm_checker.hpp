#pragma once

#include "evaluator.hpp"

#include <fosm/error.hpp>
#include <fosm/herbrand.hpp>
#include <fosm/sm.hpp>

#include <memory>

namespace fosm::detail {

inline std::uint64_t checked_space(std::size_t atoms, const EngineOptions& opts, const char* what) {
    if (atoms >= 63 || (std::uint64_t{1} << atoms) > opts.max_candidates)
        throw EnumerationLimitError(std::string(what) + " over " + std::to_string(atoms) +
                                    " atoms exceeds the candidate limit of " + std::to_string(opts.max_candidates));
    return std::uint64_t{1} << atoms;
}

// Decides I ⊨ SM[F; p] for interpretations that differ only in the extents
// of p. The frame is heap-allocated so compiled pointers stay valid.
class SmChecker {
public:
    SmChecker(const Formula& f, const PredicateList& p, const PartialInterpretation& frame,
              const EngineOptions& opts)
        : frame_(std::make_unique<PartialInterpretation>(frame)), p_(p), opts_(opts) {
        for (const auto& q : p_)
            frame_->cover(q);
        SecondOrderSentence sm = build_sm(f, p_);
        u_.reserve(p_.size());
        std::map<Predicate, const Extent*> overrides;
        for (std::size_t i = 0; i < p_.size(); ++i)
            u_.emplace_back(p_[i].arity, frame_->size());
        for (std::size_t i = 0; i < p_.size(); ++i) {
            overrides.emplace(sm.variables[i], &u_[i]);
            p_extents_.push_back(&frame_->extent(p_[i]));
        }
        model_ = std::make_unique<CompiledFormula>(f, *frame_, std::map<Predicate, const Extent*>{});
        star_ = std::make_unique<CompiledFormula>(sm.starred, *frame_, overrides);
    }

    PartialInterpretation& frame() { return *frame_; }
    const std::vector<Extent*>& p_extents() { return p_extents_; }

    bool model() const { return model_->eval(); }

    // No u strictly below p satisfies F*(u).
    bool stable() {
        std::vector<std::pair<std::size_t, std::size_t>> on;
        for (std::size_t i = 0; i < p_extents_.size(); ++i)
            for (std::size_t k = 0; k < p_extents_[i]->size(); ++k)
                if (p_extents_[i]->test(k))
                    on.emplace_back(i, k);
        std::uint64_t space = checked_space(on.size(), opts_, "stability check");
        for (std::uint64_t mask = 0; mask + 1 < space; ++mask) {
            for (auto& e : u_)
                e.clear();
            for (std::size_t b = 0; b < on.size(); ++b)
                if (mask >> b & 1U)
                    u_[on[b].first].set(on[b].second);
            if (star_->eval())
                return false;
        }
        return true;
    }

private:
    std::unique_ptr<PartialInterpretation> frame_;
    PredicateList p_;
    EngineOptions opts_;
    std::vector<Extent> u_;
    std::vector<Extent*> p_extents_;
    std::unique_ptr<CompiledFormula> model_;
    std::unique_ptr<CompiledFormula> star_;
};

} // namespace fosm::detail
