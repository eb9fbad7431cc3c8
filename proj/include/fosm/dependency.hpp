#pragma once
// Predicate dependency graphs, strongly connected components and the
// applicability conditions of the (extended) splitting theorem.

#include <fosm/herbrand.hpp>

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fosm {

struct DependencyGraph {
    PredicateList vertices;
    std::set<std::pair<Predicate, Predicate>> edges; // (from, to)
};

/// Edge p → q iff some rule G → H of F has p strictly positive in H and q
/// positive in G outside every subformula of G that is negative on `p`.
[[nodiscard]] DependencyGraph dependency_graph(const Formula& f, const PredicateList& p);

/// Components with members sorted, ordered by smallest member.
[[nodiscard]] std::vector<PredicateList> strongly_connected_components(const DependencyGraph& g);

[[nodiscard]] std::string to_dot(const DependencyGraph& g);

struct SplitReport {
    bool components_ok = true;
    bool f_negative_on_q = true;
    bool g_negative_on_p = true;
    std::optional<PredicateList> bad_component;
    std::optional<Predicate> f_witness; // member of q strictly positive in F
    std::optional<Predicate> g_witness; // member of p strictly positive in G

    [[nodiscard]] bool ok() const { return components_ok && f_negative_on_q && g_negative_on_p; }
    /// One line per condition plus a verdict line.
    [[nodiscard]] std::string describe() const;
};

/// Conditions (a)-(c) for SM[F ∧ G ∧ H; pq] ↔ SM[F ∧ H; p] ∧ SM[G ∧ H; q].
/// With H = ⊤ and disjoint p, q this is the classic splitting theorem.
[[nodiscard]] SplitReport check_split(const Formula& f, const Formula& g, const Formula& h, const PredicateList& p,
                                      const PredicateList& q);

/// Exhaustively compares both sides of the split over every interpretation
/// with universe size 1..bound: all object constant assignments and all
/// predicate extents. Function-free sentences only.
[[nodiscard]] bool verify_split_equivalence(const Formula& f, const Formula& g, const Formula& h,
                                            const PredicateList& p, const PredicateList& q, int bound,
                                            const EngineOptions& opts = {});

/// First member of `preds` with a strictly positive occurrence in `f`.
[[nodiscard]] std::optional<Predicate> positive_witness(const Formula& f, const PredicateList& preds);

} // namespace fosm
