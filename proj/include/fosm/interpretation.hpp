#pragma once
// Finite (partial) interpretations: a universe of named elements plus
// denotations for a subset of the signature's constants.

#include <fosm/formula.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fosm {

struct GroundAtom {
    std::string predicate;
    std::vector<std::string> args;

    friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
    friend bool operator==(const GroundAtom&, const GroundAtom&) = default;
};

using AtomSet = std::set<GroundAtom>;

/// `p(a,b)`, or `p` for a 0-ary atom.
[[nodiscard]] std::string to_string(const GroundAtom& a);
/// `{p(a), q(b)}`; `{}` when empty.
[[nodiscard]] std::string to_string(const AtomSet& atoms);
/// Parses the `to_string` form of a single ground atom.
[[nodiscard]] GroundAtom parse_ground_atom(const std::string& text);

/// Extent of an n-ary predicate over a universe of size `base`, stored as a
/// dense bitmap indexed row-major by element positions.
class Extent {
public:
    Extent() = default;
    Extent(int arity, std::size_t base);

    [[nodiscard]] int arity() const noexcept { return arity_; }
    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    [[nodiscard]] bool test(std::size_t index) const { return bits_[index] != 0; }
    void set(std::size_t index, bool value = true) { bits_[index] = value ? 1 : 0; }
    void clear();
    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] std::size_t index(const std::vector<int>& tuple) const;
    [[nodiscard]] std::vector<int> tuple(std::size_t index) const;

    friend bool operator==(const Extent&, const Extent&) = default;

private:
    int arity_ = 0;
    std::size_t base_ = 0;
    std::vector<std::uint8_t> bits_;
};

class PartialInterpretation {
public:
    PartialInterpretation() = default;
    /// Element names are kept sorted; duplicates are rejected.
    explicit PartialInterpretation(std::vector<std::string> universe);

    /// Herbrand interpretation of `sig` (function-free) restricted to its
    /// full signature; object constants denote themselves and the given
    /// atoms are the true ones.
    static PartialInterpretation herbrand(const Signature& sig, const AtomSet& atoms = {});

    [[nodiscard]] const std::vector<std::string>& universe() const noexcept { return universe_; }
    [[nodiscard]] std::size_t size() const noexcept { return universe_.size(); }
    /// Position of an element name; throws Error if absent.
    [[nodiscard]] int element(const std::string& name) const;

    void set_object(const std::string& name, int element);
    [[nodiscard]] const std::map<std::string, int>& objects() const noexcept { return objects_; }
    /// `table` is indexed like an extent of the given arity.
    void set_function(const std::string& name, int arity, std::vector<int> table);
    [[nodiscard]] const std::map<std::string, std::pair<int, std::vector<int>>>& functions() const noexcept {
        return functions_;
    }

    /// Adds `p` to the covered constants with an empty extent (no-op if covered).
    Extent& cover(const Predicate& p);
    [[nodiscard]] bool covers(const Predicate& p) const { return extents_.count(p) != 0; }
    [[nodiscard]] const Extent& extent(const Predicate& p) const;
    [[nodiscard]] Extent& extent(const Predicate& p);
    [[nodiscard]] const std::map<Predicate, Extent>& extents() const noexcept { return extents_; }
    [[nodiscard]] PredicateList predicates() const;

    /// Marks a ground atom true; its predicate must be covered.
    void add(const GroundAtom& a);
    [[nodiscard]] bool holds(const GroundAtom& a) const;

    /// True atoms of covered predicates, element names as arguments.
    [[nodiscard]] AtomSet atoms() const;
    [[nodiscard]] AtomSet atoms(const PredicateList& only) const;

    /// Keeps only the given predicates and object/function constants.
    [[nodiscard]] PartialInterpretation restrict(const Signature& c) const;
    [[nodiscard]] PartialInterpretation restrict(const PredicateList& preds) const;

    friend bool operator==(const PartialInterpretation&, const PartialInterpretation&) = default;

private:
    std::vector<std::string> universe_;
    std::map<std::string, int> objects_;
    std::map<std::string, std::pair<int, std::vector<int>>> functions_;
    std::map<Predicate, Extent> extents_;
};

using Interpretation = PartialInterpretation;

/// Same universe and identical denotations of every shared constant.
[[nodiscard]] bool compatible(const PartialInterpretation& a, const PartialInterpretation& b);
/// Throws IncompatibleError unless `compatible(a, b)`.
[[nodiscard]] PartialInterpretation unite(const PartialInterpretation& a, const PartialInterpretation& b);

/// The true atoms, in the canonical model format.
[[nodiscard]] std::string to_string(const PartialInterpretation& i);

} // namespace fosm
