#pragma once
// Seeded random instances and the property suites run by `fosm verify` and
// the acceptance harness.

#include <fosm/incremental.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace fosm {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    /// Uniform in [0, n).
    int below(int n);
    bool chance(double p);
    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(below(static_cast<int>(v.size())))];
    }
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

/// Ground rules over 0-ary atoms `a`, `b`, …: disjunctive heads (sometimes
/// empty, a choice or containing `not`), bodies with `not` and `not not`.
[[nodiscard]] std::vector<Rule> random_ground_program(Rng& rng, int atoms, int rules);

struct FormulaShape {
    int depth = 5;
    PredicateList predicates{{"p", 0}, {"q", 1}, {"r", 1}, {"s", 0}, {"t", 2}};
    std::vector<std::string> objects{"a", "b"};
    bool quantifiers = true;
};

/// A sentence of at most the given depth; variables are bound in scope.
[[nodiscard]] Formula random_formula(Rng& rng, const FormulaShape& shape);

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::size_t cases = 0; // 0 picks the suite's default
    int bound = 2;         // universe sizes for `splitting`
    EngineOptions engine;
};

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;   // instances that exercised the property
    std::size_t skipped = 0; // generated instances outside the precondition
    std::size_t failed = 0;
    std::vector<std::string> failures; // the first few counterexamples
    double seconds = 0;

    [[nodiscard]] bool ok() const { return failed == 0; }
    [[nodiscard]] std::string summary() const;
};

/// oracle, module-theorem, join-algebra, dlp, incremental, projection,
/// splitting, dm-fm, fm-equivalence.
[[nodiscard]] const std::vector<std::string>& suite_names();
/// Throws Error on an unknown name.
[[nodiscard]] SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

} // namespace fosm
