#include <doctest.h>
#include <fosm/error.hpp>
#include <fosm/verify.hpp>

using namespace fosm;

TEST_CASE("every suite passes on a short run") {
    for (const auto& name : suite_names()) {
        SuiteOptions opts;
        opts.cases = 20;
        opts.bound = 1;
        SuiteResult r = run_suite(name, opts);
        CAPTURE(r.summary());
        CHECK(r.ok());
        CHECK(r.cases >= 20);
    }
}

TEST_CASE("suites are reproducible from the seed") {
    SuiteOptions opts;
    opts.cases = 30;
    opts.seed = 42;
    SuiteResult a = run_suite("join-algebra", opts);
    SuiteResult b = run_suite("join-algebra", opts);
    CHECK(a.cases == b.cases);
    CHECK(a.skipped == b.skipped);
}

TEST_CASE("generators are deterministic") {
    Rng a(5), b(5);
    for (int i = 0; i < 20; ++i) {
        auto pa = random_ground_program(a, 4, 5);
        auto pb = random_ground_program(b, 4, 5);
        Program x, y;
        x.rules = pa;
        y.rules = pb;
        CHECK(to_string(x) == to_string(y));
    }
}

TEST_CASE("random formulas respect the depth bound") {
    Rng rng(8);
    FormulaShape shape;
    shape.depth = 3;
    std::function<int(const Formula&)> depth = [&](const Formula& f) -> int {
        if (f.is_binary())
            return 1 + std::max(depth(f.left()), depth(f.right()));
        if (f.is_quantifier())
            return 1 + depth(f.body());
        return 0;
    };
    for (int i = 0; i < 200; ++i) {
        Formula f = random_formula(rng, shape);
        CHECK(is_sentence(f));
        CHECK(depth(f) <= 3);
    }
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS((void)run_suite("nope"), Error); }
