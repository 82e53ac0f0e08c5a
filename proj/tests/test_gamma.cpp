#include <doctest.h>

#include <memory>

#include "omt/gamma.hpp"

using omt::GammaSequence;
using omt::Index;
using omt::ViolationKind;

TEST_CASE("inverse-square weights match the closed form") {
    const GammaSequence g = GammaSequence::inverse_square();
    // 6/pi^2 and 6/(4 pi^2), independently computed to full precision.
    CHECK(g.weight(1) == doctest::Approx(0.60792710185402663).epsilon(1e-15));
    CHECK(g.weight(2) == doctest::Approx(0.15198177546350666).epsilon(1e-15));
    CHECK(g.weight(10) == doctest::Approx(0.60792710185402663 / 100.0).epsilon(1e-15));
    CHECK(g.nonincreasing());
}

TEST_CASE("inverse-square partial sums stay below one and increase") {
    const GammaSequence g = GammaSequence::inverse_square();
    double prev = 0.0;
    for (Index n = 1; n <= 2000; n += 37) {
        const double s = g.partial_sum(n);
        CHECK(s > prev);
        CHECK(s <= 1.0);
        prev = s;
    }
    CHECK(g.partial_sum(2000) > 0.999);
}

TEST_CASE("list gamma: weights, tail, and auto-detected monotonicity") {
    const GammaSequence g = GammaSequence::from_list({0.5, 0.3, 0.2});
    CHECK(g.weight(1) == 0.5);
    CHECK(g.weight(3) == 0.2);
    CHECK(g.weight(4) == 0.0); // beyond the list: zero, not an error
    CHECK(g.weight(100) == 0.0);
    CHECK(g.partial_sum(3) == doctest::Approx(1.0));
    CHECK(g.nonincreasing());

    const GammaSequence up = GammaSequence::from_list({0.2, 0.5});
    CHECK_FALSE(up.nonincreasing());
    CHECK(up.weight(2) == 0.5); // no throw: not declared non-increasing
}

TEST_CASE("gamma violations surface on first touch and in validate()") {
    const GammaSequence neg = GammaSequence::from_list({0.5, -0.1});
    CHECK_THROWS_AS((void)neg.weight(2), omt::invariant_error);
    const omt::ValidationReport r = neg.validate(5);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations[0].kind == ViolationKind::negative_weight);
    CHECK(r.violations[0].index == 2);

    const GammaSequence heavy = GammaSequence::from_list({0.9, 0.2});
    CHECK_NOTHROW((void)heavy.weight(1));
    CHECK_THROWS_AS((void)heavy.weight(2), omt::invariant_error);
    const omt::ValidationReport r2 = heavy.validate(3);
    REQUIRE_FALSE(r2.ok());
    CHECK(r2.violations[0].kind == ViolationKind::partial_sum_exceeds_one);
    CHECK(r2.violations[0].value == doctest::Approx(1.1));
}

TEST_CASE("copies carry an independent deep-copied cache") {
    auto calls = std::make_shared<int>(0);
    const GammaSequence original{[calls](Index) {
                                     ++*calls;
                                     return 0.001;
                                 },
                                 true, std::nullopt};
    (void)original.weight(3); // generator runs for indices 1..3
    CHECK(*calls == 3);

    const GammaSequence copy = original;
    (void)copy.weight(3); // served from the copied cache
    CHECK(*calls == 3);
    (void)copy.weight(4);
    CHECK(*calls == 4);
    (void)original.weight(4); // the copy's progress did not leak back
    CHECK(*calls == 5);
}

TEST_CASE("point-mass gamma spends everything at one index") {
    const GammaSequence g = GammaSequence::point_mass();
    CHECK(g.weight(1) == 1.0);
    CHECK(g.weight(2) == 0.0);
    CHECK(g.nonincreasing());
}
