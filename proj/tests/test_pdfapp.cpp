#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ostrowski/pdfapp.hpp"
#include "ostrowski/sweeps.hpp"

using namespace ostrowski;

namespace {
const ConvexityOrder s1(1.0);
}

TEST_CASE("built-in distributions satisfy the construction invariants") {
    for (const DistributionSpec& dist : builtin_distributions()) {
        CAPTURE(dist.id);
        CHECK(adaptive_integrate(dist.pdf, dist.support, 1e-12).value ==
              doctest::Approx(1.0).epsilon(1e-9));
        CHECK(std::fabs(dist.cdf(dist.support.a)) <= 1e-9);
        CHECK(std::fabs(dist.cdf(dist.support.b) - 1.0) <= 1e-9);
        auto first_moment = [&](double t) { return t * dist.pdf(t); };
        const double direct = adaptive_integrate(first_moment, dist.support, 1e-12).value;
        CHECK(std::fabs(expectation_of(dist) - direct) <= 1e-9);
        CHECK(std::fabs(dist.expectation - expectation_of(dist)) <= 1e-10);
    }
}

TEST_CASE("truncated exponential expectation") {
    const DistributionSpec& texp1 = find_distribution("texp1");
    CHECK(texp1.expectation == doctest::Approx(1.0 / (std::exp(1.0) - 1.0)).epsilon(1e-10));
    CHECK(texp1.expectation == doctest::Approx(0.58197670686932645).epsilon(1e-12));
    const DistributionSpec& uniform = find_distribution("uniform");
    CHECK(uniform.expectation == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("theorem 3 record for the truncated exponential") {
    const DistributionSpec& texp1 = find_distribution("texp1");
    const VerificationRecord rec = pdf_bound_thm3(texp1, 0.5, s1);
    CHECK(rec.hypothesis_ok);
    CHECK(rec.lhs == doctest::Approx(0.040482624332528083).epsilon(1e-12));
    CHECK(rec.rhs == doctest::Approx(0.24491866240370916).epsilon(1e-12));
    CHECK(rec.holds);
    CHECK(rec.tau == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));

    // x = b: cdf is 1 there, so the deviation is E - a over b - a
    const VerificationRecord at_b = pdf_bound_thm3(texp1, 1.0, s1);
    CHECK(at_b.lhs == doctest::Approx(texp1.expectation).epsilon(1e-12));
    CHECK(at_b.holds);

    // x = a: cdf is 0
    const VerificationRecord at_a = pdf_bound_thm3(texp1, 0.0, s1);
    CHECK(at_a.lhs == doctest::Approx(1.0 - texp1.expectation).epsilon(1e-12));
    CHECK(at_a.holds);
}

TEST_CASE("theorem 4 record for the truncated exponential") {
    const DistributionSpec& texp1 = find_distribution("texp1");
    const VerificationRecord rec = pdf_bound_thm4(texp1, 0.5, s1, HolderPair::from_q(2.0));
    CHECK(rec.hypothesis_ok);
    CHECK(rec.lhs == doctest::Approx(0.040482624332528083).epsilon(1e-12));
    CHECK(rec.rhs == doctest::Approx(0.29165433896829523).epsilon(1e-12));
    CHECK(rec.holds);
}

TEST_CASE("equality-family density passes at its own order") {
    const DistributionSpec& eqd = find_distribution("eqfamd");
    for (double sv : {0.5, 1.0}) {
        for (double x : grid_points(eqd.support, 5)) {
            const VerificationRecord r3 = pdf_bound_thm3(eqd, x, ConvexityOrder(sv));
            CAPTURE(sv);
            CAPTURE(x);
            CHECK(r3.hypothesis_ok);
            CHECK(r3.holds);
        }
    }
}

TEST_CASE("uniform density exercises the undefined-tau path") {
    const DistributionSpec& uniform = find_distribution("uniform");
    CHECK_THROWS_AS(pdf_bound_thm3(uniform, 0.5, s1), ZeroEndpointDensity);
    CHECK_THROWS_AS(pdf_bound_thm4(uniform, 0.5, s1, HolderPair::from_q(2.0)),
                    ZeroEndpointDensity);
}

TEST_CASE("evaluation point outside the support") {
    CHECK_THROWS_AS(pdf_bound_thm3(find_distribution("texp1"), 1.5, s1), DomainError);
}

TEST_CASE("unknown distribution id") {
    CHECK_THROWS_AS(find_distribution("cauchy"), UnknownId);
}

TEST_CASE("make_distribution rejects an unnormalized density") {
    CHECK_THROWS_AS(make_distribution("bad", Interval(0.0, 1.0),
                                      [](double) { return 2.0; }),
                    ValidationError);
}

TEST_CASE("make_distribution rejects a decreasing cdf") {
    // anchored at 0 and 1 but dips in the middle
    CHECK_THROWS_AS(make_distribution(
                        "bad-cdf", Interval(0.0, 1.0), [](double) { return 1.0; },
                        [](double t) {
                            return t + 0.3 * std::sin(2.0 * 3.14159265358979323846 * t);
                        }),
                    ValidationError);
}
