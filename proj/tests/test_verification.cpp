#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ostrowski/sweeps.hpp"
#include "ostrowski/verification.hpp"

using namespace ostrowski;

namespace {
const Interval unit(0.0, 1.0);
const ConvexityOrder s1(1.0);
} // namespace

TEST_CASE("lhs_deviation") {
    const auto [quad_dev, quad_err] = lhs_deviation(find_function("quad"), unit, 0.5);
    CHECK(quad_dev == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
    CHECK(quad_err == 0.0); // exact integral available

    const auto [exp_dev, exp_err] = lhs_deviation(find_function("exp1"), unit, 0.5);
    CHECK(exp_dev == doctest::Approx(0.069560557758916897).epsilon(1e-13));
    CHECK(exp_err == 0.0);

    const auto [const_dev, const_err] = lhs_deviation(find_function("const1"), unit, 0.7);
    CHECK(const_dev == 0.0);
    CHECK(const_err == 0.0);

    CHECK_THROWS_AS(lhs_deviation(find_function("exp1"), unit, 1.2), DomainError);
}

TEST_CASE("lhs_deviation is invariant under adding a constant") {
    FunctionSpec shifted = find_function("exp1");
    shifted.id = "exp1+7";
    shifted.f = [](double u) { return std::exp(u) + 7.0; };
    shifted.exact_integral = [](double a, double b) {
        return std::exp(b) - std::exp(a) + 7.0 * (b - a);
    };
    for (double x : {0.0, 0.3, 1.0}) {
        CHECK(lhs_deviation(shifted, unit, x).first ==
              doctest::Approx(lhs_deviation(find_function("exp1"), unit, x).first)
                  .epsilon(1e-12));
    }
}

TEST_CASE("montgomery kernel integral equals mean - f(x)") {
    // worked quadratic: int_0^1/2 2t(1-t) dt = 1/6, int_1/2^1 (t-1)2(1-t) dt = -1/12
    const double v = montgomery_rhs(find_function("quad"), unit, 0.5);
    CHECK(v == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
    // opposite sign of the deviation, equal magnitude
    CHECK(std::fabs(v) ==
          doctest::Approx(lhs_deviation(find_function("quad"), unit, 0.5).first)
              .epsilon(1e-12));

    CHECK(montgomery_rhs(find_function("const1"), unit, 0.3) == 0.0);

    // x = b: the kernel is t-1 throughout
    const FunctionSpec& exp1 = find_function("exp1");
    const double mean = exp1.exact_integral(0.0, 1.0);
    CHECK(montgomery_rhs(exp1, unit, 1.0) ==
          doctest::Approx(mean - exp1.f(1.0)).epsilon(1e-12));
}

TEST_CASE("identity residual across the catalog") {
    // |montgomery_rhs - (mean - f(x))| <= 1e-9 for 11 x-values per entry
    CHECK(lemma1_max_residual_catalog(11) <= 1e-9);
}

TEST_CASE("verify_inequality: exp1 under thm1 at s = 1") {
    const VerificationRecord rec =
        verify_inequality(find_function("exp1"), unit, 0.5, s1, BoundVariant::thm1());
    CHECK(rec.hypothesis_ok);
    CHECK(rec.lhs == doctest::Approx(0.069560557758916897).epsilon(1e-12));
    CHECK(rec.rhs == doctest::Approx(0.42083928705878892).epsilon(1e-12));
    CHECK(rec.holds);
    CHECK(rec.margin == doctest::Approx(rec.rhs - rec.lhs));
    CHECK(rec.tau == doctest::Approx(std::exp(-1.0)));
    CHECK(rec.branch == TauBranch::LessThanOne);
}

TEST_CASE("verify_inequality: hypothesis failure is recorded, not thrown") {
    const VerificationRecord rec =
        verify_inequality(find_function("exp1"), unit, 0.5, ConvexityOrder(0.5),
                          BoundVariant::thm1());
    CHECK_FALSE(rec.hypothesis_ok);
    CHECK(rec.hypothesis_margin < -0.46);
    CHECK(rec.holds); // the bound still happens to hold here
}

TEST_CASE("verify_inequality: thm2 checks the hypothesis on |f'|^q") {
    const VerificationRecord rec =
        verify_inequality(find_function("exp1"), unit, 0.5, s1,
                          BoundVariant::thm2(HolderPair::from_q(2.0)));
    CHECK(rec.hypothesis_ok);
    CHECK(rec.rhs == doctest::Approx(0.5011443508404565).epsilon(1e-12));
    CHECK(rec.holds);
}

TEST_CASE("verify_inequality: tau errors propagate") {
    CHECK_THROWS_AS(
        verify_inequality(find_function("const1"), unit, 0.5, s1, BoundVariant::thm1()),
        ZeroEndpointDerivative);
    CHECK_THROWS_AS(
        verify_inequality(find_function("expdec"), unit, 0.5, s1, BoundVariant::thm1()),
        UnsupportedBranch);
}

TEST_CASE("soundness sweep has zero violations") {
    const SweepReport rep = soundness_sweep();
    CHECK(rep.summary.total > 0);
    CHECK(rep.summary.violations == 0);
    CHECK(rep.summary.hypothesis_ok > 0);
    // records are sorted by (fn_id, s, x)
    for (std::size_t i = 1; i < rep.records.size(); ++i) {
        const auto& l = rep.records[i - 1];
        const auto& r = rep.records[i];
        CHECK(std::tie(l.fn_id, l.s, l.x) <= std::tie(r.fn_id, r.s, r.x));
    }
    // every record with a satisfied hypothesis holds
    for (const auto& rec : rep.records)
        if (rec.hypothesis_ok) CHECK(rec.holds);
}
