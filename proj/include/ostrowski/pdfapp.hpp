#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "ostrowski/errors.hpp"
#include "ostrowski/funcspace.hpp"
#include "ostrowski/integrate.hpp"
#include "ostrowski/psibounds.hpp"
#include "ostrowski/types.hpp"
#include "ostrowski/verification.hpp"

namespace ostrowski {

// A density on a finite support with its CDF and precomputed expectation.
struct DistributionSpec {
    std::string id;
    Interval support{0.0, 1.0};
    std::function<double(double)> pdf;
    std::function<double(double)> cdf;
    double expectation = 0.0;
    double cdf_oracle_err = 0.0; // zero when the cdf is exact
};

// Builds a DistributionSpec and validates it: pdf >= 0 and unit mass, cdf
// anchored at 0 and 1, cdf nondecreasing on a 101-point grid, and the
// expectation identity E = b - int cdf against the first moment.
inline DistributionSpec make_distribution(std::string id, Interval support,
                                          std::function<double(double)> pdf,
                                          std::function<double(double)> cdf_exact = {}) {
    DistributionSpec dist;
    dist.id = std::move(id);
    dist.support = support;
    dist.pdf = std::move(pdf);
    if (cdf_exact) {
        dist.cdf = std::move(cdf_exact);
    } else {
        const auto p = dist.pdf;
        const double a = support.a;
        dist.cdf = [p, a](double x) {
            if (x <= a) return 0.0;
            return adaptive_integrate(p, Interval(a, x), 1e-13).value;
        };
        dist.cdf_oracle_err = 1e-12;
    }

    const double mass = adaptive_integrate(dist.pdf, support, 1e-12).value;
    if (std::fabs(mass - 1.0) > 1e-9)
        throw ValidationError("density '" + dist.id + "' has mass " + detail::num(mass));
    if (std::fabs(dist.cdf(support.a)) > 1e-9 || std::fabs(dist.cdf(support.b) - 1.0) > 1e-9)
        throw ValidationError("cdf of '" + dist.id + "' is not anchored at 0 and 1");
    double prev = -1e300;
    for (int i = 0; i < 101; ++i) {
        const double x = detail::lattice_point(support, i, 101);
        const double v = dist.pdf(x);
        if (v < 0.0)
            throw ValidationError("density '" + dist.id + "' is negative at x = " +
                                  detail::num(x));
        const double c = dist.cdf(x);
        if (c < prev - 1e-12)
            throw ValidationError("cdf of '" + dist.id + "' decreases at x = " + detail::num(x));
        prev = c;
    }

    dist.expectation =
        support.b - adaptive_integrate(dist.cdf, support, 1e-12).value;
    auto first_moment = [&](double t) { return t * dist.pdf(t); };
    const double direct = adaptive_integrate(first_moment, support, 1e-12).value;
    if (std::fabs(dist.expectation - direct) > 1e-9)
        throw ValidationError("expectation identity fails for '" + dist.id + "': " +
                              detail::num(dist.expectation) + " vs " + detail::num(direct));
    return dist;
}

// E(X) = b - int_a^b cdf(t) dt, freshly oracle-integrated.
inline double expectation_of(const DistributionSpec& dist) {
    return dist.support.b - adaptive_integrate(dist.cdf, dist.support, 1e-12).value;
}

namespace detail {

inline Tau density_tau(const DistributionSpec& dist) {
    const double pa = dist.pdf(dist.support.a);
    const double pb = dist.pdf(dist.support.b);
    if (pa == 0.0 || pb == 0.0)
        throw ZeroEndpointDensity("zero endpoint density: tau undefined for '" + dist.id + "'");
    return Tau(pa / pb);
}

// The bound applies to the mapping x -> Pr(X <= x), whose derivative is the
// density; the hypothesis is checked on pdf (or pdf^q).
inline VerificationRecord pdf_bound(const DistributionSpec& dist, double x, ConvexityOrder s,
                                    BoundVariant variant, int grid_n, double tol) {
    require_point(dist.support, x);
    const Interval iv = dist.support;
    const Tau tau = density_tau(dist);

    VerificationRecord rec;
    rec.fn_id = dist.id;
    rec.iv = iv;
    rec.x = x;
    rec.s = s.s;
    rec.variant = variant;
    rec.tau = tau.value;
    rec.branch = tau.branch;

    FunctionSpec mapping;
    mapping.id = dist.id;
    if (variant.kind == BoundKind::Thm1) {
        mapping.fprime = dist.pdf;
    } else {
        const auto p = dist.pdf;
        const double q = variant.pq->q;
        mapping.fprime = [p, q](double u) { return std::pow(p(u), q); };
    }
    const MembershipReport hyp = check_hypothesis_H(mapping, iv, s, grid_n);
    rec.hypothesis_ok = hyp.passed;
    rec.hypothesis_margin = hyp.worst_margin;

    PsiEvaluation pe;
    if (variant.kind == BoundKind::Thm1) {
        pe = psi1(tau, s, iv, x);
        rec.rhs = dist.pdf(iv.b) * pe.value;
    } else {
        pe = psi2(tau, s, *variant.pq, iv, x);
        rec.rhs = dist.pdf(iv.b) * std::pow(variant.pq->p + 1.0, -1.0 / variant.pq->p) *
                  pe.value;
    }
    rec.psi = pe.value;
    rec.lhs = std::fabs(dist.cdf(x) - (iv.b - dist.expectation) / iv.length());
    rec.oracle_err = dist.cdf_oracle_err + dist.pdf(iv.b) * pe.err_estimate;
    rec.margin = rec.rhs - rec.lhs;
    rec.holds = rec.margin >= -(tol + rec.oracle_err);
    return rec;
}

} // namespace detail

// |Pr(X <= x) - (b - E) / (b - a)| <= pdf(b) * psi1(tau, s, a, b).
inline VerificationRecord pdf_bound_thm3(const DistributionSpec& dist, double x,
                                         ConvexityOrder s, int grid_n = 101,
                                         double tol = kVerifyTol) {
    return detail::pdf_bound(dist, x, s, BoundVariant::thm1(), grid_n, tol);
}

// Holder variant: rhs = pdf(b) / (p+1)^(1/p) * psi2; hypothesis on pdf^q.
inline VerificationRecord pdf_bound_thm4(const DistributionSpec& dist, double x,
                                         ConvexityOrder s, HolderPair pq, int grid_n = 101,
                                         double tol = kVerifyTol) {
    return detail::pdf_bound(dist, x, s, BoundVariant::thm2(pq), grid_n, tol);
}

// Built-in distributions. texp1/texp2 are truncated exponentials with exact
// CDFs; eqfamd is a normalized equality-family density; uniform takes the
// value 0 at the support endpoints (open-interval convention), so it
// exercises the undefined-tau error path.
inline const std::vector<DistributionSpec>& builtin_distributions() {
    static const std::vector<DistributionSpec> dists = [] {
        std::vector<DistributionSpec> v;
        {
            const double c = 1.0 / (std::exp(1.0) - 1.0);
            v.push_back(make_distribution(
                "texp1", Interval(0.0, 1.0), [c](double t) { return c * std::exp(t); },
                [c](double t) { return c * (std::exp(t) - 1.0); }));
        }
        {
            const double c = 2.0 / (std::exp(2.0) - 1.0);
            v.push_back(make_distribution(
                "texp2", Interval(0.0, 1.0), [c](double t) { return c * std::exp(2.0 * t); },
                [c](double t) { return 0.5 * c * (std::exp(2.0 * t) - 1.0); }));
        }
        {
            const FunctionSpec fam =
                make_equality_family(Interval(0.0, 1.0), ConvexityOrder(0.5), 0.5, 1.0);
            const auto g = fam.fprime;
            const double mass = adaptive_integrate(g, Interval(0.0, 1.0), 1e-13).value;
            v.push_back(make_distribution("eqfamd", Interval(0.0, 1.0),
                                          [g, mass](double t) { return g(t) / mass; }));
        }
        {
            v.push_back(make_distribution(
                "uniform", Interval(0.0, 1.0),
                [](double t) { return (t > 0.0 && t < 1.0) ? 1.0 : 0.0; },
                [](double t) { return std::min(std::max(t, 0.0), 1.0); }));
        }
        return v;
    }();
    return dists;
}

inline const DistributionSpec& find_distribution(const std::string& id) {
    for (const auto& d : builtin_distributions())
        if (d.id == id) return d;
    throw UnknownId("unknown distribution '" + id + "'");
}

} // namespace ostrowski
