#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "ostrowski/funcspace.hpp"
#include "ostrowski/integrate.hpp"
#include "ostrowski/psibounds.hpp"
#include "ostrowski/types.hpp"

namespace ostrowski {

inline constexpr double kVerifyTol = 1e-9;

// One inequality check: LHS, RHS, margin, hypothesis outcome.
struct VerificationRecord {
    std::string fn_id;
    Interval iv{0.0, 1.0};
    double x = 0.0;
    double s = 1.0;
    BoundVariant variant;
    bool hypothesis_ok = false;
    double hypothesis_margin = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0; // rhs - lhs
    bool holds = false;
    double oracle_err = 0.0;
    double tau = 1.0;
    TauBranch branch = TauBranch::One;
    double psi = 0.0;
};

// |f(x) - mean of f over iv| and the oracle error of the mean.
inline std::pair<double, double> lhs_deviation(const FunctionSpec& fn, Interval iv, double x) {
    detail::require_point(iv, x);
    double integral = 0.0, err = 0.0;
    if (fn.has_exact_integral()) {
        integral = fn.exact_integral(iv.a, iv.b);
    } else {
        const QuadResult q = adaptive_integrate(fn.f, iv, 1e-12);
        integral = q.value;
        err = q.err_estimate;
    }
    const double mean = integral / iv.length();
    return {std::fabs(fn.f(x) - mean), err / iv.length()};
}

// Weighted derivative integral with the piecewise kernel
//   p(t) = t on [0,c], t-1 on (c,1],  c = (b-x)/(b-a):
//   (b-a) * int_0^1 p(t) f'(t a + (1-t) b) dt.
// Equals mean(f) - f(x); the sign follows from integration by parts (the
// t -> t a + (1-t) b substitution runs from b down to a).
inline double montgomery_rhs(const FunctionSpec& fn, Interval iv, double x) {
    detail::require_point(iv, x);
    const double a = iv.a, b = iv.b;
    const double c = (b - x) / (b - a);
    auto head = [&](double t) { return t * fn.fprime(t * a + (1.0 - t) * b); };
    auto tail = [&](double t) { return (t - 1.0) * fn.fprime(t * a + (1.0 - t) * b); };

    double value = 0.0;
    if (c > 0.0) value += adaptive_integrate(head, Interval(0.0, c), 1e-12).value;
    if (c < 1.0) value += adaptive_integrate(tail, Interval(c, 1.0), 1e-12).value;
    return iv.length() * value;
}

// Runs the hypothesis check (on |f'|^q for the Holder variant), evaluates
// both sides of the selected bound, and records the outcome. A failed
// hypothesis is recorded, not thrown; tau errors propagate.
inline VerificationRecord verify_inequality(const FunctionSpec& fn, Interval iv, double x,
                                            ConvexityOrder s, BoundVariant variant,
                                            int grid_n = 101, double tol = kVerifyTol) {
    detail::require_point(iv, x);
    if (variant.kind == BoundKind::Thm2 && !variant.pq)
        throw ValidationError("Thm2 variant requires a Holder pair");

    VerificationRecord rec;
    rec.fn_id = fn.id;
    rec.iv = iv;
    rec.x = x;
    rec.s = s.s;
    rec.variant = variant;

    MembershipReport hyp;
    if (variant.kind == BoundKind::Thm1) {
        hyp = check_hypothesis_H(fn, iv, s, grid_n);
    } else {
        const double q = variant.pq->q;
        FunctionSpec powered = fn;
        powered.fprime = [fn, q](double u) { return std::pow(std::fabs(fn.fprime(u)), q); };
        hyp = check_hypothesis_H(powered, iv, s, grid_n);
    }
    rec.hypothesis_ok = hyp.passed;
    rec.hypothesis_margin = hyp.worst_margin;

    const Tau tau = tau_of(fn, iv);
    rec.tau = tau.value;
    rec.branch = tau.branch;

    const double db = std::fabs(fn.fprime(iv.b));
    PsiEvaluation pe;
    if (variant.kind == BoundKind::Thm1) {
        pe = psi1(tau, s, iv, x);
        rec.rhs = db * pe.value;
    } else {
        pe = psi2(tau, s, *variant.pq, iv, x);
        rec.rhs = db * std::pow(variant.pq->p + 1.0, -1.0 / variant.pq->p) * pe.value;
    }
    rec.psi = pe.value;

    const auto [lhs, lhs_err] = lhs_deviation(fn, iv, x);
    rec.lhs = lhs;
    rec.oracle_err = lhs_err + db * pe.err_estimate;
    rec.margin = rec.rhs - rec.lhs;
    rec.holds = rec.margin >= -(tol + rec.oracle_err);
    return rec;
}

} // namespace ostrowski
