#pragma once

#include <cmath>
#include <optional>

#include "ostrowski/errors.hpp"
#include "ostrowski/funcspace.hpp"
#include "ostrowski/integrate.hpp"
#include "ostrowski/types.hpp"

namespace ostrowski {

enum class PsiMethod { ClosedForm, NumericIntegral };

inline const char* to_string(PsiMethod m) {
    return m == PsiMethod::ClosedForm ? "closed-form" : "numeric-integral";
}

// A computed kernel value together with the branch taken, the evaluation
// route, and the quadrature error estimate (zero for closed forms).
struct PsiEvaluation {
    double value = 0.0;
    TauBranch branch = TauBranch::One;
    PsiMethod method = PsiMethod::ClosedForm;
    double err_estimate = 0.0;
};

enum class BoundKind { Thm1, Thm2 };

// Selects between the two bound families; Thm2 carries its conjugate pair.
struct BoundVariant {
    BoundKind kind = BoundKind::Thm1;
    std::optional<HolderPair> pq;

    static BoundVariant thm1() { return {BoundKind::Thm1, std::nullopt}; }
    static BoundVariant thm2(HolderPair pq) { return {BoundKind::Thm2, pq}; }
};

// Below this |ln tau| the raw closed forms are refused; the dispatching
// evaluators fall back to the integral route.
inline constexpr double kClosedFormEpsilon = 1e-6;

namespace detail {

// phi1(z) = (e^z - 1) / z = integral of e^(z u) over [0,1].
inline double phi1(double z) {
    if (z == 0.0) return 1.0;
    return std::expm1(z) / z;
}

// phi2(z) = (e^z (z - 1) + 1) / z^2 = integral of u e^(z u) over [0,1].
// The direct formula cancels catastrophically near z = 0; a short power
// series (sum of z^m / (m! (m+2))) covers |z| <= 1.
inline double phi2(double z) {
    if (std::fabs(z) <= 1.0) {
        double sum = 0.5;
        double zp = 1.0;
        for (int m = 1; m <= 24; ++m) {
            zp *= z / m;
            const double term = zp / (m + 2);
            sum += term;
            if (std::fabs(term) <= 1e-18 * std::fabs(sum)) break;
        }
        return sum;
    }
    return (std::exp(z) * (z - 1.0) + 1.0) / (z * z);
}

inline void require_point(Interval iv, double x) {
    if (!iv.contains(x))
        throw DomainError("x = " + num(x) + " lies outside [" + num(iv.a) + ", " + num(iv.b) +
                          "]");
}

inline void require_supported(Tau tau) {
    if (tau.branch == TauBranch::GreaterThanOne)
        throw UnsupportedBranch("unsupported branch tau>1; try --reflect");
}

inline double checked_nonnegative(double v, const char* what) {
    if (!(v >= 0.0)) throw Error(std::string(what) + " evaluated negative: " + num(v));
    return v;
}

} // namespace detail

// tau = |f'(a)| / |f'(b)| with branch classification.
inline Tau tau_of(const FunctionSpec& fn, Interval iv) {
    const double da = std::fabs(fn.fprime(iv.a));
    const double db = std::fabs(fn.fprime(iv.b));
    if (db == 0.0)
        throw ZeroDenominator("|f'(b)| = 0 for '" + fn.id + "': tau undefined");
    if (da == 0.0)
        throw ZeroNumerator("|f'(a)| = 0 for '" + fn.id + "': tau = 0 lies outside (0,inf)");
    return Tau(da / db);
}

// First-kind kernel by adaptive quadrature:
//   (b-a) * [ int_0^c t tau^(s t) dt + int_c^1 (1-t) tau^(s t) dt ],
// c = (b-x)/(b-a). On the tau = 1 branch the integrand weight is 1.
inline PsiEvaluation psi1_integral(Tau tau, ConvexityOrder s, Interval iv, double x,
                                   double tol = 1e-12) {
    detail::require_point(iv, x);
    detail::require_supported(tau);

    const double c = (iv.b - x) / (iv.b - iv.a);
    const double k = tau.branch == TauBranch::One ? 0.0 : s.s * std::log(tau.value);
    auto head = [&](double t) { return t * std::exp(k * t); };
    auto tail = [&](double t) { return (1.0 - t) * std::exp(k * t); };

    double value = 0.0, err = 0.0;
    if (c > 0.0) {
        const QuadResult q = adaptive_integrate(head, Interval(0.0, c), tol);
        value += q.value;
        err += q.err_estimate;
    }
    if (c < 1.0) {
        const QuadResult q = adaptive_integrate(tail, Interval(c, 1.0), tol);
        value += q.value;
        err += q.err_estimate;
    }
    const double len = iv.length();
    return {detail::checked_nonnegative(len * value, "psi1"), tau.branch,
            PsiMethod::NumericIntegral, len * err};
}

// First-kind kernel in closed form. The tau < 1 branch uses
//   int_0^c t e^(k t) dt           = c^2 phi2(k c)
//   int_c^1 (1-t) e^(k t) dt       = (1-c)^2 e^k phi2(-k (1-c))
// with k = s ln tau, which stays fully accurate through the removable
// singularity at k = 0.
inline PsiEvaluation psi1_closed(Tau tau, ConvexityOrder s, Interval iv, double x,
                                 double closed_form_epsilon = kClosedFormEpsilon) {
    detail::require_point(iv, x);
    detail::require_supported(tau);

    if (tau.branch == TauBranch::One) {
        const double value =
            ((iv.a - x) * (iv.a - x) + (iv.b - x) * (iv.b - x)) / (2.0 * iv.length());
        return {value, TauBranch::One, PsiMethod::ClosedForm, 0.0};
    }
    const double lt = std::log(tau.value);
    if (std::fabs(lt) <= closed_form_epsilon)
        throw NearSingular("|ln tau| = " + detail::num(std::fabs(lt)) +
                           " below the closed-form cutoff; use psi1_integral");
    const double k = s.s * lt;
    const double c = (iv.b - x) / (iv.b - iv.a);
    const double value = iv.length() * (c * c * detail::phi2(k * c) +
                                        (1.0 - c) * (1.0 - c) * std::exp(k) *
                                            detail::phi2(-k * (1.0 - c)));
    return {detail::checked_nonnegative(value, "psi1"), tau.branch, PsiMethod::ClosedForm, 0.0};
}

// Closed form when valid, integral route otherwise.
inline PsiEvaluation psi1(Tau tau, ConvexityOrder s, Interval iv, double x) {
    detail::require_supported(tau);
    if (tau.branch == TauBranch::One ||
        std::fabs(std::log(tau.value)) > kClosedFormEpsilon)
        return psi1_closed(tau, s, iv, x);
    return psi1_integral(tau, s, iv, x);
}

// Second-kind (Holder) kernel by adaptive quadrature. Convention: the
// returned value excludes |f'(b)| and the (p+1)^(-1/p) prefactor, i.e.
//   (b-a) (p+1)^(1/p) * [ (int_0^c t^p)^(1/p) (int_0^c tau^(s q t))^(1/q)
//                       + (int_c^1 (1-t)^p)^(1/p) (int_c^1 tau^(s q t))^(1/q) ].
inline PsiEvaluation psi2_integral(Tau tau, ConvexityOrder s, HolderPair pq, Interval iv,
                                   double x, double tol = 1e-12) {
    detail::require_point(iv, x);
    detail::require_supported(tau);

    const double c = (iv.b - x) / (iv.b - iv.a);
    const double kq = tau.branch == TauBranch::One ? 0.0 : s.s * pq.q * std::log(tau.value);
    auto weight_head = [&](double t) { return std::pow(t, pq.p); };
    auto weight_tail = [&](double t) { return std::pow(1.0 - t, pq.p); };
    auto expo = [&](double t) { return std::exp(kq * t); };

    double value = 0.0, err = 0.0;
    if (c > 0.0) {
        const QuadResult qw = adaptive_integrate(weight_head, Interval(0.0, c), tol);
        const QuadResult qe = adaptive_integrate(expo, Interval(0.0, c), tol);
        value += std::pow(qw.value, 1.0 / pq.p) * std::pow(qe.value, 1.0 / pq.q);
        err += qw.err_estimate + qe.err_estimate;
    }
    if (c < 1.0) {
        const QuadResult qw = adaptive_integrate(weight_tail, Interval(c, 1.0), tol);
        const QuadResult qe = adaptive_integrate(expo, Interval(c, 1.0), tol);
        value += std::pow(qw.value, 1.0 / pq.p) * std::pow(qe.value, 1.0 / pq.q);
        err += qw.err_estimate + qe.err_estimate;
    }
    const double scale = iv.length() * std::pow(pq.p + 1.0, 1.0 / pq.p);
    return {detail::checked_nonnegative(scale * value, "psi2"), tau.branch,
            PsiMethod::NumericIntegral, scale * err};
}

// Second-kind kernel in closed form (same convention as psi2_integral):
//   (b-a) * [ c^((p+1)/p) (c phi1(kq c))^(1/q)
//           + (1-c)^((p+1)/p) ((1-c) e^(kq c) phi1(kq (1-c)))^(1/q) ],
// kq = s q ln tau; at tau = 1 this is [(b-x)^2 + (x-a)^2] / (b-a).
inline PsiEvaluation psi2_closed(Tau tau, ConvexityOrder s, HolderPair pq, Interval iv, double x,
                                 double closed_form_epsilon = kClosedFormEpsilon) {
    detail::require_point(iv, x);
    detail::require_supported(tau);

    if (tau.branch == TauBranch::One) {
        const double value =
            ((iv.b - x) * (iv.b - x) + (x - iv.a) * (x - iv.a)) / iv.length();
        return {value, TauBranch::One, PsiMethod::ClosedForm, 0.0};
    }
    const double lt = std::log(tau.value);
    if (std::fabs(lt) <= closed_form_epsilon)
        throw NearSingular("|ln tau| = " + detail::num(std::fabs(lt)) +
                           " below the closed-form cutoff; use psi2_integral");
    const double kq = s.s * pq.q * lt;
    const double c = (iv.b - x) / (iv.b - iv.a);
    const double e = 1.0 + 1.0 / pq.p;

    double value = 0.0;
    if (c > 0.0) {
        const double head = c * detail::phi1(kq * c);
        value += std::pow(c, e) * std::pow(head, 1.0 / pq.q);
    }
    if (c < 1.0) {
        const double tail = (1.0 - c) * std::exp(kq * c) * detail::phi1(kq * (1.0 - c));
        value += std::pow(1.0 - c, e) * std::pow(tail, 1.0 / pq.q);
    }
    return {detail::checked_nonnegative(iv.length() * value, "psi2"), tau.branch,
            PsiMethod::ClosedForm, 0.0};
}

inline PsiEvaluation psi2(Tau tau, ConvexityOrder s, HolderPair pq, Interval iv, double x) {
    detail::require_supported(tau);
    if (tau.branch == TauBranch::One ||
        std::fabs(std::log(tau.value)) > kClosedFormEpsilon)
        return psi2_closed(tau, s, pq, iv, x);
    return psi2_integral(tau, s, pq, iv, x);
}

// |f(x) - mean| <= |f'(b)| * psi1(tau, s, a, b) under the hypothesis.
inline double bound_theorem1(const FunctionSpec& fn, Interval iv, double x, ConvexityOrder s) {
    const Tau tau = tau_of(fn, iv);
    return std::fabs(fn.fprime(iv.b)) * psi1(tau, s, iv, x).value;
}

// |f(x) - mean| <= |f'(b)| / (p+1)^(1/p) * psi2(tau, s, p, q, a, b).
inline double bound_theorem2(const FunctionSpec& fn, Interval iv, double x, ConvexityOrder s,
                             HolderPair pq) {
    const Tau tau = tau_of(fn, iv);
    return std::fabs(fn.fprime(iv.b)) * std::pow(pq.p + 1.0, -1.0 / pq.p) *
           psi2(tau, s, pq, iv, x).value;
}

// Uniform-bound corollaries: tau and |f'(b)| both replaced by M (M <= 1).
inline double bound_corollary_M(double M, Interval iv, double x, ConvexityOrder s,
                                BoundVariant variant) {
    if (!(M > 0.0)) throw ValidationError("corollary bound requires M > 0");
    const Tau tau(M);
    if (tau.branch == TauBranch::GreaterThanOne)
        throw UnsupportedBranch("corollary bound covers only M <= 1, got M = " +
                                detail::num(M));
    if (variant.kind == BoundKind::Thm1) return M * psi1(tau, s, iv, x).value;
    if (!variant.pq) throw ValidationError("Thm2 variant requires a Holder pair");
    const HolderPair pq = *variant.pq;
    return M * std::pow(pq.p + 1.0, -1.0 / pq.p) * psi2(tau, s, pq, iv, x).value;
}

// The general bound specialized at x = (a+b)/2; same code path as the
// general operation.
inline double bound_midpoint(const FunctionSpec& fn, Interval iv, ConvexityOrder s,
                             BoundVariant variant) {
    const double mid = iv.midpoint();
    if (variant.kind == BoundKind::Thm1) return bound_theorem1(fn, iv, mid, s);
    if (!variant.pq) throw ValidationError("Thm2 variant requires a Holder pair");
    return bound_theorem2(fn, iv, mid, s, *variant.pq);
}

struct ReflectedProblem {
    FunctionSpec fn;
    Interval iv;
    double x;
};

// Substitution g(u) = f(a+b-u): preserves the integral mean, maps x to
// a+b-x, and inverts tau. Membership claims do not carry over; the
// hypothesis must be re-checked on the result.
inline ReflectedProblem reflect_problem(const FunctionSpec& fn, Interval iv, double x) {
    const double a = iv.a, b = iv.b;
    FunctionSpec g;
    g.id = fn.id + ".reflected";
    g.f = [fn, a, b](double u) { return fn.f(a + b - u); };
    g.fprime = [fn, a, b](double u) { return -fn.fprime(a + b - u); };
    if (fn.has_exact_integral())
        g.exact_integral = [fn, a, b](double lo, double hi) {
            return fn.exact_integral(a + b - hi, a + b - lo);
        };
    g.default_interval = iv;
    g.endpoint_derivative_vanishes = fn.endpoint_derivative_vanishes;
    return {std::move(g), iv, a + b - x};
}

} // namespace ostrowski
