#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ostrowski/errors.hpp"
#include "ostrowski/integrate.hpp"
#include "ostrowski/types.hpp"

namespace ostrowski {

enum class ClassTag { LogConvex, SLogFirst, SLogSecond, HypothesisH };

inline const char* to_string(ClassTag t) {
    switch (t) {
    case ClassTag::LogConvex: return "log-convex";
    case ClassTag::SLogFirst: return "slog-first";
    case ClassTag::SLogSecond: return "slog-second";
    case ClassTag::HypothesisH: return "hypothesis-H";
    }
    return "?";
}

// A class membership claim; s is 1 for plain log-convexity.
struct ClassClaim {
    ClassTag tag;
    double s = 1.0;
};

// A catalog entry: f, its analytic derivative, an optional exact integral
// evaluator, and the memberships the entry claims.
struct FunctionSpec {
    std::string id;
    std::function<double(double)> f;
    std::function<double(double)> fprime;
    std::function<double(double, double)> exact_integral; // empty when absent
    std::vector<ClassClaim> claimed_classes;
    Interval default_interval{0.0, 1.0};
    // Marks entries whose derivative vanishes at an endpoint of the default
    // interval: tau is undefined there and theorem sweeps skip them.
    bool endpoint_derivative_vanishes = false;

    bool has_exact_integral() const { return static_cast<bool>(exact_integral); }
};

// Result of one brute-force lattice check. worst_margin is the minimum of
// rhs - lhs over the lattice; the witness (t, x, y) is present when a
// violation was found.
struct MembershipReport {
    ClassClaim checked;
    int grid_n = 0;
    double worst_margin = 0.0;
    std::optional<std::array<double, 3>> witness;
    bool passed = false;
    long checked_points = 0;
    long skipped_points = 0; // first-sense combination points outside the interval
};

inline constexpr double kMembershipTol = 1e-12;

namespace detail {

inline double lattice_point(Interval iv, int i, int n) {
    if (i == 0) return iv.a;
    if (i == n - 1) return iv.b;
    return iv.a + (iv.b - iv.a) * (static_cast<double>(i) / (n - 1));
}

inline double unit_point(int i, int n) {
    if (i == n - 1) return 1.0;
    return static_cast<double>(i) / (n - 1);
}

inline void require_grid(int grid_n) {
    if (grid_n < 3) throw ValidationError("membership checks require grid_n >= 3");
}

inline double positive_value(const FunctionSpec& fn, double u) {
    const double v = fn.f(u);
    if (!(v > 0.0))
        throw NonPositiveValue("function '" + fn.id + "' is not strictly positive at u = " +
                               num(u) + " (f = " + num(v) + ")");
    return v;
}

} // namespace detail

// Second-sense check: f(t x + (1-t) y) <= f(x)^(t^s) f(y)^((1-t)^s) over a
// grid_n^3 lattice on iv x iv x [0,1].
inline MembershipReport check_slog_second(const FunctionSpec& fn, Interval iv, ConvexityOrder s,
                                          int grid_n, double tol = kMembershipTol) {
    detail::require_grid(grid_n);
    MembershipReport rep{{ClassTag::SLogSecond, s.s}, grid_n, 0.0, std::nullopt, false, 0, 0};

    std::vector<double> xs(grid_n), fx(grid_n);
    for (int i = 0; i < grid_n; ++i) {
        xs[i] = detail::lattice_point(iv, i, grid_n);
        fx[i] = detail::positive_value(fn, xs[i]);
    }

    double worst = std::numeric_limits<double>::infinity();
    std::array<double, 3> at{0, 0, 0};
    for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < grid_n; ++j) {
            for (int k = 0; k < grid_n; ++k) {
                const double t = detail::unit_point(k, grid_n);
                const double u = t * xs[i] + (1.0 - t) * xs[j];
                const double lhs = detail::positive_value(fn, u);
                const double rhs =
                    std::pow(fx[i], std::pow(t, s.s)) * std::pow(fx[j], std::pow(1.0 - t, s.s));
                const double margin = rhs - lhs;
                ++rep.checked_points;
                if (margin < worst) {
                    worst = margin;
                    at = {t, xs[i], xs[j]};
                }
            }
        }
    }
    rep.worst_margin = worst;
    rep.passed = worst >= -tol;
    if (!rep.passed) rep.witness = at;
    return rep;
}

// First-sense check: f(a x + b y) <= f(x)^(a^s) f(y)^(b^s) with
// a^s + b^s = 1. The lattice ranges over a in [0,1] with b = (1-a^s)^(1/s);
// combination points that leave iv are skipped and counted.
inline MembershipReport check_slog_first(const FunctionSpec& fn, Interval iv, ConvexityOrder s,
                                         int grid_n, double tol = kMembershipTol) {
    detail::require_grid(grid_n);
    MembershipReport rep{{ClassTag::SLogFirst, s.s}, grid_n, 0.0, std::nullopt, false, 0, 0};

    std::vector<double> xs(grid_n), fx(grid_n);
    for (int i = 0; i < grid_n; ++i) {
        xs[i] = detail::lattice_point(iv, i, grid_n);
        fx[i] = detail::positive_value(fn, xs[i]);
    }
    const double slack = 1e-12 * (1.0 + std::fabs(iv.a) + std::fabs(iv.b));

    double worst = std::numeric_limits<double>::infinity();
    std::array<double, 3> at{0, 0, 0};
    for (int k = 0; k < grid_n; ++k) {
        const double alpha = detail::unit_point(k, grid_n);
        const double as = std::pow(alpha, s.s);
        const double beta = std::pow(1.0 - as, 1.0 / s.s);
        const double bs = 1.0 - as;
        for (int i = 0; i < grid_n; ++i) {
            for (int j = 0; j < grid_n; ++j) {
                const double u = alpha * xs[i] + beta * xs[j];
                if (u < iv.a - slack || u > iv.b + slack) {
                    ++rep.skipped_points;
                    continue;
                }
                const double lhs = detail::positive_value(fn, u);
                const double rhs = std::pow(fx[i], as) * std::pow(fx[j], bs);
                const double margin = rhs - lhs;
                ++rep.checked_points;
                if (margin < worst) {
                    worst = margin;
                    at = {alpha, xs[i], xs[j]};
                }
            }
        }
    }
    if (rep.checked_points == 0)
        throw EmptyLattice("every first-sense combination point fell outside [" +
                           detail::num(iv.a) + ", " + detail::num(iv.b) + "]");
    rep.worst_margin = worst;
    rep.passed = worst >= -tol;
    if (!rep.passed) rep.witness = at;
    return rep;
}

// Pointwise hypothesis used by the bound proofs:
//   |f'(t a + (1-t) b)| <= |f'(a)|^(t^s) |f'(b)|^(1 - t^s)  for t in [0,1].
inline MembershipReport check_hypothesis_H(const FunctionSpec& fn, Interval iv, ConvexityOrder s,
                                           int grid_n, double tol = kMembershipTol) {
    detail::require_grid(grid_n);
    MembershipReport rep{{ClassTag::HypothesisH, s.s}, grid_n, 0.0, std::nullopt, false, 0, 0};

    const double da = std::fabs(fn.fprime(iv.a));
    const double db = std::fabs(fn.fprime(iv.b));
    if (da == 0.0 || db == 0.0)
        throw ZeroEndpointDerivative("function '" + fn.id +
                                     "' has |f'| = 0 at an endpoint; tau is undefined");

    double worst = std::numeric_limits<double>::infinity();
    std::array<double, 3> at{0, 0, 0};
    for (int k = 0; k < grid_n; ++k) {
        const double t = detail::unit_point(k, grid_n);
        const double ts = std::pow(t, s.s);
        const double lhs = std::fabs(fn.fprime(t * iv.a + (1.0 - t) * iv.b));
        const double rhs = std::pow(da, ts) * std::pow(db, 1.0 - ts);
        const double margin = rhs - lhs;
        ++rep.checked_points;
        if (margin < worst) {
            worst = margin;
            at = {t, iv.a, iv.b};
        }
    }
    rep.worst_margin = worst;
    rep.passed = worst >= -tol;
    if (!rep.passed) rep.witness = at;
    return rep;
}

// Constructs the equality case of the hypothesis: a function whose
// derivative magnitude is g(u) = scale * tau0^(((b-u)/(b-a))^s), so that
// |g(a)|/|g(b)| = tau0 and the hypothesis holds with zero margin. f itself
// is recovered from g by the oracle integrator.
inline FunctionSpec make_equality_family(Interval iv, ConvexityOrder s, double tau0,
                                         double scale) {
    if (!(tau0 > 0.0 && tau0 < 1.0))
        throw InvalidTau("equality family requires tau0 in (0,1), got " + detail::num(tau0));
    if (!(scale > 0.0))
        throw ValidationError("equality family requires scale > 0");

    const double a = iv.a, b = iv.b, se = s.s;
    auto g = [=](double u) { return scale * std::pow(tau0, std::pow((b - u) / (b - a), se)); };
    auto f = [=](double u) {
        if (u == a) return 0.0;
        if (u > a) return adaptive_integrate(g, Interval(a, u), 1e-13).value;
        return -adaptive_integrate(g, Interval(u, a), 1e-13).value;
    };

    FunctionSpec fn;
    fn.id = "eqfam(s=" + detail::num(se) + ",tau0=" + detail::num(tau0) + ")";
    fn.f = f;
    fn.fprime = g;
    fn.claimed_classes = {{ClassTag::HypothesisH, se}, {ClassTag::HypothesisH, 1.0}};
    fn.default_interval = iv;
    return fn;
}

// Largest normalized gap between fprime and a central difference of f over a
// grid_n-point grid of strict interior points. Interior sampling keeps the
// probes inside the domain of definition and away from endpoint cusps, where
// a finite difference measures nothing about the wiring of f and fprime.
inline double derivative_consistency(const FunctionSpec& fn, Interval iv, int grid_n = 101,
                                     double h = 1e-6) {
    double worst = 0.0;
    for (int i = 0; i < grid_n; ++i) {
        const double u = iv.a + (iv.b - iv.a) * (static_cast<double>(i + 1) / (grid_n + 1));
        const double fd = (fn.f(u + h) - fn.f(u - h)) / (2.0 * h);
        const double d = std::fabs(fn.fprime(u) - fd) / (1.0 + std::fabs(fn.fprime(u)));
        worst = std::max(worst, d);
    }
    return worst;
}

// Normalized gap between the exact integral evaluator and the oracle.
inline double exact_integral_consistency(const FunctionSpec& fn, Interval iv) {
    if (!fn.has_exact_integral())
        throw ValidationError("function '" + fn.id + "' carries no exact integral");
    const QuadResult q = adaptive_integrate(fn.f, iv, 1e-12);
    return std::fabs(fn.exact_integral(iv.a, iv.b) - q.value) / (1.0 + std::fabs(q.value));
}

// Built-in corpus. Constructed once; read-only afterwards.
inline const std::vector<FunctionSpec>& catalog() {
    static const std::vector<FunctionSpec> entries = [] {
        std::vector<FunctionSpec> v;

        {
            FunctionSpec fn;
            fn.id = "exp1";
            fn.f = [](double u) { return std::exp(u); };
            fn.fprime = [](double u) { return std::exp(u); };
            fn.exact_integral = [](double a, double b) { return std::exp(b) - std::exp(a); };
            fn.claimed_classes = {{ClassTag::LogConvex, 1.0},
                                  {ClassTag::SLogFirst, 1.0},
                                  {ClassTag::SLogSecond, 1.0},
                                  {ClassTag::SLogSecond, 0.5},
                                  {ClassTag::HypothesisH, 1.0}};
            fn.default_interval = Interval(0.0, 1.0);
            v.push_back(fn);
        }
        {
            FunctionSpec fn;
            fn.id = "exp2";
            fn.f = [](double u) { return std::exp(2.0 * u); };
            fn.fprime = [](double u) { return 2.0 * std::exp(2.0 * u); };
            fn.exact_integral = [](double a, double b) {
                return 0.5 * (std::exp(2.0 * b) - std::exp(2.0 * a));
            };
            fn.claimed_classes = {{ClassTag::LogConvex, 1.0}, {ClassTag::HypothesisH, 1.0}};
            fn.default_interval = Interval(0.0, 1.0);
            v.push_back(fn);
        }
        {
            // tau = e on [0,1]: the standard tau > 1 specimen.
            FunctionSpec fn;
            fn.id = "expdec";
            fn.f = [](double u) { return std::exp(-u); };
            fn.fprime = [](double u) { return -std::exp(-u); };
            fn.exact_integral = [](double a, double b) { return std::exp(-a) - std::exp(-b); };
            fn.claimed_classes = {{ClassTag::HypothesisH, 1.0}};
            fn.default_interval = Interval(0.0, 1.0);
            v.push_back(fn);
        }
        {
            FunctionSpec fn;
            fn.id = "linear";
            fn.f = [](double u) { return u; };
            fn.fprime = [](double) { return 1.0; };
            fn.exact_integral = [](double a, double b) { return 0.5 * (b * b - a * a); };
            fn.claimed_classes = {{ClassTag::HypothesisH, 0.25},
                                  {ClassTag::HypothesisH, 0.5},
                                  {ClassTag::HypothesisH, 0.75},
                                  {ClassTag::HypothesisH, 1.0}};
            fn.default_interval = Interval(0.0, 1.0);
            v.push_back(fn);
        }
        {
            // f'(0) = 0: tau undefined on the default interval.
            FunctionSpec fn;
            fn.id = "quad";
            fn.f = [](double u) { return u * u; };
            fn.fprime = [](double u) { return 2.0 * u; };
            fn.exact_integral = [](double a, double b) { return (b * b * b - a * a * a) / 3.0; };
            fn.default_interval = Interval(0.0, 1.0);
            fn.endpoint_derivative_vanishes = true;
            v.push_back(fn);
        }
        {
            // f' identically zero: excluded from every tau-based bound.
            FunctionSpec fn;
            fn.id = "const1";
            fn.f = [](double) { return 1.0; };
            fn.fprime = [](double) { return 0.0; };
            fn.exact_integral = [](double a, double b) { return b - a; };
            fn.claimed_classes = {{ClassTag::SLogSecond, 0.5}, {ClassTag::SLogSecond, 1.0}};
            fn.default_interval = Interval(0.0, 1.0);
            fn.endpoint_derivative_vanishes = true;
            v.push_back(fn);
        }
        {
            // log|f'| = ln u + u^2/2 is concave near u = 1/2, so the
            // hypothesis fails here even at s = 1.
            FunctionSpec fn;
            fn.id = "expsq";
            fn.f = [](double u) { return std::exp(0.5 * u * u); };
            fn.fprime = [](double u) { return u * std::exp(0.5 * u * u); };
            fn.default_interval = Interval(0.5, 1.5);
            v.push_back(fn);
        }
        for (double se : {0.25, 0.5, 0.75, 1.0}) {
            FunctionSpec fn =
                make_equality_family(Interval(0.0, 1.0), ConvexityOrder(se), 0.5, 1.0);
            fn.id = "eqfam" + std::to_string(static_cast<int>(se * 100));
            v.push_back(fn);
        }
        return v;
    }();
    return entries;
}

inline const FunctionSpec& find_function(const std::string& id) {
    for (const auto& fn : catalog())
        if (fn.id == id) return fn;
    throw UnknownId("unknown catalog function '" + id + "'");
}

} // namespace ostrowski
