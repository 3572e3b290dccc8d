#pragma once

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "ostrowski/errors.hpp"
#include "ostrowski/types.hpp"

namespace ostrowski {

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    long evaluations = 0;
};

inline long default_eval_budget() {
    static const long budget = [] {
        if (const char* env = std::getenv("OSTROWSKI_EVAL_BUDGET")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v > 0) return v;
        }
        return 1000000L;
    }();
    return budget;
}

namespace detail {

// Gauss-Kronrod 7-15 pair, positive abscissae. The Gauss nodes sit at the
// odd indices plus the centre.
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double lo, hi, value, err;
};

template <class F>
inline Segment gk15(F& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const double f0 = f(mid);
    double k15 = kKronrodWeights[7] * f0;
    double g7 = kGaussWeights[3] * f0;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double s = f(mid - dx) + f(mid + dx);
        k15 += kKronrodWeights[i] * s;
        if (i % 2 == 1) g7 += kGaussWeights[i / 2] * s;
    }
    const double value = k15 * half;
    if (!std::isfinite(value))
        throw OracleFailure("integrand produced a non-finite value on [" + num(lo) + ", " +
                            num(hi) + "]");
    return {lo, hi, value, std::fabs((k15 - g7) * half)};
}

} // namespace detail

// Adaptive Gauss-Kronrod integration over [iv.a, iv.b] to absolute tolerance
// tol: the segment with the largest error estimate is bisected until the
// estimates sum below tol. Deterministic: worst-first with first-index
// tie-breaking and a fixed node set.
template <class F>
QuadResult adaptive_integrate(F&& f, Interval iv, double tol = 1e-12,
                              long budget = default_eval_budget()) {
    if (!(tol >= 1e-14))
        throw ValidationError("integration tolerance must be >= 1e-14");

    auto& fn = f;
    std::vector<detail::Segment> segs;
    segs.reserve(64);
    segs.push_back(detail::gk15(fn, iv.a, iv.b));
    long evaluations = 15;

    constexpr std::size_t kMaxSegments = 20000;
    for (;;) {
        double total_err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total_err += segs[i].err;
            if (segs[i].err > segs[worst].err) worst = i;
        }
        if (total_err <= tol) break;

        if (evaluations + 30 > budget)
            throw ToleranceNotReached("oracle integrator exceeded its evaluation budget of " +
                                      std::to_string(budget));
        if (segs.size() >= kMaxSegments)
            throw ToleranceNotReached("oracle integrator exceeded " +
                                      std::to_string(kMaxSegments) + " segments");
        const detail::Segment s = segs[worst];
        const double mid = 0.5 * (s.lo + s.hi);
        if (!(s.lo < mid && mid < s.hi))
            throw ToleranceNotReached("segment [" + detail::num(s.lo) + ", " +
                                      detail::num(s.hi) + "] cannot be refined further");
        segs[worst] = detail::gk15(fn, s.lo, mid);
        segs.push_back(detail::gk15(fn, mid, s.hi));
        evaluations += 30;
    }

    QuadResult res;
    res.evaluations = evaluations;
    for (const detail::Segment& s : segs) {
        res.value += s.value;
        res.err_estimate += s.err;
    }
    return res;
}

} // namespace ostrowski
