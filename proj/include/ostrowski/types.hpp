#pragma once

#include <cmath>
#include <string>

#include "ostrowski/errors.hpp"

namespace ostrowski {

namespace detail {

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace detail

// Closed interval [a,b] with a < b.
struct Interval {
    double a;
    double b;

    Interval(double a_, double b_) : a(a_), b(b_) {
        if (!(std::isfinite(a) && std::isfinite(b)))
            throw ValidationError("interval endpoints must be finite");
        if (!(a < b))
            throw ValidationError("interval requires a < b, got [" + detail::num(a) + ", " +
                                  detail::num(b) + "]");
    }

    double length() const { return b - a; }
    double midpoint() const { return 0.5 * (a + b); }
    bool contains(double x) const { return x >= a && x <= b; }
};

// Order parameter s in (0,1] of the s-logarithmic convexity classes.
struct ConvexityOrder {
    double s;

    explicit ConvexityOrder(double s_) : s(s_) {
        if (!(s > 0.0 && s <= 1.0))
            throw ValidationError("convexity order requires s in (0,1], got s = " +
                                  detail::num(s));
    }
};

enum class TauBranch { LessThanOne, One, GreaterThanOne };

inline const char* to_string(TauBranch b) {
    switch (b) {
    case TauBranch::LessThanOne: return "tau<1";
    case TauBranch::One: return "tau=1";
    case TauBranch::GreaterThanOne: return "tau>1";
    }
    return "?";
}

// Endpoint derivative-magnitude ratio with its branch classification.
// Values within branch_epsilon of 1 collapse onto the tau = 1 branch.
struct Tau {
    static constexpr double kDefaultBranchEpsilon = 1e-9;

    double value;
    TauBranch branch;

    explicit Tau(double v, double branch_epsilon = kDefaultBranchEpsilon) : value(v) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw InvalidTau("tau must lie in (0,inf), got " + detail::num(v));
        if (std::fabs(v - 1.0) <= branch_epsilon)
            branch = TauBranch::One;
        else if (v < 1.0)
            branch = TauBranch::LessThanOne;
        else
            branch = TauBranch::GreaterThanOne;
    }
};

// Conjugate exponents p,q > 1 with 1/p + 1/q = 1.
struct HolderPair {
    double p;
    double q;

    HolderPair(double p_, double q_) : p(p_), q(q_) {
        if (!(p > 1.0) || !(q > 1.0))
            throw ValidationError("Holder exponents require p > 1 and q > 1");
        if (std::fabs(1.0 / p + 1.0 / q - 1.0) > 1e-12)
            throw ValidationError("Holder exponents must satisfy 1/p + 1/q = 1");
    }

    static HolderPair from_q(double q) {
        if (!(q > 1.0))
            throw ValidationError("Holder exponent requires q > 1, got q = " + detail::num(q));
        return HolderPair(q / (q - 1.0), q);
    }
};

} // namespace ostrowski
