#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "ostrowski/funcspace.hpp"
#include "ostrowski/integrate.hpp"
#include "ostrowski/psibounds.hpp"
#include "ostrowski/types.hpp"

namespace ostrowski {

// Strictly increasing node sequence x_0 < x_1 < ... < x_n.
struct Partition {
    std::vector<double> nodes;

    explicit Partition(std::vector<double> ns) : nodes(std::move(ns)) {
        if (nodes.size() < 2) throw ValidationError("partition needs at least two nodes");
        for (std::size_t i = 1; i < nodes.size(); ++i)
            if (!(nodes[i - 1] < nodes[i]))
                throw ValidationError("partition nodes must be strictly increasing");
    }

    std::size_t intervals() const { return nodes.size() - 1; }
    Interval interval() const { return Interval(nodes.front(), nodes.back()); }
    Interval sub(std::size_t i) const { return Interval(nodes[i], nodes[i + 1]); }
};

inline Partition uniform_partition(Interval iv, int n) {
    if (n < 1) throw ValidationError("uniform partition requires n >= 1");
    std::vector<double> nodes(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        nodes[static_cast<std::size_t>(i)] =
            i == n ? iv.b : iv.a + (iv.b - iv.a) * (static_cast<double>(i) / n);
    return Partition(std::move(nodes));
}

// M(f,d) = sum (x_{i+1} - x_i) f((x_i + x_{i+1}) / 2).
inline double midpoint_sum(const FunctionSpec& fn, const Partition& d) {
    double sum = 0.0;
    for (std::size_t i = 0; i < d.intervals(); ++i) {
        const double lo = d.nodes[i], hi = d.nodes[i + 1];
        sum += (hi - lo) * fn.f(0.5 * (lo + hi));
    }
    return sum;
}

// (K/24) * sum (x_{i+1} - x_i)^3 with K = sup |f''|.
inline double classical_error_bound(double K, const Partition& d) {
    if (!(K >= 0.0)) throw ValidationError("classical bound requires K >= 0");
    double sum = 0.0;
    for (std::size_t i = 0; i < d.intervals(); ++i) {
        const double h = d.nodes[i + 1] - d.nodes[i];
        sum += h * h * h;
    }
    return K / 24.0 * sum;
}

struct CertificateTerm {
    Interval iv;
    double tau;   // ratio used by the kernel (after reflection, if any)
    double psi;   // kernel value on the subinterval
    double term;  // per-interval contribution to the bound
    bool reflected = false;
};

// A midpoint approximation with a certified error bound.
struct CompositeCertificate {
    double approx = 0.0;
    double bound = 0.0;
    std::optional<double> true_error; // approx - oracle integral
    double oracle_err = 0.0;
    std::vector<CertificateTerm> per_interval;
};

enum class ReflectPolicy { Error, AutoReflect };

namespace detail {

inline CompositeCertificate em_bound(const FunctionSpec& fn, const Partition& d,
                                     ConvexityOrder s, BoundVariant variant,
                                     ReflectPolicy policy) {
    CompositeCertificate cert;
    cert.per_interval.reserve(d.intervals());
    for (std::size_t i = 0; i < d.intervals(); ++i) {
        const Interval sub = d.sub(i);
        const FunctionSpec* piece = &fn;
        ReflectedProblem reflected{fn, sub, sub.midpoint()};
        bool used_reflection = false;

        Tau tau = tau_of(fn, sub);
        if (tau.branch == TauBranch::GreaterThanOne) {
            if (policy == ReflectPolicy::Error)
                throw UnsupportedBranch("tau > 1 on subinterval [" + num(sub.a) + ", " +
                                        num(sub.b) + "]; reflect the problem or refine");
            reflected = reflect_problem(fn, sub, sub.midpoint());
            piece = &reflected.fn;
            tau = tau_of(*piece, sub);
            used_reflection = true;
        }

        const double term = bound_midpoint(*piece, sub, s, variant);
        const double psi = variant.kind == BoundKind::Thm1
                               ? psi1(tau, s, sub, sub.midpoint()).value
                               : psi2(tau, s, *variant.pq, sub, sub.midpoint()).value;
        cert.per_interval.push_back({sub, tau.value, psi, term, used_reflection});
        cert.bound += term;
    }

    cert.approx = midpoint_sum(fn, d);
    const Interval whole = d.interval();
    if (fn.has_exact_integral()) {
        cert.true_error = cert.approx - fn.exact_integral(whole.a, whole.b);
    } else {
        const QuadResult q = adaptive_integrate(fn.f, whole, 1e-12);
        cert.true_error = cert.approx - q.value;
        cert.oracle_err = q.err_estimate;
    }
    return cert;
}

} // namespace detail

// Per-interval first-kind midpoint bounds, summed in node order:
//   |E_M(f,d)| <= sum |f'(x_{i+1})| psi1(tau_i, s, x_i, x_{i+1}).
inline CompositeCertificate em_bound_prop1(const FunctionSpec& fn, const Partition& d,
                                           ConvexityOrder s,
                                           ReflectPolicy policy = ReflectPolicy::Error) {
    return detail::em_bound(fn, d, s, BoundVariant::thm1(), policy);
}

// Holder variant of the composite certificate.
inline CompositeCertificate em_bound_prop2(const FunctionSpec& fn, const Partition& d,
                                           ConvexityOrder s, HolderPair pq,
                                           ReflectPolicy policy = ReflectPolicy::Error) {
    return detail::em_bound(fn, d, s, BoundVariant::thm2(pq), policy);
}

} // namespace ostrowski
