#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "ostrowski/funcspace.hpp"
#include "ostrowski/pdfapp.hpp"
#include "ostrowski/psibounds.hpp"
#include "ostrowski/quadrature.hpp"
#include "ostrowski/types.hpp"
#include "ostrowski/verification.hpp"

namespace ostrowski {

struct SweepSummary {
    long total = 0;
    long hypothesis_ok = 0;
    long holds = 0;
    long violations = 0; // hypothesis_ok && !holds
    long skipped = 0;    // tau undefined or tau > 1
    double worst_margin = std::numeric_limits<double>::infinity();
};

struct SweepReport {
    std::vector<VerificationRecord> records;
    SweepSummary summary;
};

inline std::vector<double> grid_points(Interval iv, int n) {
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = detail::lattice_point(iv, i, n);
    return xs;
}

namespace detail {

inline void absorb(SweepReport& rep, VerificationRecord rec) {
    ++rep.summary.total;
    if (rec.hypothesis_ok) ++rep.summary.hypothesis_ok;
    if (rec.holds) ++rep.summary.holds;
    if (rec.hypothesis_ok && !rec.holds) ++rep.summary.violations;
    rep.summary.worst_margin = std::min(rep.summary.worst_margin, rec.margin);
    rep.records.push_back(std::move(rec));
}

inline void sort_records(SweepReport& rep) {
    std::stable_sort(rep.records.begin(), rep.records.end(),
                     [](const VerificationRecord& l, const VerificationRecord& r) {
                         return std::tie(l.fn_id, l.s, l.x) < std::tie(r.fn_id, r.s, r.x);
                     });
}

} // namespace detail

// Runs verify_inequality for every catalog function over the given s-grid,
// x-grid, and variants (Thm1 plus Thm2 for each q). Entries whose tau is
// undefined or greater than one are counted as skipped.
inline SweepReport soundness_sweep(const std::vector<double>& s_values = {0.5, 1.0},
                                   const std::vector<double>& q_values = {2.0, 3.0},
                                   int x_count = 11, int grid_n = 101) {
    std::vector<BoundVariant> variants{BoundVariant::thm1()};
    for (double q : q_values) variants.push_back(BoundVariant::thm2(HolderPair::from_q(q)));

    SweepReport rep;
    for (const FunctionSpec& fn : catalog()) {
        const Interval iv = fn.default_interval;
        for (double sv : s_values) {
            for (const BoundVariant& variant : variants) {
                for (double x : grid_points(iv, x_count)) {
                    try {
                        detail::absorb(rep,
                                       verify_inequality(fn, iv, x, ConvexityOrder(sv), variant,
                                                         grid_n));
                    } catch (const UnsupportedBranch&) {
                        ++rep.summary.skipped;
                    } catch (const ZeroEndpointDerivative&) {
                        ++rep.summary.skipped;
                    } catch (const ZeroNumerator&) {
                        ++rep.summary.skipped;
                    } catch (const ZeroDenominator&) {
                        ++rep.summary.skipped;
                    }
                }
            }
        }
    }
    detail::sort_records(rep);
    return rep;
}

// Largest |montgomery_rhs - (mean - f(x))| over an x-grid.
inline double lemma1_max_residual(const FunctionSpec& fn, int x_count = 11) {
    const Interval iv = fn.default_interval;
    double mean = 0.0;
    if (fn.has_exact_integral())
        mean = fn.exact_integral(iv.a, iv.b) / iv.length();
    else
        mean = adaptive_integrate(fn.f, iv, 1e-12).value / iv.length();

    double worst = 0.0;
    for (double x : grid_points(iv, x_count))
        worst = std::max(worst, std::fabs(montgomery_rhs(fn, iv, x) - (mean - fn.f(x))));
    return worst;
}

inline double lemma1_max_residual_catalog(int x_count = 11) {
    double worst = 0.0;
    for (const FunctionSpec& fn : catalog())
        worst = std::max(worst, lemma1_max_residual(fn, x_count));
    return worst;
}

struct PsiOracleResult {
    double max_rel_dev = 0.0;
    long checks = 0;
};

// Closed form against the integral route for both kernels over a tau/s/q/x
// grid; deviations are measured as |closed - integral| / (1 + integral).
inline PsiOracleResult psi_oracle_agreement(
    const std::vector<double>& taus = {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.999},
    const std::vector<double>& ss = {0.25, 0.5, 0.75, 1.0},
    const std::vector<double>& qs = {1.5, 2.0, 3.0},
    const std::vector<Interval>& ivs = {Interval(0.0, 1.0), Interval(2.0, 5.0)}) {
    PsiOracleResult res;
    for (Interval iv : ivs) {
        const double h = iv.length();
        const double xs[5] = {iv.a, iv.a + 0.25 * h, iv.midpoint(), iv.a + 0.75 * h, iv.b};
        for (double tv : taus) {
            const Tau tau(tv);
            for (double sv : ss) {
                const ConvexityOrder s(sv);
                for (double x : xs) {
                    const PsiEvaluation ci = psi1_integral(tau, s, iv, x);
                    const PsiEvaluation cc = psi1_closed(tau, s, iv, x);
                    res.max_rel_dev = std::max(
                        res.max_rel_dev, std::fabs(cc.value - ci.value) / (1.0 + ci.value));
                    ++res.checks;
                    for (double q : qs) {
                        const HolderPair pq = HolderPair::from_q(q);
                        const PsiEvaluation di = psi2_integral(tau, s, pq, iv, x);
                        const PsiEvaluation dc = psi2_closed(tau, s, pq, iv, x);
                        res.max_rel_dev = std::max(
                            res.max_rel_dev, std::fabs(dc.value - di.value) / (1.0 + di.value));
                        ++res.checks;
                    }
                }
            }
        }
    }
    return res;
}

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

inline void report(std::vector<CheckResult>& out, std::ostream* os, std::string name,
                   bool passed, std::string det) {
    if (os) *os << (passed ? "ok   " : "FAIL ") << name << (det.empty() ? "" : ": " + det)
                << "\n";
    out.push_back({std::move(name), passed, std::move(det)});
}

} // namespace detail

// Every module invariant in one sweep; prints one line per check group.
inline std::vector<CheckResult> run_default_suite(std::ostream* os = nullptr) {
    std::vector<CheckResult> out;
    const Interval unit(0.0, 1.0);

    // Catalog consistency: analytic derivatives and exact integrals.
    {
        double worst_fd = 0.0, worst_exact = 0.0;
        for (const FunctionSpec& fn : catalog()) {
            worst_fd = std::max(worst_fd, derivative_consistency(fn, fn.default_interval));
            if (fn.has_exact_integral())
                worst_exact =
                    std::max(worst_exact, exact_integral_consistency(fn, fn.default_interval));
        }
        detail::report(out, os, "catalog derivative consistency", worst_fd <= 1e-6,
                       "max deviation " + detail::num(worst_fd));
        detail::report(out, os, "catalog exact integrals", worst_exact <= 1e-10,
                       "max deviation " + detail::num(worst_exact));
    }

    // The two definitional checkers coincide at s = 1.
    {
        bool ok = true;
        for (const char* id : {"exp1", "const1"}) {
            const FunctionSpec& fn = find_function(id);
            const auto first = check_slog_first(fn, unit, ConvexityOrder(1.0), 11);
            const auto second = check_slog_second(fn, unit, ConvexityOrder(1.0), 11);
            ok = ok && first.passed == second.passed;
        }
        detail::report(out, os, "first/second sense agree at s=1", ok, "");
    }

    // Equality families meet the hypothesis with zero margin.
    {
        double worst = 0.0;
        for (double sv : {0.25, 0.5, 0.75, 1.0}) {
            const FunctionSpec fam = make_equality_family(unit, ConvexityOrder(sv), 0.5, 1.0);
            const auto rep = check_hypothesis_H(fam, unit, ConvexityOrder(sv), 101);
            worst = std::max(worst, std::fabs(rep.worst_margin));
        }
        detail::report(out, os, "equality family zero margin", worst <= 1e-12,
                       "max |margin| " + detail::num(worst));
    }

    // A pass on a lattice survives on its sub-lattices.
    {
        const FunctionSpec& exp1 = find_function("exp1");
        const auto fine = check_slog_second(exp1, unit, ConvexityOrder(0.5), 21);
        const auto coarse = check_slog_second(exp1, unit, ConvexityOrder(0.5), 11);
        detail::report(out, os, "sub-lattice monotonicity",
                       fine.passed && coarse.passed &&
                           coarse.worst_margin >= fine.worst_margin,
                       "");
    }

    // Psi oracle agreement and the tau=1 displays.
    {
        const PsiOracleResult agree = psi_oracle_agreement();
        detail::report(out, os, "psi closed vs integral", agree.max_rel_dev <= 1e-10,
                       "max rel dev " + detail::num(agree.max_rel_dev) + " over " +
                           std::to_string(agree.checks) + " checks");

        double worst = 0.0;
        for (Interval iv : {Interval(0.0, 1.0), Interval(2.0, 5.0)}) {
            for (double x : grid_points(iv, 5)) {
                const double p1 =
                    psi1(Tau(1.0), ConvexityOrder(0.5), iv, x).value -
                    ((iv.a - x) * (iv.a - x) + (iv.b - x) * (iv.b - x)) / (2.0 * iv.length());
                const double p2 =
                    psi2(Tau(1.0), ConvexityOrder(0.5), HolderPair::from_q(2.0), iv, x).value -
                    ((iv.b - x) * (iv.b - x) + (x - iv.a) * (x - iv.a)) / iv.length();
                worst = std::max({worst, std::fabs(p1), std::fabs(p2)});
            }
        }
        detail::report(out, os, "tau=1 branch displays", worst <= 1e-14,
                       "max deviation " + detail::num(worst));
    }

    // Branch continuity approaching tau = 1 from below.
    {
        bool ok = true;
        double worst_last = 0.0;
        const std::pair<double, double> combos[5] = {
            {0.25, 0.2}, {0.5, 0.5}, {0.75, 0.8}, {1.0, 0.5}, {1.0, 0.0}};
        for (auto [sv, x] : combos) {
            const ConvexityOrder s(sv);
            const HolderPair pq = HolderPair::from_q(2.0);
            const double ref1 = psi1(Tau(1.0), s, unit, x).value;
            const double ref2 = psi2(Tau(1.0), s, pq, unit, x).value;
            double prev1 = std::numeric_limits<double>::infinity();
            double prev2 = prev1;
            for (int k = 4; k <= 8; ++k) {
                const Tau tau(1.0 - std::pow(10.0, -k));
                const double d1 = std::fabs(psi1(tau, s, unit, x).value - ref1);
                const double d2 = std::fabs(psi2(tau, s, pq, unit, x).value - ref2);
                ok = ok && d1 <= prev1 && d2 <= prev2;
                prev1 = d1;
                prev2 = d2;
                if (k == 8) worst_last = std::max({worst_last, d1, d2});
            }
        }
        detail::report(out, os, "branch continuity", ok && worst_last <= 1e-6,
                       "gap at 1-1e-8 " + detail::num(worst_last));
    }

    // Kernel symmetries: translation, homogeneity, monotonicity in tau.
    {
        double worst = 0.0;
        const ConvexityOrder s(0.5);
        const HolderPair pq = HolderPair::from_q(2.0);
        for (double shift : {-3.0, 0.7, 12.5}) {
            const Interval moved(unit.a + shift, unit.b + shift);
            for (double x : {0.0, 0.25, 0.7, 1.0}) {
                const Tau tau(0.4);
                worst = std::max(worst, std::fabs(psi1(tau, s, moved, x + shift).value -
                                                  psi1(tau, s, unit, x).value));
                worst = std::max(worst, std::fabs(psi2(tau, s, pq, moved, x + shift).value -
                                                  psi2(tau, s, pq, unit, x).value));
            }
        }
        detail::report(out, os, "translation invariance", worst <= 1e-12,
                       "max deviation " + detail::num(worst));

        worst = 0.0;
        const Interval base(1.0, 3.0);
        for (double lambda : {0.5, 2.0, 37.0}) {
            const Interval scaled(lambda * base.a, lambda * base.b);
            for (double x : {1.0, 1.5, 2.2, 3.0}) {
                const Tau tau(0.4);
                worst = std::max(worst,
                                 std::fabs(psi1(tau, s, scaled, lambda * x).value -
                                           lambda * psi1(tau, s, base, x).value) /
                                     (lambda * psi1(tau, s, base, x).value + 1.0));
                worst = std::max(worst,
                                 std::fabs(psi2(tau, s, pq, scaled, lambda * x).value -
                                           lambda * psi2(tau, s, pq, base, x).value) /
                                     (lambda * psi2(tau, s, pq, base, x).value + 1.0));
            }
        }
        detail::report(out, os, "homogeneity", worst <= 1e-12,
                       "max rel deviation " + detail::num(worst));

        bool mono = true;
        for (double sv : {0.25, 1.0}) {
            for (double x : {0.1, 0.5, 0.9}) {
                double prev = -1.0;
                for (double tv : {0.05, 0.2, 0.4, 0.6, 0.8, 0.95, 1.0}) {
                    const double v =
                        psi1_integral(Tau(tv), ConvexityOrder(sv), unit, x).value;
                    mono = mono && v >= prev - 1e-12;
                    prev = v;
                }
            }
        }
        detail::report(out, os, "monotone in tau", mono, "");
    }

    // Nonnegativity over a randomized parameter grid (fixed seed).
    {
        std::mt19937 rng(20240817u);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const double svals[4] = {0.25, 0.5, 0.75, 1.0};
        const double qvals[3] = {1.5, 2.0, 3.0};
        bool ok = true;
        for (int n = 0; n < 200 && ok; ++n) {
            const double tv = 0.01 + 0.99 * unif(rng);
            const ConvexityOrder s(svals[n % 4]);
            const HolderPair pq = HolderPair::from_q(qvals[n % 3]);
            const Interval iv = (n % 2 == 0) ? Interval(0.0, 1.0) : Interval(-1.0, 3.0);
            const double x = iv.a + iv.length() * unif(rng);
            const Tau tau(tv);
            ok = ok && psi1_integral(tau, s, iv, x).value >= 0.0 &&
                 psi2_integral(tau, s, pq, iv, x).value >= 0.0 &&
                 psi1(tau, s, iv, x).value >= 0.0 && psi2(tau, s, pq, iv, x).value >= 0.0;
        }
        detail::report(out, os, "kernel nonnegativity", ok, "200 random parameter points");
    }

    // Midpoint specialization rides the general code path.
    {
        const FunctionSpec& exp1 = find_function("exp1");
        const ConvexityOrder s(1.0);
        const bool ok =
            bound_midpoint(exp1, unit, s, BoundVariant::thm1()) ==
                bound_theorem1(exp1, unit, unit.midpoint(), s) &&
            bound_midpoint(exp1, unit, s, BoundVariant::thm2(HolderPair::from_q(2.0))) ==
                bound_theorem2(exp1, unit, unit.midpoint(), s, HolderPair::from_q(2.0));
        detail::report(out, os, "midpoint consistency", ok, "");
    }

    // Montgomery identity, sign-corrected.
    {
        const double worst = lemma1_max_residual_catalog();
        detail::report(out, os, "montgomery identity", worst <= 1e-9,
                       "max residual " + detail::num(worst));
    }

    // Soundness: hypothesis implies the bound holds.
    {
        const SweepReport sweep = soundness_sweep();
        detail::report(out, os, "soundness sweep", sweep.summary.violations == 0,
                       std::to_string(sweep.summary.total) + " records, " +
                           std::to_string(sweep.summary.hypothesis_ok) + " hypothesis-ok, " +
                           std::to_string(sweep.summary.violations) + " violations, " +
                           std::to_string(sweep.summary.skipped) + " skipped");
    }

    // Composite certificates stay above the true error.
    {
        bool ok = true;
        std::string det;
        for (const char* id : {"exp1", "exp2", "linear", "eqfam100"}) {
            const FunctionSpec& fn = find_function(id);
            const Interval iv = fn.default_interval;
            for (int n : {1, 2, 4, 8, 16}) {
                const Partition d = uniform_partition(iv, n);
                bool hyp_all = true;
                for (std::size_t i = 0; i < d.intervals(); ++i) {
                    try {
                        hyp_all = hyp_all &&
                                  check_hypothesis_H(fn, d.sub(i), ConvexityOrder(1.0), 101)
                                      .passed;
                    } catch (const ZeroEndpointDerivative&) {
                        hyp_all = false;
                    }
                }
                if (!hyp_all) continue;
                const auto c1 = em_bound_prop1(fn, d, ConvexityOrder(1.0));
                const auto c2 = em_bound_prop2(fn, d, ConvexityOrder(1.0),
                                               HolderPair::from_q(2.0));
                ok = ok && std::fabs(*c1.true_error) <= c1.bound + 1e-9 &&
                     std::fabs(*c2.true_error) <= c2.bound + 1e-9;
            }
        }
        detail::report(out, os, "composite certificates", ok, "n in {1,2,4,8,16}");
    }

    // Certificate bounds add over subintervals, bit for bit.
    {
        const FunctionSpec& exp1 = find_function("exp1");
        const Partition d = uniform_partition(unit, 4);
        const CompositeCertificate whole = em_bound_prop1(exp1, d, ConvexityOrder(1.0));
        double sum = 0.0;
        for (std::size_t i = 0; i < d.intervals(); ++i)
            sum += em_bound_prop1(exp1, Partition({d.nodes[i], d.nodes[i + 1]}),
                                  ConvexityOrder(1.0))
                       .bound;
        detail::report(out, os, "certificate additivity", whole.bound == sum, "");
    }

    // True midpoint error decays like n^-2 for a smooth integrand.
    {
        const FunctionSpec& exp1 = find_function("exp1");
        const double e4 = std::fabs(
            *em_bound_prop1(exp1, uniform_partition(unit, 4), ConvexityOrder(1.0)).true_error);
        const double e16 = std::fabs(
            *em_bound_prop1(exp1, uniform_partition(unit, 16), ConvexityOrder(1.0)).true_error);
        detail::report(out, os, "refinement decay", e16 <= e4 / 10.0,
                       "error(16) " + detail::num(e16) + " vs error(4)/10 " +
                           detail::num(e4 / 10.0));
    }

    // Classical bound is sharp for the quadratic.
    {
        const FunctionSpec& quad = find_function("quad");
        const Partition d = uniform_partition(unit, 4);
        const double truth = quad.exact_integral(0.0, 1.0) - midpoint_sum(quad, d);
        const double bound = classical_error_bound(2.0, d);
        detail::report(out, os, "classical bound sharp on u^2",
                       std::fabs(bound - std::fabs(truth)) <= 1e-12,
                       "bound " + detail::num(bound) + ", error " + detail::num(truth));
    }

    // PDF application records.
    {
        bool ok = true;
        long checked = 0;
        double worst_exp = 0.0;
        for (const DistributionSpec& dist : builtin_distributions()) {
            auto first_moment = [&](double t) { return t * dist.pdf(t); };
            const double direct =
                adaptive_integrate(first_moment, dist.support, 1e-12).value;
            worst_exp = std::max(worst_exp, std::fabs(expectation_of(dist) - direct));
            for (double sv : {0.5, 1.0}) {
                for (double x : grid_points(dist.support, 11)) {
                    try {
                        const auto r3 = pdf_bound_thm3(dist, x, ConvexityOrder(sv));
                        const auto r4 =
                            pdf_bound_thm4(dist, x, ConvexityOrder(sv), HolderPair::from_q(2.0));
                        ++checked;
                        if (r3.hypothesis_ok) ok = ok && r3.holds;
                        if (r4.hypothesis_ok) ok = ok && r4.holds;
                    } catch (const ZeroEndpointDensity&) {
                        break; // uniform: tau undefined by construction
                    }
                }
            }
        }
        detail::report(out, os, "pdf application", ok && worst_exp <= 1e-9,
                       std::to_string(checked) + " records, expectation gap " +
                           detail::num(worst_exp));
    }

    return out;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& c) { return c.passed; });
}

} // namespace ostrowski
