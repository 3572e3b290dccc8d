// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Golden values were recomputed with the integral oracle
// (and closed-form antiderivatives where available) before being frozen.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ostrowski/ostrowski.hpp"
#include "subprocess.hpp"

using namespace ostrowski;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

const Interval unit(0.0, 1.0);

// 1. psi closed forms agree with the integral oracle over the full grid.
Outcome criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    const PsiOracleResult res = psi_oracle_agreement(
        {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.999}, {0.25, 0.5, 0.75, 1.0}, {1.5, 2.0, 3.0},
        {Interval(0.0, 1.0), Interval(2.0, 5.0)});
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {res.max_rel_dev <= 1e-10 && secs <= 10.0,
            "max rel dev " + num(res.max_rel_dev) + " over " + std::to_string(res.checks) +
                " checks in " + num(secs) + " s"};
}

// 2. tau = 1 branch reproduces the closed displays to 1e-14.
Outcome criterion2() {
    double worst = 0.0;
    for (const Interval iv : {Interval(0.0, 1.0), Interval(2.0, 5.0)}) {
        for (double x : grid_points(iv, 7)) {
            for (double sv : {0.25, 1.0}) {
                const ConvexityOrder s(sv);
                const double d1 =
                    psi1(Tau(1.0), s, iv, x).value -
                    ((iv.a - x) * (iv.a - x) + (iv.b - x) * (iv.b - x)) / (2.0 * iv.length());
                const double d2 =
                    psi2(Tau(1.0), s, HolderPair::from_q(2.0), iv, x).value -
                    ((iv.b - x) * (iv.b - x) + (x - iv.a) * (x - iv.a)) / iv.length();
                worst = std::max({worst, std::fabs(d1), std::fabs(d2)});
            }
        }
    }
    return {worst <= 1e-14, "max deviation " + num(worst)};
}

// 3. branch continuity at tau = 1 - 1e-8 (evaluator falls back to the
//    integral route inside the closed-form cutoff).
Outcome criterion3() {
    double worst = 0.0;
    const std::pair<double, double> combos[5] = {
        {0.25, 0.2}, {0.5, 0.5}, {0.75, 0.8}, {1.0, 0.5}, {1.0, 0.0}};
    const Tau nearly(1.0 - 1e-8);
    for (auto [sv, x] : combos) {
        const ConvexityOrder s(sv);
        const HolderPair q2 = HolderPair::from_q(2.0);
        worst = std::max(worst, std::fabs(psi1(nearly, s, unit, x).value -
                                          psi1(Tau(1.0), s, unit, x).value));
        worst = std::max(worst, std::fabs(psi2(nearly, s, q2, unit, x).value -
                                          psi2(Tau(1.0), s, q2, unit, x).value));
    }
    return {worst <= 1e-6, "max gap " + num(worst)};
}

// 4. soundness: hypothesis implies the bound, across the catalog.
Outcome criterion4() {
    const auto t0 = std::chrono::steady_clock::now();
    const SweepReport rep = soundness_sweep({0.5, 1.0}, {2.0, 3.0}, 11);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {rep.summary.violations == 0 && rep.summary.hypothesis_ok > 0 && secs <= 60.0,
            std::to_string(rep.summary.total) + " records, " +
                std::to_string(rep.summary.hypothesis_ok) + " hypothesis-ok, " +
                std::to_string(rep.summary.violations) + " violations in " + num(secs) + " s"};
}

// 5. the weighted-kernel identity, sign corrected.
Outcome criterion5() {
    const double residual = lemma1_max_residual_catalog(11);
    const double quad_val = montgomery_rhs(find_function("quad"), unit, 0.5);
    const bool ok = residual <= 1e-9 && std::fabs(quad_val - 1.0 / 12.0) <= 1e-12;
    return {ok, "max residual " + num(residual) + ", quadratic value " + num(quad_val)};
}

// 6. composite certificates for e^u: sound at every n, goldens at n = 2.
Outcome criterion6() {
    const FunctionSpec& exp1 = find_function("exp1");
    bool ok = true;
    std::string detail;
    for (int n : {1, 2, 4, 8, 16}) {
        const Partition d = uniform_partition(unit, n);
        const CompositeCertificate c1 = em_bound_prop1(exp1, d, ConvexityOrder(1.0));
        const CompositeCertificate c2 =
            em_bound_prop2(exp1, d, ConvexityOrder(1.0), HolderPair::from_q(2.0));
        ok = ok && std::fabs(*c1.true_error) <= c1.bound + 1e-9 &&
             std::fabs(*c2.true_error) <= c2.bound + 1e-9;
        if (n == 2) {
            ok = ok && std::fabs(std::fabs(*c1.true_error) - 0.017769111808837001) <= 1e-9 &&
                 std::fabs(c1.bound - 0.42734700651693847) <= 1e-9;
            detail = "n=2: true error " + num(std::fabs(*c1.true_error)) + ", bound " +
                     num(c1.bound);
        }
    }
    return {ok, detail};
}

// 7. classical bound matches the quadratic's true error exactly.
Outcome criterion7() {
    const FunctionSpec& quad = find_function("quad");
    const Partition d = uniform_partition(unit, 4);
    const double truth = std::fabs(quad.exact_integral(0.0, 1.0) - midpoint_sum(quad, d));
    const double bound = classical_error_bound(2.0, d);
    return {std::fabs(bound - truth) <= 1e-12 && std::fabs(bound - 1.0 / 192.0) <= 1e-12,
            "bound " + num(bound) + ", true error " + num(truth)};
}

// 8. distribution application on the truncated exponential.
Outcome criterion8() {
    const DistributionSpec& texp1 = find_distribution("texp1");
    const VerificationRecord r3 = pdf_bound_thm3(texp1, 0.5, ConvexityOrder(1.0));
    const VerificationRecord r4 =
        pdf_bound_thm4(texp1, 0.5, ConvexityOrder(1.0), HolderPair::from_q(2.0));
    auto first_moment = [&](double t) { return t * texp1.pdf(t); };
    const double direct = adaptive_integrate(first_moment, texp1.support, 1e-12).value;
    const bool ok = std::fabs(r3.lhs - 0.040482624332528083) <= 1e-6 &&
                    std::fabs(r3.rhs - 0.24491866240370916) <= 1e-6 && r3.holds &&
                    r4.holds && std::fabs(expectation_of(texp1) - direct) <= 1e-9;
    return {ok, "lhs " + num(r3.lhs) + ", rhs " + num(r3.rhs) + ", thm4 rhs " + num(r4.rhs)};
}

// 9. hypothesis falsification: e^u fails H(0.5) with the t = 0.25 witness.
Outcome criterion9() {
    const MembershipReport rep =
        check_hypothesis_H(find_function("exp1"), unit, ConvexityOrder(0.5), 101);
    const double at_quarter = std::exp(0.75) - std::exp(0.5); // LHS - RHS at t = 0.25
    return {!rep.passed && rep.witness.has_value() && at_quarter >= 0.46,
            "worst margin " + num(rep.worst_margin) + ", violation at t=0.25 is " +
                num(at_quarter)};
}

// 10. CLI contract: designed error paths and byte-identical JSON.
Outcome criterion10() {
    const std::string cli = OSTROWSKI_CLI_PATH;
    const auto tau_gt1 = testutil::run(cli + " bound thm1 --fn expdec --a 0 --b 1 --x 0.5 --s 1");
    const auto zero_deriv = testutil::run(cli + " bound thm1 --fn quad --a 0 --b 1 --x 0.5 --s 1");
    const auto zero_density = testutil::run(cli + " pdf --dist uniform --x 0.5");
    const auto outside = testutil::run(cli + " bound thm1 --fn exp1 --a 0 --b 1 --x 2 --s 1");
    const auto json_run =
        testutil::run(cli + " bound thm1 --fn exp1 --a 0 --b 1 --x 0.5 --s 1 --json");
    bool roundtrip = false;
    if (json_run.exit_code == 0) {
        const ordered_json j = ordered_json::parse(json_run.output);
        roundtrip = (j.dump(2) + "\n") == json_run.output;
    }
    const bool ok = tau_gt1.exit_code == 2 && zero_deriv.exit_code == 2 &&
                    zero_density.exit_code == 2 && outside.exit_code == 1 && roundtrip;
    return {ok, "exit codes " + std::to_string(tau_gt1.exit_code) + "/" +
                    std::to_string(zero_deriv.exit_code) + "/" +
                    std::to_string(zero_density.exit_code) + "/" +
                    std::to_string(outside.exit_code) + ", json round-trip " +
                    (roundtrip ? "byte-identical" : "MISMATCH")};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"psi oracle agreement", criterion1},
        {"tau=1 branch exactness", criterion2},
        {"branch continuity", criterion3},
        {"theorem soundness sweep", criterion4},
        {"weighted-kernel identity", criterion5},
        {"composite certificates", criterion6},
        {"classical bound sharpness", criterion7},
        {"pdf application", criterion8},
        {"hypothesis falsification", criterion9},
        {"cli contract", criterion10},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        if (!out.pass) ++failures;
        std::printf("[%s] criterion %2zu: %s (%s)\n", out.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), out.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
