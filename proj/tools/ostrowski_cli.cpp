// Command-line front end: compute bounds, run verification sweeps, certify
// composite midpoint quadrature, and exercise the distribution application.
// Reports are printed as human-readable text, JSON, or CSV.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ostrowski/ostrowski.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace ostrowski;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitBranch = 2;

struct OutputOptions {
    bool json = false;
    bool csv = false;
    std::string out_path;
    double tol = kVerifyTol;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : ""; }

class Timer {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const OutputOptions& opts, const std::string& payload, bool newline = true) {
    if (!opts.out_path.empty()) {
        std::ofstream f(opts.out_path);
        if (!f) throw ValidationError("cannot open output path '" + opts.out_path + "'");
        f << payload;
        if (newline) f << "\n";
        std::cout << "report written to " << opts.out_path << "\n";
        return;
    }
    std::cout << payload;
    if (newline) std::cout << "\n";
}

const char* kCsvHeader = "command,fn,a,b,x,s,q,tau,branch,psi,lhs,rhs,margin,holds,oracle_err";

struct CsvRow {
    std::string command, fn;
    std::optional<double> a, b, x, s, q, tau;
    std::string branch;
    std::optional<double> psi, lhs, rhs, margin;
    std::optional<bool> holds;
    std::optional<double> oracle_err;

    std::string line() const {
        std::ostringstream os;
        os << command << ',' << fn << ',' << fmt_opt(a) << ',' << fmt_opt(b) << ',' << fmt_opt(x)
           << ',' << fmt_opt(s) << ',' << fmt_opt(q) << ',' << fmt_opt(tau) << ',' << branch
           << ',' << fmt_opt(psi) << ',' << fmt_opt(lhs) << ',' << fmt_opt(rhs) << ','
           << fmt_opt(margin) << ',' << (holds ? (*holds ? "true" : "false") : "") << ','
           << fmt_opt(oracle_err);
        return os.str();
    }
};

CsvRow row_from_record(const std::string& command, const VerificationRecord& rec) {
    CsvRow row;
    row.command = command;
    row.fn = rec.fn_id;
    row.a = rec.iv.a;
    row.b = rec.iv.b;
    row.x = rec.x;
    row.s = rec.s;
    if (rec.variant.pq) row.q = rec.variant.pq->q;
    row.tau = rec.tau;
    row.branch = to_string(rec.branch);
    row.psi = rec.psi;
    row.lhs = rec.lhs;
    row.rhs = rec.rhs;
    row.margin = rec.margin;
    row.holds = rec.holds;
    row.oracle_err = rec.oracle_err;
    return row;
}

ordered_json json_record(const VerificationRecord& rec) {
    ordered_json j;
    j["fn"] = rec.fn_id;
    j["a"] = rec.iv.a;
    j["b"] = rec.iv.b;
    j["x"] = rec.x;
    j["s"] = rec.s;
    j["q"] = rec.variant.pq ? ordered_json(rec.variant.pq->q) : ordered_json(nullptr);
    j["tau"] = rec.tau;
    j["branch"] = to_string(rec.branch);
    j["psi"] = rec.psi;
    j["lhs"] = rec.lhs;
    j["rhs"] = rec.rhs;
    j["margin"] = rec.margin;
    j["holds"] = rec.holds;
    j["hypothesis_ok"] = rec.hypothesis_ok;
    j["oracle_err"] = rec.oracle_err;
    return j;
}

void print_human_record(const VerificationRecord& rec) {
    std::cout << "fn          " << rec.fn_id << " on [" << fmt(rec.iv.a) << ", " << fmt(rec.iv.b)
              << "], x = " << fmt(rec.x) << "\n";
    std::cout << "variant     " << (rec.variant.kind == BoundKind::Thm1 ? "thm1" : "thm2")
              << " (s = " << fmt(rec.s);
    if (rec.variant.pq) std::cout << ", q = " << fmt(rec.variant.pq->q);
    std::cout << ")\n";
    std::cout << "tau         " << fmt(rec.tau) << "  (" << to_string(rec.branch) << ")\n";
    std::cout << "psi         " << fmt(rec.psi) << "\n";
    std::cout << "lhs         " << fmt(rec.lhs) << "\n";
    std::cout << "rhs         " << fmt(rec.rhs) << "\n";
    std::cout << "margin      " << fmt(rec.margin) << "\n";
    std::cout << "hypothesis  " << (rec.hypothesis_ok ? "ok" : "FAILS") << " (worst margin "
              << fmt(rec.hypothesis_margin) << ")\n";
    std::cout << "holds       " << (rec.holds ? "yes" : "NO") << "\n";
}

int finish_record(const std::string& command, const VerificationRecord& rec,
                  const OutputOptions& opts, const ordered_json& params, const Timer& timer) {
    if (opts.json) {
        ordered_json j;
        j["command"] = command;
        j["params"] = params;
        ordered_json body = json_record(rec);
        for (auto& [key, value] : body.items()) j[key] = value;
        j["timings"] = ordered_json{{"total_ms", timer.ms()}};
        emit(opts, j.dump(2));
    } else if (opts.csv) {
        emit(opts, std::string(kCsvHeader) + "\n" + row_from_record(command, rec).line());
    } else {
        print_human_record(rec);
    }
    return rec.hypothesis_ok ? kExitOk : kExitBranch;
}

// ---------------------------------------------------------------- bound

struct BoundArgs {
    std::string variant;
    std::string fn_id;
    double a = 0.0, b = 1.0, x = 0.0;
    double s = 1.0;
    double q = 2.0;
    bool q_set = false;
    bool x_set = false;
    bool midpoint = false;
    bool reflect = false;
    double M = 0.0;
    bool M_set = false;
    int grid = 101;
};

int run_bound(const BoundArgs& args, const OutputOptions& opts) {
    Timer timer;
    const Interval iv(args.a, args.b);
    const ConvexityOrder s(args.s);
    const BoundKind kind = args.variant == "thm1" ? BoundKind::Thm1 : BoundKind::Thm2;
    std::optional<HolderPair> pq;
    if (kind == BoundKind::Thm2) {
        if (!args.q_set) throw ValidationError("bound thm2 requires --q");
        pq = HolderPair::from_q(args.q);
    }
    const BoundVariant variant{kind, pq};
    double x = args.midpoint ? iv.midpoint() : args.x;
    if (!args.midpoint && !args.x_set) throw ValidationError("bound requires --x or --midpoint");

    ordered_json params;
    params["variant"] = args.variant;
    params["fn"] = args.M_set ? ordered_json(nullptr) : ordered_json(args.fn_id);
    params["a"] = iv.a;
    params["b"] = iv.b;
    params["x"] = x;
    params["s"] = s.s;
    params["q"] = pq ? ordered_json(pq->q) : ordered_json(nullptr);
    params["M"] = args.M_set ? ordered_json(args.M) : ordered_json(nullptr);
    params["reflect"] = args.reflect;
    params["tol"] = opts.tol;

    if (args.M_set) {
        // Uniform-bound corollary: no catalog function, no LHS.
        const double rhs = bound_corollary_M(args.M, iv, x, s, variant);
        const Tau tau(args.M);
        const double psi = kind == BoundKind::Thm1 ? psi1(tau, s, iv, x).value
                                                   : psi2(tau, s, *pq, iv, x).value;
        if (opts.json) {
            ordered_json j;
            j["command"] = "bound";
            j["params"] = params;
            j["tau"] = tau.value;
            j["branch"] = to_string(tau.branch);
            j["psi"] = psi;
            j["lhs"] = nullptr;
            j["rhs"] = rhs;
            j["margin"] = nullptr;
            j["holds"] = nullptr;
            j["hypothesis_ok"] = nullptr;
            j["oracle_err"] = 0.0;
            j["timings"] = ordered_json{{"total_ms", timer.ms()}};
            emit(opts, j.dump(2));
        } else if (opts.csv) {
            CsvRow row;
            row.command = "bound";
            row.fn = "M=" + fmt(args.M);
            row.a = iv.a;
            row.b = iv.b;
            row.x = x;
            row.s = s.s;
            if (pq) row.q = pq->q;
            row.tau = tau.value;
            row.branch = to_string(tau.branch);
            row.psi = psi;
            row.rhs = rhs;
            row.oracle_err = 0.0;
            emit(opts, std::string(kCsvHeader) + "\n" + row.line());
        } else {
            std::cout << "corollary bound with |f'| <= M = " << fmt(args.M) << "\n";
            std::cout << "tau         " << fmt(tau.value) << "  (" << to_string(tau.branch)
                      << ")\n";
            std::cout << "psi         " << fmt(psi) << "\n";
            std::cout << "rhs         " << fmt(rhs) << "\n";
        }
        return kExitOk;
    }

    const FunctionSpec* fn = &find_function(args.fn_id);
    ReflectedProblem reflected{*fn, iv, x};
    if (args.reflect) {
        reflected = reflect_problem(*fn, iv, x);
        fn = &reflected.fn;
        x = reflected.x;
        params["x"] = x;
    }
    const VerificationRecord rec = verify_inequality(*fn, iv, x, s, variant, args.grid, opts.tol);
    return finish_record("bound", rec, opts, params, timer);
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite = "default";
    std::string fn_id;
    int grid = 0;
};

int run_verify(const VerifyArgs& args, const OutputOptions& opts) {
    Timer timer;
    ordered_json params;
    params["suite"] = args.suite;
    params["fn"] = args.fn_id.empty() ? ordered_json(nullptr) : ordered_json(args.fn_id);
    params["grid"] = args.grid ? ordered_json(args.grid) : ordered_json(nullptr);

    if (args.suite == "default") {
        const std::vector<CheckResult> checks = run_default_suite(opts.json || opts.csv
                                                                      ? nullptr
                                                                      : &std::cout);
        const SweepReport sweep = soundness_sweep();
        const bool ok = all_passed(checks) && sweep.summary.violations == 0;
        if (opts.json) {
            ordered_json j;
            j["command"] = "verify";
            j["params"] = params;
            ordered_json cj = ordered_json::array();
            for (const auto& c : checks)
                cj.push_back(
                    ordered_json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            j["checks"] = cj;
            j["summary"] = ordered_json{{"total", sweep.summary.total},
                                        {"hypothesis_ok", sweep.summary.hypothesis_ok},
                                        {"holds", sweep.summary.holds},
                                        {"violations", sweep.summary.violations},
                                        {"skipped", sweep.summary.skipped},
                                        {"worst_margin", sweep.summary.worst_margin}};
            j["passed"] = ok;
            j["timings"] = ordered_json{{"total_ms", timer.ms()}};
            emit(opts, j.dump(2));
        } else if (opts.csv) {
            std::ostringstream os;
            os << kCsvHeader;
            for (const auto& rec : sweep.records) os << "\n" << row_from_record("verify", rec).line();
            emit(opts, os.str());
        } else {
            std::cout << "soundness sweep: " << sweep.summary.total << " records, "
                      << sweep.summary.hypothesis_ok << " hypothesis-ok, "
                      << sweep.summary.violations << " violations, " << sweep.summary.skipped
                      << " skipped, worst margin " << fmt(sweep.summary.worst_margin) << "\n";
            std::cout << (ok ? "PASS" : "FAIL") << "\n";
        }
        return ok ? kExitOk : kExitValidation;
    }

    if (args.suite == "lemma1") {
        double residual = 0.0;
        if (!args.fn_id.empty())
            residual = lemma1_max_residual(find_function(args.fn_id));
        else
            residual = lemma1_max_residual_catalog();
        const bool ok = residual <= 1e-9;
        if (opts.json) {
            ordered_json j;
            j["command"] = "verify";
            j["params"] = params;
            j["residual"] = residual;
            j["passed"] = ok;
            j["timings"] = ordered_json{{"total_ms", timer.ms()}};
            emit(opts, j.dump(2));
        } else {
            std::cout << "identity residual " << fmt(residual) << " (tolerance 1e-09): "
                      << (ok ? "PASS" : "FAIL") << "\n";
        }
        return ok ? kExitOk : kExitValidation;
    }

    if (args.suite == "psi-oracle") {
        PsiOracleResult res;
        if (args.grid > 1) {
            std::vector<double> taus;
            for (int i = 0; i < args.grid; ++i)
                taus.push_back(0.01 + (0.999 - 0.01) * i / (args.grid - 1));
            res = psi_oracle_agreement(taus);
        } else {
            res = psi_oracle_agreement();
        }
        const bool ok = res.max_rel_dev <= 1e-10;
        if (opts.json) {
            ordered_json j;
            j["command"] = "verify";
            j["params"] = params;
            j["max_rel_dev"] = res.max_rel_dev;
            j["checks"] = res.checks;
            j["passed"] = ok;
            j["timings"] = ordered_json{{"total_ms", timer.ms()}};
            emit(opts, j.dump(2));
        } else {
            std::cout << "max |closed - integral| / (1 + integral) = " << fmt(res.max_rel_dev)
                      << " over " << res.checks << " checks: " << (ok ? "PASS" : "FAIL") << "\n";
        }
        return ok ? kExitOk : kExitValidation;
    }

    throw ValidationError("unknown suite '" + args.suite +
                          "' (expected default, lemma1, or psi-oracle)");
}

// ---------------------------------------------------------------- integrate

struct IntegrateArgs {
    std::string fn_id;
    double a = 0.0, b = 1.0;
    int n = 1;
    std::string bound = "none"; // none | prop1 | prop2
    double s = 1.0;
    double q = 2.0;
    double classical_K = -1.0;
    bool reflect = false;
};

int run_integrate(const IntegrateArgs& args, const OutputOptions& opts) {
    Timer timer;
    const Interval iv(args.a, args.b);
    const FunctionSpec& fn = find_function(args.fn_id);
    const Partition d = uniform_partition(iv, args.n);

    ordered_json params;
    params["fn"] = args.fn_id;
    params["a"] = iv.a;
    params["b"] = iv.b;
    params["n"] = args.n;
    params["bound"] = args.bound;
    params["s"] = args.s;
    params["q"] = args.bound == "prop2" ? ordered_json(args.q) : ordered_json(nullptr);
    params["classical_K"] =
        args.classical_K >= 0.0 ? ordered_json(args.classical_K) : ordered_json(nullptr);
    params["reflect"] = args.reflect;
    params["tol"] = opts.tol;

    const ReflectPolicy policy = args.reflect ? ReflectPolicy::AutoReflect : ReflectPolicy::Error;
    std::optional<CompositeCertificate> cert;
    if (args.bound == "prop1") {
        cert = em_bound_prop1(fn, d, ConvexityOrder(args.s), policy);
    } else if (args.bound == "prop2") {
        cert = em_bound_prop2(fn, d, ConvexityOrder(args.s), HolderPair::from_q(args.q), policy);
    } else if (args.bound != "none") {
        throw ValidationError("unknown bound '" + args.bound +
                              "' (expected none, prop1, or prop2)");
    }

    double approx = 0.0, true_error = 0.0, oracle_err = 0.0;
    if (cert) {
        approx = cert->approx;
        true_error = *cert->true_error;
        oracle_err = cert->oracle_err;
    } else {
        approx = midpoint_sum(fn, d);
        if (fn.has_exact_integral()) {
            true_error = approx - fn.exact_integral(iv.a, iv.b);
        } else {
            const QuadResult q = adaptive_integrate(fn.f, iv, 1e-12);
            true_error = approx - q.value;
            oracle_err = q.err_estimate;
        }
    }
    std::optional<double> classical;
    if (args.classical_K >= 0.0) classical = classical_error_bound(args.classical_K, d);
    const std::optional<bool> holds =
        cert ? std::optional<bool>(std::fabs(true_error) <= cert->bound + opts.tol + oracle_err)
             : std::nullopt;

    if (opts.json) {
        ordered_json j;
        j["command"] = "integrate";
        j["params"] = params;
        j["approx"] = approx;
        j["bound"] = cert ? ordered_json(cert->bound) : ordered_json(nullptr);
        j["classical_bound"] = classical ? ordered_json(*classical) : ordered_json(nullptr);
        j["true_error"] = true_error;
        j["holds"] = holds ? ordered_json(*holds) : ordered_json(nullptr);
        j["oracle_err"] = oracle_err;
        if (cert) {
            ordered_json terms = ordered_json::array();
            for (const auto& t : cert->per_interval)
                terms.push_back(ordered_json{{"a", t.iv.a},
                                             {"b", t.iv.b},
                                             {"tau", t.tau},
                                             {"psi", t.psi},
                                             {"term", t.term},
                                             {"reflected", t.reflected}});
            j["per_interval"] = terms;
        } else {
            j["per_interval"] = nullptr;
        }
        j["timings"] = ordered_json{{"total_ms", timer.ms()}};
        emit(opts, j.dump(2));
    } else if (opts.csv) {
        CsvRow row;
        row.command = "integrate";
        row.fn = args.fn_id;
        row.a = iv.a;
        row.b = iv.b;
        row.s = args.s;
        if (args.bound == "prop2") row.q = args.q;
        row.lhs = std::fabs(true_error);
        if (cert) {
            row.rhs = cert->bound;
            row.margin = cert->bound - std::fabs(true_error);
        }
        row.holds = holds;
        row.oracle_err = oracle_err;
        emit(opts, std::string(kCsvHeader) + "\n" + row.line());
    } else {
        std::cout << "midpoint sum M(f,d)   " << fmt(approx) << "  (n = " << args.n << ")\n";
        std::cout << "true error            " << fmt(true_error) << "\n";
        if (cert) {
            std::cout << "certificate bound     " << fmt(cert->bound) << "  (" << args.bound
                      << ")\n";
            std::cout << "certified             " << (*holds ? "yes" : "NO") << "\n";
        }
        if (classical) std::cout << "classical bound       " << fmt(*classical) << "\n";
    }
    if (holds && !*holds) return kExitValidation;
    return kExitOk;
}

// ---------------------------------------------------------------- pdf

struct PdfArgs {
    std::string dist_id;
    double x = 0.0;
    double s = 1.0;
    double q = 0.0;
    bool q_set = false;
    int grid = 101;
};

int run_pdf(const PdfArgs& args, const OutputOptions& opts) {
    Timer timer;
    const DistributionSpec& dist = find_distribution(args.dist_id);
    const ConvexityOrder s(args.s);

    ordered_json params;
    params["dist"] = args.dist_id;
    params["x"] = args.x;
    params["s"] = s.s;
    params["q"] = args.q_set ? ordered_json(args.q) : ordered_json(nullptr);
    params["tol"] = opts.tol;

    VerificationRecord rec;
    if (args.q_set)
        rec = pdf_bound_thm4(dist, args.x, s, HolderPair::from_q(args.q), args.grid, opts.tol);
    else
        rec = pdf_bound_thm3(dist, args.x, s, args.grid, opts.tol);

    if (!opts.json && !opts.csv) {
        std::cout << "E(X)        " << fmt(dist.expectation) << "\n";
        std::cout << "cdf(x)      " << fmt(dist.cdf(args.x)) << "\n";
    }
    return finish_record("pdf", rec, opts, params, timer);
}

// ---------------------------------------------------------------- catalog

int run_catalog(const OutputOptions& opts) {
    if (opts.json) {
        ordered_json j;
        j["command"] = "catalog";
        ordered_json fns = ordered_json::array();
        for (const auto& fn : catalog()) {
            ordered_json e;
            e["id"] = fn.id;
            e["a"] = fn.default_interval.a;
            e["b"] = fn.default_interval.b;
            e["exact_integral"] = fn.has_exact_integral();
            e["endpoint_derivative_vanishes"] = fn.endpoint_derivative_vanishes;
            fns.push_back(e);
        }
        j["functions"] = fns;
        ordered_json ds = ordered_json::array();
        for (const auto& d : builtin_distributions()) {
            ordered_json e;
            e["id"] = d.id;
            e["a"] = d.support.a;
            e["b"] = d.support.b;
            e["expectation"] = d.expectation;
            ds.push_back(e);
        }
        j["distributions"] = ds;
        emit(opts, j.dump(2));
        return kExitOk;
    }
    std::cout << "functions:\n";
    for (const auto& fn : catalog()) {
        std::cout << "  " << fn.id << "  on [" << fmt(fn.default_interval.a) << ", "
                  << fmt(fn.default_interval.b) << "]";
        if (fn.has_exact_integral()) std::cout << "  [exact integral]";
        if (fn.endpoint_derivative_vanishes) std::cout << "  [tau undefined: |f'| = 0 at an endpoint]";
        std::cout << "\n";
    }
    std::cout << "distributions:\n";
    for (const auto& d : builtin_distributions())
        std::cout << "  " << d.id << "  on [" << fmt(d.support.a) << ", " << fmt(d.support.b)
                  << "]  E = " << fmt(d.expectation) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ostrowski-type bounds for functions with s-log-convex derivative magnitude"};
    app.require_subcommand(1);
    app.fallthrough();

    OutputOptions opts;
    app.add_flag("--json", opts.json, "emit a JSON report");
    app.add_flag("--csv", opts.csv, "emit a CSV report");
    app.add_option("--out", opts.out_path, "write the report to a file");
    app.add_option("--tol", opts.tol, "verification tolerance (default 1e-9)");

    BoundArgs bound_args;
    CLI::App* bound = app.add_subcommand("bound", "evaluate one bound at a point");
    bound->add_option("variant", bound_args.variant, "thm1 or thm2")
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2"}));
    bound->add_option("--fn", bound_args.fn_id, "catalog function id");
    bound->add_option("--a", bound_args.a, "interval lower endpoint")->required();
    bound->add_option("--b", bound_args.b, "interval upper endpoint")->required();
    CLI::Option* xopt = bound->add_option("--x", bound_args.x, "evaluation point");
    bound->add_option("--s", bound_args.s, "convexity order in (0,1]");
    CLI::Option* qopt = bound->add_option("--q", bound_args.q, "Holder exponent q > 1");
    bound->add_flag("--midpoint", bound_args.midpoint, "evaluate at x = (a+b)/2");
    bound->add_flag("--reflect", bound_args.reflect, "reflect the problem first (for tau > 1)");
    CLI::Option* mopt =
        bound->add_option("--M", bound_args.M, "uniform bound |f'| <= M (corollary form)");
    bound->add_option("--grid", bound_args.grid, "hypothesis check grid size");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", verify_args.suite, "default, lemma1, or psi-oracle");
    verify->add_option("--fn", verify_args.fn_id, "restrict to one catalog function");
    verify->add_option("--grid", verify_args.grid, "tau grid size for psi-oracle");

    IntegrateArgs int_args;
    CLI::App* integrate = app.add_subcommand("integrate", "composite midpoint rule with certificates");
    integrate->add_option("--fn", int_args.fn_id, "catalog function id")->required();
    integrate->add_option("--a", int_args.a, "interval lower endpoint")->required();
    integrate->add_option("--b", int_args.b, "interval upper endpoint")->required();
    integrate->add_option("--n", int_args.n, "number of uniform subintervals")->required();
    integrate->add_option("--bound", int_args.bound, "certificate: none, prop1, or prop2");
    integrate->add_option("--s", int_args.s, "convexity order in (0,1]");
    integrate->add_option("--q", int_args.q, "Holder exponent for prop2");
    integrate->add_option("--classical-K", int_args.classical_K, "sup |f''| for the classical bound");
    integrate->add_flag("--reflect", int_args.reflect, "auto-reflect subintervals with tau > 1");

    PdfArgs pdf_args;
    CLI::App* pdf = app.add_subcommand("pdf", "CDF-vs-expectation bound for a built-in density");
    pdf->add_option("--dist", pdf_args.dist_id, "distribution id")->required();
    pdf->add_option("--x", pdf_args.x, "evaluation point")->required();
    pdf->add_option("--s", pdf_args.s, "convexity order in (0,1]");
    CLI::Option* pdf_qopt = pdf->add_option("--q", pdf_args.q, "Holder exponent (Holder variant)");
    pdf->add_option("--grid", pdf_args.grid, "hypothesis check grid size");

    CLI::App* cat = app.add_subcommand("catalog", "list built-in functions and distributions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitValidation;
    }

    bound_args.q_set = qopt->count() > 0;
    bound_args.x_set = xopt->count() > 0;
    bound_args.M_set = mopt->count() > 0;
    pdf_args.q_set = pdf_qopt->count() > 0;

    try {
        if (bound->parsed()) return run_bound(bound_args, opts);
        if (verify->parsed()) return run_verify(verify_args, opts);
        if (integrate->parsed()) return run_integrate(int_args, opts);
        if (pdf->parsed()) return run_pdf(pdf_args, opts);
        if (cat->parsed()) return run_catalog(opts);
    } catch (const UnsupportedBranch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBranch;
    } catch (const NearSingular& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBranch;
    } catch (const ZeroEndpointDensity& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBranch;
    } catch (const ZeroEndpointDerivative& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBranch;
    } catch (const ZeroNumerator& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBranch;
    } catch (const ZeroDenominator& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBranch;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
