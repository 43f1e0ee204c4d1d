// Benchmark front end for the nlsolve shared library.
//
// Subcommands:
//   solve       run one method on one builtin problem and report residuals
//   table2      residual-norm benchmark table for all problems and methods
//   efficiency  efficiency-index curves over problem dimension (CSV)
//   verify      order-condition report plus Jacobian consistency checks

#include "nlsolve.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 3;
constexpr int kExitNoConvergence = 2;

struct ReferenceRow {
    const char* method;
    const char* r1;
    const char* r2;
    const char* r3;
    const char* e;
};

// Published residual norms for the two methods this library does not
// implement; rendered side by side with computed rows when requested.
const std::map<std::string, std::vector<ReferenceRow>> kReferenceRows = {
    {"ex41",
     {{"MN4", "7.2004e-6", "5.2511e-27", "7.4763e-112", "1.0385"},
      {"SH4", "1.2923e-5", "9.2420e-26", "1.2710e-106", "1.0315"}}},
    {"ex42",
     {{"MN4", "1.1075e-2", "1.1610e-7", "8.8842e-28", "1.0137"},
      {"SH4", "1.5676e-2", "1.1309e-6", "2.4814e-23", "1.0108"}}},
    {"ex43",
     {{"MN4", "2.9921e-4", "9.1289e-17", "2.2390e-68", "1.0064"},
      {"SH4", "5.3618e-4", "1.4537e-15", "2.1746e-63", "1.0049"}}},
    {"ex44",
     {{"MN4", "1.5256e-4", "4.0018e-18", "3.2145e-72", "1.0385"},
      {"SH4", "2.9895e-4", "6.5567e-17", "1.8332e-67", "1.0315"}}},
    {"ex45",
     {{"MN4", "9.6743e-7", "1.8890e-24", "4.4506e-95", "1.0137"},
      {"SH4", "2.1907e-6", "8.6294e-23", "3.6734e-87", "1.0108"}}},
    {"ex46",
     {{"MN4", "8.1961e-2", "1.6321e-8", "3.3334e-35", "1.0137"},
      {"SH4", "1.1046e-1", "9.6577e-8", "6.9429e-32", "1.0108"}}},
    {"ex47",
     {{"MN4", "1.1392e-1", "2.4875e-6", "5.7474e-25", "1.0385"},
      {"SH4", "1.0359e-1", "5.4166e-6", "4.6302e-23", "1.0315"}}},
    {"ex48",
     {{"MN4", "6.3158e-1", "3.0004e-6", "2.4026e-27", "1.0000"},
      {"SH4", "7.9251e-1", "1.2152e-5", "8.0715e-25", "1.0000"}}},
};

const std::vector<std::string> kAllProblems = {"ex41", "ex42", "ex43", "ex44",
                                               "ex45", "ex46", "ex47", "ex48"};

std::string fmt4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

int method_id(const std::string& name, nls_method& out) {
    if (name == "newton") out = NLS_METHOD_NEWTON;
    else if (name == "m3") out = NLS_METHOD_M3;
    else if (name == "m4") out = NLS_METHOD_M4;
    else if (name == "m4-general") out = NLS_METHOD_M4_GENERAL;
    else return -1;
    return 0;
}

// Flops-like efficiency model name for a runnable method.
const char* cost_name(nls_method m) { return m == NLS_METHOD_M3 ? "M3" : "M4"; }

struct RunResult {
    nls_solve_status status = NLS_SOLVE_MAX_ITER;
    int steps = 0;
    std::vector<std::string> residuals;  // k = 1..3 where available
    std::optional<double> coc;
    double efficiency_index = 0.0;
    std::string error;
};

int run_problem(const std::string& problem, int size, nls_method method,
                const nls_solve_options& base_opts, RunResult& out) {
    nls_problem* p = nullptr;
    nls_rc rc = nls_problem_create(problem.c_str(), size, &p);
    if (rc != NLS_OK) {
        out.error = nls_strerror(rc);
        return rc;
    }
    nls_solve_options opts = base_opts;
    opts.method = method;
    if (method != NLS_METHOD_M4_GENERAL) opts.beta = opts.a1 = opts.a2 = opts.a3 = nullptr;
    nls_trace* t = nullptr;
    rc = nls_solve(p, &opts, &t);
    if (rc != NLS_OK) {
        out.error = nls_strerror(rc);
        nls_problem_free(p);
        return rc;
    }
    out.status = nls_trace_status(t);
    out.steps = nls_trace_steps(t);
    char buf[128];
    for (int k = 1; k <= 3 && k <= out.steps; ++k) {
        if (nls_trace_residual(t, k, 5, buf, sizeof buf) == NLS_OK) out.residuals.push_back(buf);
    }
    double rho = 0.0;
    if (nls_trace_coc(t, &rho) == NLS_OK) out.coc = rho;
    double e = 0.0;
    if (nls_efficiency_index(cost_name(method), nls_problem_dim(p), 1, &e) == NLS_OK)
        out.efficiency_index = e;
    nls_trace_free(t);
    nls_problem_free(p);
    return NLS_OK;
}

int cmd_solve(const std::string& problem, int size, const std::string& method_name,
              const nls_solve_options& opts, const std::string& format) {
    nls_method method;
    if (method_id(method_name, method) != 0) {
        std::cerr << "error: unknown method " << method_name << "\n";
        return kExitUsage;
    }
    RunResult r;
    int rc = run_problem(problem, size, method, opts, r);
    if (rc != NLS_OK) {
        std::cerr << "error: " << r.error << "\n";
        return rc == NLS_ERR_UNKNOWN_PROBLEM || rc == NLS_ERR_INVALID_SIZE ||
                       rc == NLS_ERR_INVALID_ARG
                   ? kExitUsage
                   : kExitNoConvergence;
    }
    auto cell = [&](size_t i) { return i < r.residuals.size() ? r.residuals[i] : "-"; };
    std::string coc_s = r.coc ? fmt4(*r.coc) : "-";
    if (format == "json") {
        nlohmann::json j;
        j["problem"] = problem;
        j["method"] = method_name;
        j["status"] = nls_status_name(r.status);
        j["iterations"] = r.steps;
        j["residuals"] = r.residuals;
        if (r.coc) j["coc"] = *r.coc; else j["coc"] = nullptr;
        j["efficiency_index"] = r.efficiency_index;
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "problem,method,norm1,norm2,norm3,iterations,status,coc,efficiency_index\n"
                  << problem << "," << method_name << "," << cell(0) << "," << cell(1) << ","
                  << cell(2) << "," << r.steps << "," << nls_status_name(r.status) << "," << coc_s
                  << "," << fmt4(r.efficiency_index) << "\n";
    } else {
        std::cout << "| problem | method | ||F(x1)|| | ||F(x2)|| | ||F(x3)|| | iters | status | coc | E |\n"
                  << "|---|---|---|---|---|---|---|---|---|\n"
                  << "| " << problem << " | " << method_name << " | " << cell(0) << " | " << cell(1)
                  << " | " << cell(2) << " | " << r.steps << " | " << nls_status_name(r.status)
                  << " | " << coc_s << " | " << fmt4(r.efficiency_index) << " |\n";
    }
    return r.status == NLS_SOLVE_CONVERGED ? 0 : kExitNoConvergence;
}

int cmd_table2(const std::vector<std::string>& methods, const std::vector<std::string>& problems,
               const nls_solve_options& opts, const std::string& format, bool include_reference) {
    struct Row {
        std::string example, method, source, r1, r2, r3, e;
    };
    std::vector<Row> rows;
    for (const std::string& prob : problems) {
        for (const std::string& mname : methods) {
            nls_method method;
            if (method_id(mname, method) != 0) {
                std::cerr << "error: unknown method " << mname << "\n";
                return kExitUsage;
            }
            RunResult r;
            Row row{prob, mname, "computed", "-", "-", "-", "-"};
            if (run_problem(prob, 0, method, opts, r) != NLS_OK) {
                row.source = "failed: " + r.error;
            } else {
                if (r.residuals.size() > 0) row.r1 = r.residuals[0];
                if (r.residuals.size() > 1) row.r2 = r.residuals[1];
                if (r.residuals.size() > 2) row.r3 = r.residuals[2];
                row.e = fmt4(r.efficiency_index);
                if (r.status != NLS_SOLVE_CONVERGED)
                    row.source = std::string("computed, ") + nls_status_name(r.status);
            }
            rows.push_back(row);
        }
        if (include_reference) {
            auto it = kReferenceRows.find(prob);
            if (it != kReferenceRows.end())
                for (const ReferenceRow& rr : it->second)
                    rows.push_back({prob, rr.method, "reference", rr.r1, rr.r2, rr.r3, rr.e});
        }
    }
    if (format == "csv") {
        std::cout << "example,method,source,norm1,norm2,norm3,E\n";
        for (const auto& r : rows)
            std::cout << r.example << "," << r.method << "," << r.source << "," << r.r1 << ","
                      << r.r2 << "," << r.r3 << "," << r.e << "\n";
    } else {
        std::cout << "| example | method | source | ||F(x1)|| | ||F(x2)|| | ||F(x3)|| | E |\n"
                  << "|---|---|---|---|---|---|---|\n";
        for (const auto& r : rows)
            std::cout << "| " << r.example << " | " << r.method << " | " << r.source << " | "
                      << r.r1 << " | " << r.r2 << " | " << r.r3 << " | " << r.e << " |\n";
    }
    return 0;
}

int cmd_efficiency(const std::string& kind, long n_from, long n_to, const std::string& out_path) {
    if (n_from < 2 || n_to < n_from || n_to > 1000000) {
        std::cerr << "error: invalid dimension range [" << n_from << ", " << n_to << "]\n";
        return kExitUsage;
    }
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);  // binary keeps LF endings everywhere
        if (!file) {
            std::cerr << "error: cannot open " << out_path << "\n";
            return kExitUsage;
        }
        os = &file;
    }
    const int flops = kind == "flops" ? 1 : 0;
    *os << "n,SH4,MN4,M3,M4\n";
    char buf[64];
    for (long n = n_from; n <= n_to; ++n) {
        *os << n;
        for (const char* m : {"SH4", "MN4", "M3", "M4"}) {
            double v = 0.0;
            nls_efficiency_index(m, n, flops, &v);
            // indices lie in (1, 1.2): %.9f carries exactly 10 significant digits
            std::snprintf(buf, sizeof buf, "%.9f", v);
            *os << "," << buf;
        }
        *os << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& params_csv, int trials, int prec_bits) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : params_csv) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4) {
        std::cerr << "error: --params expects beta,a1,a2,a3\n";
        return kExitUsage;
    }
    nls_order_report rep;
    nls_rc rc = nls_order_conditions(parts[0].c_str(), parts[1].c_str(), parts[2].c_str(),
                                     parts[3].c_str(), &rep);
    if (rc != NLS_OK) {
        std::cerr << "error: " << nls_strerror(rc) << "\n";
        return kExitUsage;
    }
    std::cout << "order conditions for beta=" << parts[0] << ", a1=" << parts[1]
              << ", a2=" << parts[2] << ", a3=" << parts[3] << "\n";
    std::cout << "  1-(a1+a2+a3) = " << rep.a_sum_minus_one << (rep.a_sum_zero ? " (zero)" : "")
              << "\n";
    std::cout << "  T1 = " << rep.t1 << (rep.t1_zero ? " (zero)" : "") << "\n";
    std::cout << "  T2 = " << rep.t2 << (rep.t2_zero ? " (zero)" : "") << "\n";
    std::cout << "  T3 = " << rep.t3 << (rep.t3_zero ? " (zero)" : "") << "\n";
    std::cout << "  T4..T7 = " << rep.t4 << ", " << rep.t5 << ", " << rep.t6 << ", " << rep.t7
              << "\n";
    if (rep.satisfied_order == 4) {
        std::cout << "  order 4 conditions satisfied\n";
    } else if (rep.satisfied_order == 3) {
        std::cout << "  order 3 (" << (!rep.t2_zero ? "T2 != 0" : "T3 != 0") << ")\n";
    } else {
        std::cout << "  order <= 2 ("
                  << (!rep.a_sum_zero ? "linear-term failure: 1-(a1+a2+a3) != 0" : "T1 != 0")
                  << ")\n";
    }

    bool all_pass = true;
    std::cout << "\njacobian consistency (analytic vs finite difference, " << trials
              << " trials/problem):\n";
    for (const std::string& prob : kAllProblems) {
        nls_problem* p = nullptr;
        if (nls_problem_create(prob.c_str(), 0, &p) != NLS_OK) {
            all_pass = false;
            continue;
        }
        double dev = 0.0;
        int passed = 0;
        rc = nls_problem_check_consistency(p, trials, prec_bits, &dev, &passed);
        nls_problem_free(p);
        if (rc != NLS_OK || !passed) all_pass = false;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3e", dev);
        std::cout << "  " << prob << ": max column deviation " << buf << " -> "
                  << (rc == NLS_OK && passed ? "pass" : "FAIL") << "\n";
    }
    return (rep.satisfied_order == 4 && all_pass) ? 0 : kExitNoConvergence;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Configurable-precision nonlinear-systems solver benchmark"};
    app.require_subcommand(1);

    std::string problem, method = "m4", format = "md";
    std::string beta, a1, a2, a3, tol = "1e-150", norm = "two";
    int size = 0, max_iter = 100, prec_bits = 512;

    auto* solve_cmd = app.add_subcommand("solve", "Run one method on one builtin problem");
    solve_cmd->add_option("--problem", problem, "Problem name (ex41..ex48)")->required();
    solve_cmd->add_option("--size", size, "Dimension for ex48 (odd, >= 3)");
    solve_cmd->add_option("--method", method, "newton|m3|m4|m4-general");
    solve_cmd->add_option("--beta", beta, "m4-general parameter");
    solve_cmd->add_option("--a1", a1, "m4-general parameter");
    solve_cmd->add_option("--a2", a2, "m4-general parameter");
    solve_cmd->add_option("--a3", a3, "m4-general parameter");
    solve_cmd->add_option("--tol", tol, "Residual-norm stopping threshold");
    solve_cmd->add_option("--max-iter", max_iter, "Iteration cap");
    solve_cmd->add_option("--prec-bits", prec_bits, "Working precision in bits")
        ->envname("SOLVER_PREC_BITS");
    solve_cmd->add_option("--norm", norm, "two|inf");
    solve_cmd->add_option("--format", format, "md|csv|json");

    std::string methods_csv = "m3,m4", problems_csv = "all";
    bool no_reference = false;
    auto* table_cmd = app.add_subcommand("table2", "Residual benchmark table for all problems");
    table_cmd->add_option("--methods", methods_csv, "Comma-separated computed methods");
    table_cmd->add_option("--problems", problems_csv, "all or comma-separated names");
    table_cmd->add_option("--tol", tol, "Residual-norm stopping threshold");
    table_cmd->add_option("--prec-bits", prec_bits, "Working precision in bits")
        ->envname("SOLVER_PREC_BITS");
    table_cmd->add_option("--format", format, "md|csv");
    table_cmd->add_flag("--no-reference", no_reference, "Omit published SH4/MN4 reference rows");

    std::string kind, out_path;
    long n_from = 2, n_to = 20;
    auto* eff_cmd = app.add_subcommand("efficiency", "Efficiency-index curves (CSV)");
    eff_cmd->add_option("--kind", kind, "classical|flops")->required();
    eff_cmd->add_option("--n-from", n_from, "First dimension")->required();
    eff_cmd->add_option("--n-to", n_to, "Last dimension")->required();
    eff_cmd->add_option("--out", out_path, "Output file (default stdout)");

    std::string params_csv = "2/3,9/4,-9/4,1";
    int trials = 3;
    auto* verify_cmd = app.add_subcommand("verify", "Order conditions + Jacobian consistency");
    verify_cmd->add_option("--params", params_csv, "beta,a1,a2,a3 (rational or decimal)");
    verify_cmd->add_option("--trials", trials, "Consistency trials per problem");
    verify_cmd->add_option("--prec-bits", prec_bits, "Working precision in bits")
        ->envname("SOLVER_PREC_BITS");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (prec_bits < 64) {
        std::cerr << "error: --prec-bits must be at least 64\n";
        return kExitUsage;
    }

    nls_solve_options opts;
    nls_solve_options_init(&opts);
    opts.tol = tol.c_str();
    opts.max_iter = max_iter;
    opts.prec_bits = prec_bits;
    opts.norm_kind = norm == "inf" ? NLS_NORM_INF : NLS_NORM_TWO;
    if (norm != "two" && norm != "inf") {
        std::cerr << "error: --norm must be two or inf\n";
        return kExitUsage;
    }

    if (solve_cmd->parsed()) {
        bool has_params = !beta.empty() || !a1.empty() || !a2.empty() || !a3.empty();
        if (has_params && method != "m4-general") {
            std::cerr << "error: --beta/--a1/--a2/--a3 require --method m4-general\n";
            return kExitUsage;
        }
        if (!beta.empty()) opts.beta = beta.c_str();
        if (!a1.empty()) opts.a1 = a1.c_str();
        if (!a2.empty()) opts.a2 = a2.c_str();
        if (!a3.empty()) opts.a3 = a3.c_str();
        if (format != "md" && format != "csv" && format != "json") {
            std::cerr << "error: --format must be md, csv or json\n";
            return kExitUsage;
        }
        return cmd_solve(problem, size, method, opts, format);
    }
    if (table_cmd->parsed()) {
        if (format != "md" && format != "csv") {
            std::cerr << "error: --format must be md or csv\n";
            return kExitUsage;
        }
        std::vector<std::string> methods, problems;
        std::string cur;
        for (char c : methods_csv + ",") {
            if (c == ',') {
                if (!cur.empty()) methods.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (problems_csv == "all") {
            problems = kAllProblems;
        } else {
            for (char c : problems_csv + ",") {
                if (c == ',') {
                    if (!cur.empty()) problems.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
        }
        return cmd_table2(methods, problems, opts, format, !no_reference);
    }
    if (eff_cmd->parsed()) {
        if (kind != "classical" && kind != "flops") {
            std::cerr << "error: --kind must be classical or flops\n";
            return kExitUsage;
        }
        return cmd_efficiency(kind, n_from, n_to, out_path);
    }
    if (verify_cmd->parsed()) return cmd_verify(params_csv, trials, prec_bits);
    return kExitUsage;
}
