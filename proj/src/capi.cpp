#include "nlsolve.h"

#include "convergence.hpp"
#include "efficiency.hpp"
#include "problems.hpp"
#include "solvers.hpp"

#include <cstring>
#include <new>
#include <string>

using namespace nlsolve;

struct nls_problem {
    std::string name;
    int size = 0;  // 0 = default
};

struct nls_trace {
    IterationTrace trace;
    mpfr_prec_t prec = 512;
};

namespace {

nls_rc wrap(const std::function<nls_rc()>& body) {
    try {
        return body();
    } catch (const UnknownProblem&) {
        return NLS_ERR_UNKNOWN_PROBLEM;
    } catch (const InvalidSize&) {
        return NLS_ERR_INVALID_SIZE;
    } catch (const DimensionMismatch&) {
        return NLS_ERR_DIMENSION;
    } catch (const SingularMatrix&) {
        return NLS_ERR_SINGULAR;
    } catch (const DomainError&) {
        return NLS_ERR_DOMAIN;
    } catch (const InsufficientData&) {
        return NLS_ERR_INSUFFICIENT_DATA;
    } catch (const DegenerateSequence&) {
        return NLS_ERR_DEGENERATE;
    } catch (const NoConvergence&) {
        return NLS_ERR_NO_CONVERGENCE;
    } catch (const std::invalid_argument&) {
        return NLS_ERR_INVALID_ARG;
    } catch (const std::bad_alloc&) {
        return NLS_ERR_INTERNAL;
    } catch (...) {
        return NLS_ERR_INTERNAL;
    }
}

Real real_from_param(const char* s, mpfr_prec_t prec) {
    // accepts "p/q" as well as decimal strings
    Rational q = parse_rational(s);
    Real r(prec);
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

nls_rc copy_out(const std::string& s, char* buf, size_t bufsize) {
    if (!buf || bufsize == 0) return NLS_ERR_INVALID_ARG;
    if (s.size() + 1 > bufsize) return NLS_ERR_BUFFER_TOO_SMALL;
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return NLS_OK;
}

}  // namespace

extern "C" {

void nls_solve_options_init(nls_solve_options* opts) {
    if (!opts) return;
    opts->method = NLS_METHOD_M4;
    opts->beta = nullptr;
    opts->a1 = nullptr;
    opts->a2 = nullptr;
    opts->a3 = nullptr;
    opts->tol = nullptr;
    opts->max_iter = 100;
    opts->prec_bits = 512;
    opts->norm_kind = NLS_NORM_TWO;
}

const char* nls_version(void) { return "1.0.0"; }

const char* nls_strerror(int rc) {
    switch (rc) {
        case NLS_OK: return "ok";
        case NLS_ERR_INVALID_ARG: return "invalid argument";
        case NLS_ERR_UNKNOWN_PROBLEM: return "unknown problem";
        case NLS_ERR_INVALID_SIZE: return "invalid problem size";
        case NLS_ERR_DIMENSION: return "dimension mismatch";
        case NLS_ERR_SINGULAR: return "singular matrix";
        case NLS_ERR_DOMAIN: return "point outside problem domain";
        case NLS_ERR_INSUFFICIENT_DATA: return "insufficient data";
        case NLS_ERR_DEGENERATE: return "degenerate sequence";
        case NLS_ERR_NO_CONVERGENCE: return "no convergence";
        case NLS_ERR_BUFFER_TOO_SMALL: return "buffer too small";
        default: return "internal error";
    }
}

const char* nls_status_name(nls_solve_status status) {
    switch (status) {
        case NLS_SOLVE_CONVERGED: return "converged";
        case NLS_SOLVE_MAX_ITER: return "max_iter_reached";
        case NLS_SOLVE_SINGULAR_JACOBIAN: return "singular_jacobian";
        case NLS_SOLVE_DOMAIN_ERROR: return "domain_error";
        case NLS_SOLVE_DIVERGED: return "diverged";
    }
    return "unknown";
}

nls_rc nls_problem_create(const char* name, int size, nls_problem** out) {
    if (!name || !out || size < 0) return NLS_ERR_INVALID_ARG;
    return wrap([&]() -> nls_rc {
        builtin(name, size, 64);  // validate name/size now, fail early
        *out = new nls_problem{name, size};
        return NLS_OK;
    });
}

int nls_problem_dim(const nls_problem* p) {
    if (!p) return 0;
    if (p->name == "ex48") return p->size == 0 ? 99 : p->size;
    try {
        return builtin(p->name, 0, 64).n;
    } catch (...) {
        return 0;
    }
}

void nls_problem_free(nls_problem* p) { delete p; }

nls_rc nls_problem_check_consistency(const nls_problem* p, int trials, int prec_bits,
                                     double* max_rel_dev, int* passed) {
    if (!p || trials < 1 || prec_bits < 64 || !max_rel_dev) return NLS_ERR_INVALID_ARG;
    return wrap([&]() -> nls_rc {
        NonlinearSystem sys = builtin(p->name, p->size, prec_bits);
        ConsistencyReport rep = check_consistency(sys, trials, prec_bits);
        *max_rel_dev = rep.max_rel_col_dev;
        if (passed) *passed = rep.passed ? 1 : 0;
        return NLS_OK;
    });
}

nls_rc nls_solve(const nls_problem* p, const nls_solve_options* opts, nls_trace** out) {
    if (!p || !opts || !out) return NLS_ERR_INVALID_ARG;
    if (opts->prec_bits < 64 || opts->max_iter < 1) return NLS_ERR_INVALID_ARG;
    if (opts->method != NLS_METHOD_M4_GENERAL &&
        (opts->beta || opts->a1 || opts->a2 || opts->a3))
        return NLS_ERR_INVALID_ARG;
    return wrap([&]() -> nls_rc {
        mpfr_prec_t prec = opts->prec_bits;
        SolverConfig cfg = SolverConfig::defaults(prec);
        cfg.max_iter = opts->max_iter;
        cfg.norm_kind = opts->norm_kind == NLS_NORM_INF ? NormKind::inf : NormKind::two;
        if (opts->tol) cfg.tol = Real(opts->tol, prec);
        if (!(cfg.tol > Real(0L, prec))) return NLS_ERR_INVALID_ARG;
        switch (opts->method) {
            case NLS_METHOD_NEWTON: cfg.method = Method::newton; break;
            case NLS_METHOD_M3: cfg.method = Method::m3; break;
            case NLS_METHOD_M4: cfg.method = Method::m4; break;
            case NLS_METHOD_M4_GENERAL: {
                cfg.method = Method::m4_general;
                MethodParams mp = m4_params(prec);
                if (opts->beta) mp.beta = real_from_param(opts->beta, prec);
                if (opts->a1) mp.a1 = real_from_param(opts->a1, prec);
                if (opts->a2) mp.a2 = real_from_param(opts->a2, prec);
                if (opts->a3) mp.a3 = real_from_param(opts->a3, prec);
                cfg.params = mp;
                break;
            }
            default: return NLS_ERR_INVALID_ARG;
        }
        NonlinearSystem sys = builtin(p->name, p->size, prec);
        auto* t = new nls_trace{solve(sys, cfg), prec};
        *out = t;
        return NLS_OK;
    });
}

nls_solve_status nls_trace_status(const nls_trace* t) {
    if (!t) return NLS_SOLVE_MAX_ITER;
    switch (t->trace.status) {
        case SolveStatus::converged: return NLS_SOLVE_CONVERGED;
        case SolveStatus::max_iter_reached: return NLS_SOLVE_MAX_ITER;
        case SolveStatus::singular_jacobian: return NLS_SOLVE_SINGULAR_JACOBIAN;
        case SolveStatus::domain_error: return NLS_SOLVE_DOMAIN_ERROR;
        case SolveStatus::diverged: return NLS_SOLVE_DIVERGED;
    }
    return NLS_SOLVE_MAX_ITER;
}

int nls_trace_steps(const nls_trace* t) { return t ? t->trace.steps() : -1; }

nls_rc nls_trace_residual(const nls_trace* t, int k, int sig, char* buf, size_t bufsize) {
    if (!t || k < 0 || k >= static_cast<int>(t->trace.records.size()) || sig < 1)
        return NLS_ERR_INVALID_ARG;
    return copy_out(t->trace.records[static_cast<size_t>(k)].residual_norm.sci(sig), buf, bufsize);
}

nls_rc nls_trace_residual_exp10(const nls_trace* t, int k, long* out) {
    if (!t || !out || k < 0 || k >= static_cast<int>(t->trace.records.size()))
        return NLS_ERR_INVALID_ARG;
    const Real& r = t->trace.records[static_cast<size_t>(k)].residual_norm;
    if (r.is_zero() || !r.is_finite()) return NLS_ERR_DEGENERATE;
    *out = r.exponent10();
    return NLS_OK;
}

nls_rc nls_trace_solution(const nls_trace* t, int i, int sig, char* buf, size_t bufsize) {
    if (!t || i < 0 || i >= t->trace.final_x.n() || sig < 1) return NLS_ERR_INVALID_ARG;
    return copy_out(t->trace.final_x[i].str(sig), buf, bufsize);
}

nls_rc nls_trace_counters_at(const nls_trace* t, int k, nls_counters* out) {
    if (!t || !out || k < 0 || k >= static_cast<int>(t->trace.records.size()))
        return NLS_ERR_INVALID_ARG;
    const FlopCounter& c = t->trace.records[static_cast<size_t>(k)].counters;
    *out = {c.mul_add_ops, c.lu_count, c.vec_solve_count, c.mat_solve_count, c.scalar_fn_evals};
    return NLS_OK;
}

nls_rc nls_trace_counters(const nls_trace* t, nls_counters* out) {
    if (!t || t->trace.records.empty()) return NLS_ERR_INVALID_ARG;
    return nls_trace_counters_at(t, static_cast<int>(t->trace.records.size()) - 1, out);
}

nls_rc nls_trace_coc(const nls_trace* t, double* rho) {
    if (!t || !rho) return NLS_ERR_INVALID_ARG;
    return wrap([&]() -> nls_rc {
        *rho = coc(t->trace, CocBasis::residual, t->prec).rho;
        return NLS_OK;
    });
}

void nls_trace_free(nls_trace* t) { delete t; }

nls_rc nls_order_conditions(const char* beta, const char* a1, const char* a2, const char* a3,
                            nls_order_report* out) {
    if (!beta || !a1 || !a2 || !a3 || !out) return NLS_ERR_INVALID_ARG;
    return wrap([&]() -> nls_rc {
        RationalParams p{parse_rational(beta), parse_rational(a1), parse_rational(a2),
                         parse_rational(a3)};
        OrderConditionReport r = order_conditions(p);
        out->satisfied_order = r.satisfied_order;
        out->a_sum_zero = r.a_sum_minus_one == 0 ? 1 : 0;
        out->t1_zero = r.t1 == 0 ? 1 : 0;
        out->t2_zero = r.t2 == 0 ? 1 : 0;
        out->t3_zero = r.t3 == 0 ? 1 : 0;
        out->a_sum_minus_one = r.a_sum_minus_one.get_d();
        out->t1 = r.t1.get_d();
        out->t2 = r.t2.get_d();
        out->t3 = r.t3.get_d();
        out->t4 = r.t4.get_d();
        out->t5 = r.t5.get_d();
        out->t6 = r.t6.get_d();
        out->t7 = r.t7.get_d();
        return NLS_OK;
    });
}

nls_rc nls_efficiency_index(const char* method, long n, int flops_like, double* out) {
    if (!method || !out || n < 1) return NLS_ERR_INVALID_ARG;
    return wrap([&]() -> nls_rc {
        MethodCostModel model = cost_model(cost_method_from_string(method));
        Real idx = flops_like ? flops_like_index(model, n, 256) : classical_index(model, n, 256);
        *out = idx.to_double();
        return NLS_OK;
    });
}

}  // extern "C"
