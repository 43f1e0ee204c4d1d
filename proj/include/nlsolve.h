/*
 * nlsolve - configurable-precision dense nonlinear-systems solver.
 *
 * C interface to the solver library: builtin benchmark problems, Newton /
 * third-order (M3) / fourth-order (M4) iterations with full trace capture,
 * order-condition verification and efficiency-index models.
 *
 * All handles are opaque and owned by the caller; free them with the
 * matching *_free function. Functions return NLS_OK (0) on success or a
 * negative nls_rc error code. Handles from independent calls may be used
 * concurrently; a single handle is not internally synchronized.
 */

#ifndef NLSOLVE_H
#define NLSOLVE_H

#include <stddef.h>

#if defined(_WIN32)
#define NLS_API __declspec(dllexport)
#else
#define NLS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    NLS_OK = 0,
    NLS_ERR_INVALID_ARG = -1,
    NLS_ERR_UNKNOWN_PROBLEM = -2,
    NLS_ERR_INVALID_SIZE = -3,
    NLS_ERR_DIMENSION = -4,
    NLS_ERR_SINGULAR = -5,
    NLS_ERR_DOMAIN = -6,
    NLS_ERR_INSUFFICIENT_DATA = -7,
    NLS_ERR_DEGENERATE = -8,
    NLS_ERR_NO_CONVERGENCE = -9,
    NLS_ERR_BUFFER_TOO_SMALL = -10,
    NLS_ERR_INTERNAL = -11
} nls_rc;

typedef enum {
    NLS_SOLVE_CONVERGED = 0,
    NLS_SOLVE_MAX_ITER = 1,
    NLS_SOLVE_SINGULAR_JACOBIAN = 2,
    NLS_SOLVE_DOMAIN_ERROR = 3,
    NLS_SOLVE_DIVERGED = 4
} nls_solve_status;

typedef enum {
    NLS_METHOD_NEWTON = 0,
    NLS_METHOD_M3 = 1,
    NLS_METHOD_M4 = 2,
    NLS_METHOD_M4_GENERAL = 3
} nls_method;

typedef enum { NLS_NORM_TWO = 0, NLS_NORM_INF = 1 } nls_norm;

typedef struct nls_problem nls_problem;
typedef struct nls_trace nls_trace;

typedef struct {
    unsigned long long mul_add_ops;
    unsigned long long lu_count;
    unsigned long long vec_solve_count;
    unsigned long long mat_solve_count;
    unsigned long long scalar_fn_evals;
} nls_counters;

/*
 * Numeric parameters are passed as strings so they stay exact at any
 * working precision: "2/3", "-9/4", "1e-150", "0.5" are all accepted.
 * NULL selects the documented default.
 */
typedef struct {
    nls_method method;
    const char* beta; /* m4_general only */
    const char* a1;
    const char* a2;
    const char* a3;
    const char* tol;  /* default "1e-150" */
    int max_iter;     /* default 100 */
    int prec_bits;    /* default 512, minimum 64 */
    nls_norm norm_kind;
} nls_solve_options;

NLS_API void nls_solve_options_init(nls_solve_options* opts);

NLS_API const char* nls_version(void);
NLS_API const char* nls_strerror(int rc);
NLS_API const char* nls_status_name(nls_solve_status status);

/* --- problems ---------------------------------------------------------- */

/* name: ex41..ex48; size: ex48 dimension (odd, >= 3), 0 for default 99. */
NLS_API nls_rc nls_problem_create(const char* name, int size, nls_problem** out);
NLS_API int nls_problem_dim(const nls_problem* p);
NLS_API void nls_problem_free(nls_problem* p);

/* Max relative column deviation between the analytic and finite-difference
 * Jacobian at `trials` random in-domain points near the initial guess. */
NLS_API nls_rc nls_problem_check_consistency(const nls_problem* p, int trials, int prec_bits,
                                             double* max_rel_dev, int* passed);

/* --- solving ----------------------------------------------------------- */

NLS_API nls_rc nls_solve(const nls_problem* p, const nls_solve_options* opts, nls_trace** out);

NLS_API nls_solve_status nls_trace_status(const nls_trace* t);
/* Number of full iteration steps taken (the trace also records step 0). */
NLS_API int nls_trace_steps(const nls_trace* t);
/* Residual norm ||F(x^(k))|| for k in [0, steps], written as "d.dddde±x"
 * scientific notation with sig significant digits. */
NLS_API nls_rc nls_trace_residual(const nls_trace* t, int k, int sig, char* buf, size_t bufsize);
NLS_API nls_rc nls_trace_residual_exp10(const nls_trace* t, int k, long* out);
/* Component i of the final iterate. */
NLS_API nls_rc nls_trace_solution(const nls_trace* t, int i, int sig, char* buf, size_t bufsize);
/* Cumulative operation counters after step k (or after the whole run). */
NLS_API nls_rc nls_trace_counters_at(const nls_trace* t, int k, nls_counters* out);
NLS_API nls_rc nls_trace_counters(const nls_trace* t, nls_counters* out);
/* Computational order of convergence from the residual-norm sequence. */
NLS_API nls_rc nls_trace_coc(const nls_trace* t, double* rho);
NLS_API void nls_trace_free(nls_trace* t);

/* --- order conditions -------------------------------------------------- */

typedef struct {
    int satisfied_order; /* 2 (meaning <= 2), 3 or 4 */
    int a_sum_zero;      /* 1 - (a1+a2+a3) vanishes exactly */
    int t1_zero;
    int t2_zero;
    int t3_zero;
    double a_sum_minus_one;
    double t1, t2, t3;
    double t4, t5, t6, t7; /* quartic-term coefficients, reported only */
} nls_order_report;

/* Evaluated in exact rational arithmetic; the *_zero flags are exact. */
NLS_API nls_rc nls_order_conditions(const char* beta, const char* a1, const char* a2,
                                    const char* a3, nls_order_report* out);

/* --- efficiency indices ------------------------------------------------ */

/* method: "SH4", "MN4", "M3" or "M4"; flops_like: 0 = classical p^(1/C). */
NLS_API nls_rc nls_efficiency_index(const char* method, long n, int flops_like, double* out);

#ifdef __cplusplus
}
#endif

#endif /* NLSOLVE_H */
