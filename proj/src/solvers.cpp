#include "solvers.hpp"

namespace nlsolve {

MethodParams m4_params(mpfr_prec_t prec) {
    Real three(3L, prec), four(4L, prec), nine(9L, prec);
    return MethodParams{Real(2L, prec) / three, nine / four, -(nine / four), Real(1L, prec)};
}

SolverConfig SolverConfig::defaults(mpfr_prec_t prec) {
    SolverConfig c;
    c.prec = prec;
    c.tol = Real("1e-150", prec);
    return c;
}

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::converged: return "converged";
        case SolveStatus::max_iter_reached: return "max_iter_reached";
        case SolveStatus::singular_jacobian: return "singular_jacobian";
        case SolveStatus::domain_error: return "domain_error";
        case SolveStatus::diverged: return "diverged";
    }
    return "unknown";
}

namespace {

Vector eval_f_counted(const NonlinearSystem& sys, const Vector& x, FlopCounter& counter) {
    Vector f = sys.f(x);
    counter.scalar_fn_evals += static_cast<unsigned long long>(sys.n);
    return f;
}

Matrix eval_j_counted(const NonlinearSystem& sys, const Vector& x, FlopCounter& counter) {
    Matrix j = sys.jacobian(x);
    counter.scalar_fn_evals +=
        static_cast<unsigned long long>(sys.n) * static_cast<unsigned long long>(sys.n);
    return j;
}

Vector newton_core(const NonlinearSystem& sys, const Vector& x, const Vector& fx,
                   FlopCounter& counter) {
    LuFactors lu = lu_decompose(eval_j_counted(sys, x, counter), counter);
    Vector s = solve_vec(lu, fx, counter);
    return vec_sub(x, s, counter);
}

// Shared body of M3 and the generalized scheme. M3 is the beta=1,
// a=(1,0,0) instance, where the t-polynomial collapses to the identity.
Vector weighted_core(const NonlinearSystem& sys, const Vector& x, const Vector& fx,
                     const MethodParams* p, FlopCounter& counter) {
    mpfr_prec_t prec = x[0].precision();
    Matrix jx = eval_j_counted(sys, x, counter);
    LuFactors lu = lu_decompose(jx, counter);
    Vector s = solve_vec(lu, fx, counter);

    Vector y = p ? vec_axpy(-p->beta, s, x, counter) : vec_sub(x, s, counter);
    Matrix jy = eval_j_counted(sys, y, counter);
    Matrix t = solve_mat(lu, jy, counter);

    Matrix eye = Matrix::identity(sys.n, prec);
    Vector u = s;
    if (p) {
        // a1*I + t*(a2*I + a3*t), Horner form: one matrix product for t^2
        Matrix inner = mat_lincomb(p->a2, eye, p->a3, t, counter);
        Matrix poly = mat_lincomb(p->a1, eye, Real(1L, prec), mat_mat(t, inner, counter), counter);
        u = mat_vec(poly, s, counter);
    }
    Matrix weight = mat_lincomb(Real(3L, prec), eye, Real(-1L, prec), t, counter);
    Vector w = mat_vec(weight, u, counter);
    Real neg_half = Real(-1L, prec) / Real(2L, prec);
    return vec_axpy(neg_half, w, x, counter);
}

Vector step_core(const NonlinearSystem& sys, Method m, const std::optional<MethodParams>& p,
                 const Vector& x, const Vector& fx, FlopCounter& counter) {
    switch (m) {
        case Method::newton: return newton_core(sys, x, fx, counter);
        case Method::m3: return weighted_core(sys, x, fx, nullptr, counter);
        case Method::m4: {
            MethodParams t4 = m4_params(x[0].precision());
            return weighted_core(sys, x, fx, &t4, counter);
        }
        case Method::m4_general: return weighted_core(sys, x, fx, &*p, counter);
    }
    throw std::invalid_argument("unknown method");
}

}  // namespace

Vector newton_step(const NonlinearSystem& sys, const Vector& x, FlopCounter& counter) {
    return newton_core(sys, x, eval_f_counted(sys, x, counter), counter);
}

Vector m3_step(const NonlinearSystem& sys, const Vector& x, FlopCounter& counter) {
    return weighted_core(sys, x, eval_f_counted(sys, x, counter), nullptr, counter);
}

Vector m4_general_step(const NonlinearSystem& sys, const Vector& x, const MethodParams& p,
                       FlopCounter& counter) {
    return weighted_core(sys, x, eval_f_counted(sys, x, counter), &p, counter);
}

Vector m4_step(const NonlinearSystem& sys, const Vector& x, FlopCounter& counter) {
    MethodParams p = m4_params(x[0].precision());
    return m4_general_step(sys, x, p, counter);
}

IterationTrace solve(const NonlinearSystem& sys, const SolverConfig& config) {
    if (config.max_iter < 1 || !(config.tol > Real(0L, config.prec)))
        throw std::invalid_argument("solve: invalid config");
    if (config.method == Method::m4_general && !config.params)
        throw std::invalid_argument("solve: m4_general requires params");

    IterationTrace trace;
    FlopCounter counter;
    Real divergence_limit = pow10(150, config.prec);

    Vector x = sys.x0;
    auto record = [&](int k, const Vector& xi, const Real& rnorm) {
        IterationRecord rec;
        rec.k = k;
        rec.x = xi;
        rec.residual_norm = rnorm;
        if (sys.root) {
            FlopCounter scratch;
            rec.error_norm = norm(vec_sub(xi, *sys.root, scratch), config.norm_kind);
        }
        rec.counters = counter;
        trace.records.push_back(std::move(rec));
    };

    try {
        Vector fx = eval_f_counted(sys, x, counter);
        Real rnorm = norm(fx, config.norm_kind);
        record(0, x, rnorm);
        int k = 0;
        while (true) {
            if (!rnorm.is_finite() || rnorm > divergence_limit) {
                trace.status = SolveStatus::diverged;
                break;
            }
            if (rnorm < config.tol) {
                trace.status = SolveStatus::converged;
                break;
            }
            if (k == config.max_iter) {
                trace.status = SolveStatus::max_iter_reached;
                break;
            }
            x = step_core(sys, config.method, config.params, x, fx, counter);
            fx = eval_f_counted(sys, x, counter);
            rnorm = norm(fx, config.norm_kind);
            record(++k, x, rnorm);
        }
    } catch (const SingularMatrix&) {
        trace.status = SolveStatus::singular_jacobian;
    } catch (const DomainError&) {
        trace.status = SolveStatus::domain_error;
    }
    trace.final_x = trace.records.empty() ? sys.x0 : trace.records.back().x;
    return trace;
}

}  // namespace nlsolve
