#pragma once

// Iteration engines: Newton, the third-order scheme M3, and the generalized
// weighted scheme whose fourth-order instance is M4. All multi-step schemes
// share one LU factorization per iteration; the Jacobian is never inverted
// explicitly.

#include "problems.hpp"

#include <optional>
#include <vector>

namespace nlsolve {

enum class Method { newton, m3, m4, m4_general };

struct MethodParams {
    Real beta;
    Real a1;
    Real a2;
    Real a3;
};

// Theorem parameters for the fourth-order instance:
// beta = 2/3, a1 = 9/4, a2 = -9/4, a3 = 1.
MethodParams m4_params(mpfr_prec_t prec);

struct SolverConfig {
    Method method = Method::m4;
    std::optional<MethodParams> params;  // required for m4_general
    Real tol;
    int max_iter = 100;
    NormKind norm_kind = NormKind::two;
    mpfr_prec_t prec = 512;

    static SolverConfig defaults(mpfr_prec_t prec = 512);
};

struct IterationRecord {
    int k = 0;
    Vector x;
    Real residual_norm;
    std::optional<Real> error_norm;
    FlopCounter counters;  // cumulative snapshot after this record
};

enum class SolveStatus { converged, max_iter_reached, singular_jacobian, domain_error, diverged };

const char* to_string(SolveStatus s);

struct IterationTrace {
    std::vector<IterationRecord> records;  // records[0] is the initial point
    SolveStatus status = SolveStatus::max_iter_reached;
    Vector final_x;

    int steps() const { return static_cast<int>(records.size()) - 1; }
};

Vector newton_step(const NonlinearSystem& sys, const Vector& x, FlopCounter& counter);
Vector m3_step(const NonlinearSystem& sys, const Vector& x, FlopCounter& counter);
Vector m4_general_step(const NonlinearSystem& sys, const Vector& x, const MethodParams& p,
                       FlopCounter& counter);
Vector m4_step(const NonlinearSystem& sys, const Vector& x, FlopCounter& counter);

IterationTrace solve(const NonlinearSystem& sys, const SolverConfig& config);

}  // namespace nlsolve
