#pragma once

// Order-condition verification for the generalized weighted scheme (exact
// rational arithmetic), computational-order-of-convergence estimation from
// iteration traces, and an empirical oracle for the third-order scalar
// error coefficient.

#include "solvers.hpp"

#include <gmpxx.h>

#include <functional>
#include <string>

namespace nlsolve {

struct InsufficientData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateSequence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

// Parses "p/q", integers, or decimal strings (optional e-exponent) into an
// exact rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

struct RationalParams {
    Rational beta;
    Rational a1;
    Rational a2;
    Rational a3;
};

struct OrderConditionReport {
    Rational a_sum_minus_one;  // 1 - (a1+a2+a3); must vanish for order > 1
    Rational p1, p2, p3;
    Rational t1, t2, t3;       // quadratic/cubic error-term multipliers
    Rational t4, t5, t6, t7;   // quartic-term monomial coefficients (reported only)
    int satisfied_order = 2;   // 2 (meaning <= 2), 3, or 4
};

OrderConditionReport order_conditions(const RationalParams& params);

enum class CocBasis { residual, error };

struct CocEstimate {
    double rho = 0.0;
    CocBasis basis = CocBasis::residual;
    int iterations_used = 0;
};

// rho = ln(q3/q2) / ln(q2/q1) over the last three norms above 10*tol_floor,
// where tol_floor = 10^-(digits-10) for the trace's working precision.
CocEstimate coc(const IterationTrace& trace, CocBasis basis, mpfr_prec_t prec);

struct ScalarCoefReport {
    double measured = 0.0;         // empirical limit of e_{k+1} / e_k^3
    double predicted_printed = 0.0;  // 2*C2^2 + C3/3
    double predicted_derived = 0.0;  // 2*C2^2 + C3/2
    double rel_fluctuation = 1.0;  // between the last two usable ratios
    int ratios_used = 0;
};

// Runs the scalar third-order iteration at high precision from x0 near a
// simple root alpha and fits the cubic error coefficient empirically.
// c2 = f''(alpha)/(2 f'(alpha)), c3 = f'''(alpha)/(6 f'(alpha)).
ScalarCoefReport scalar_error_coefficient(const std::function<Real(const Real&)>& f,
                                          const std::function<Real(const Real&)>& df,
                                          const Real& alpha, const Real& x0, double c2, double c3,
                                          mpfr_prec_t prec);

}  // namespace nlsolve
