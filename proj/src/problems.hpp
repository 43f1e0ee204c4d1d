#pragma once

// Benchmark nonlinear systems with analytic Jacobians, initial guesses and
// reference roots, plus a finite-difference Jacobian fallback and a
// Jacobian-vs-FD consistency check for user-defined systems.

#include "linalg.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace nlsolve {

struct UnknownProblem : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidSize : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonlinearSystem {
    int n = 0;
    std::string name;
    std::function<Vector(const Vector&)> eval_f;
    std::function<Matrix(const Vector&)> eval_jacobian;
    std::function<bool(const Vector&)> domain_guard;  // true when F is defined
    Vector x0;
    std::optional<Vector> root;

    // Evaluates F after checking the domain guard; throws DomainError.
    Vector f(const Vector& x) const;
    Matrix jacobian(const Vector& x) const;
};

// Builtin problem names: ex41 .. ex48. size applies to ex48 only (odd, >= 3,
// default 99). Reference roots without a closed form are refined at load
// time by Newton iteration at the working precision.
NonlinearSystem builtin(const std::string& name, int size, mpfr_prec_t prec);

// Forward-difference Jacobian with per-coordinate step h.
// Default step is 10^-(digits/3) when h is not given by the caller.
Matrix fd_jacobian(const NonlinearSystem& sys, const Vector& x, const Real& h);
Real default_fd_step(mpfr_prec_t prec);

struct ConsistencyReport {
    double max_rel_col_dev = 0.0;  // worst relative column deviation seen
    int trials = 0;
    bool passed = false;
};

// Compares analytic vs finite-difference Jacobians at random in-domain
// points near x0. Deterministic for a fixed system and trial count.
ConsistencyReport check_consistency(const NonlinearSystem& sys, int trials, mpfr_prec_t prec);

}  // namespace nlsolve
