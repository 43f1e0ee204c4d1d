#pragma once

// Dense linear algebra over configurable-precision reals: partial-pivoting
// LU, triangular solves for vector and matrix right-hand sides, norms, and
// exact flop counters. Each scalar multiply, add and divide counts as one
// flop; comparisons and row swaps are free.

#include "real.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace nlsolve {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FlopCounter {
    unsigned long long mul_add_ops = 0;
    unsigned long long lu_count = 0;
    unsigned long long vec_solve_count = 0;
    unsigned long long mat_solve_count = 0;
    unsigned long long scalar_fn_evals = 0;
};

class Vector {
public:
    Vector() = default;
    Vector(int n, mpfr_prec_t prec) : d_(static_cast<size_t>(n), Real(prec)) {}
    explicit Vector(std::vector<Real> d) : d_(std::move(d)) {}

    int n() const { return static_cast<int>(d_.size()); }
    Real& operator[](int i) { return d_[static_cast<size_t>(i)]; }
    const Real& operator[](int i) const { return d_[static_cast<size_t>(i)]; }

    auto begin() const { return d_.begin(); }
    auto end() const { return d_.end(); }

private:
    std::vector<Real> d_;
};

class Matrix {
public:
    Matrix() : n_(0), m_(0) {}
    Matrix(int n, int m, mpfr_prec_t prec)
        : n_(n), m_(m), d_(static_cast<size_t>(n) * static_cast<size_t>(m), Real(prec)) {}

    static Matrix identity(int n, mpfr_prec_t prec);

    int rows() const { return n_; }
    int cols() const { return m_; }
    Real& at(int i, int j) { return d_[static_cast<size_t>(i) * m_ + j]; }
    const Real& at(int i, int j) const { return d_[static_cast<size_t>(i) * m_ + j]; }

    void swap_rows(int i, int j);

private:
    int n_, m_;
    std::vector<Real> d_;
};

struct LuFactors {
    Matrix lu;              // L packed below the diagonal (unit), U on/above
    std::vector<int> perm;  // row i of PA is row perm[i] of A
    int n = 0;
};

enum class NormKind { two, inf };

// Pivot floor for the given working precision: 10^-(digits-5).
Real pivot_floor(mpfr_prec_t prec);

LuFactors lu_decompose(const Matrix& a, FlopCounter& counter);
Vector solve_vec(const LuFactors& f, const Vector& b, FlopCounter& counter);
Matrix solve_mat(const LuFactors& f, const Matrix& b, FlopCounter& counter);

Real norm(const Vector& v, NormKind kind);

Vector mat_vec(const Matrix& a, const Vector& x, FlopCounter& counter);
Matrix mat_mat(const Matrix& a, const Matrix& b, FlopCounter& counter);
// y + alpha*x
Vector vec_axpy(const Real& alpha, const Vector& x, const Vector& y, FlopCounter& counter);
Vector vec_sub(const Vector& a, const Vector& b, FlopCounter& counter);
// alpha*A + beta*B
Matrix mat_lincomb(const Real& alpha, const Matrix& a, const Real& beta, const Matrix& b,
                   FlopCounter& counter);

}  // namespace nlsolve
