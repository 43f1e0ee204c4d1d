#include "linalg.hpp"

#include <numeric>
#include <utility>

namespace nlsolve {

Matrix Matrix::identity(int n, mpfr_prec_t prec) {
    Matrix m(n, n, prec);
    Real one(1L, prec);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
}

void Matrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m_; ++c)
        std::swap(d_[static_cast<size_t>(i) * m_ + c], d_[static_cast<size_t>(j) * m_ + c]);
}

Real pivot_floor(mpfr_prec_t prec) {
    return pow10(-(decimal_digits(prec) - 5), prec);
}

LuFactors lu_decompose(const Matrix& a, FlopCounter& counter) {
    if (a.rows() != a.cols()) throw DimensionMismatch("lu_decompose: matrix not square");
    const int n = a.rows();
    mpfr_prec_t prec = n > 0 ? a.at(0, 0).precision() : 64;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!a.at(i, j).is_finite()) throw std::invalid_argument("lu_decompose: non-finite entry");

    LuFactors f;
    f.n = n;
    f.lu = a;
    f.perm.resize(static_cast<size_t>(n));
    std::iota(f.perm.begin(), f.perm.end(), 0);

    const Real floor = pivot_floor(prec);
    counter.lu_count += 1;

    for (int k = 0; k < n; ++k) {
        int p = k;
        Real best = abs(f.lu.at(k, k));
        for (int i = k + 1; i < n; ++i) {
            Real m = abs(f.lu.at(i, k));
            if (m > best) {
                best = m;
                p = i;
            }
        }
        if (!(best > floor)) throw SingularMatrix("lu_decompose: pivot below floor");
        if (p != k) {
            f.lu.swap_rows(p, k);
            std::swap(f.perm[static_cast<size_t>(p)], f.perm[static_cast<size_t>(k)]);
        }
        for (int i = k + 1; i < n; ++i) {
            Real l = f.lu.at(i, k) / f.lu.at(k, k);
            counter.mul_add_ops += 1;
            f.lu.at(i, k) = l;
            for (int j = k + 1; j < n; ++j) {
                f.lu.at(i, j) -= l * f.lu.at(k, j);
                counter.mul_add_ops += 2;
            }
        }
    }
    return f;
}

namespace {

// Forward/backward substitution on one right-hand-side column already
// permuted into PA order. Counts 2 flops per multiply-add, 1 per divide.
void substitute(const LuFactors& f, std::vector<Real>& x, FlopCounter& counter) {
    const int n = f.n;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            x[static_cast<size_t>(i)] -= f.lu.at(i, j) * x[static_cast<size_t>(j)];
            counter.mul_add_ops += 2;
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) {
            x[static_cast<size_t>(i)] -= f.lu.at(i, j) * x[static_cast<size_t>(j)];
            counter.mul_add_ops += 2;
        }
        x[static_cast<size_t>(i)] /= f.lu.at(i, i);
        counter.mul_add_ops += 1;
    }
}

}  // namespace

Vector solve_vec(const LuFactors& f, const Vector& b, FlopCounter& counter) {
    if (f.n != b.n()) throw DimensionMismatch("solve_vec: dimension mismatch");
    counter.vec_solve_count += 1;
    std::vector<Real> x;
    x.reserve(static_cast<size_t>(f.n));
    for (int i = 0; i < f.n; ++i) x.push_back(b[f.perm[static_cast<size_t>(i)]]);
    substitute(f, x, counter);
    return Vector(std::move(x));
}

Matrix solve_mat(const LuFactors& f, const Matrix& b, FlopCounter& counter) {
    if (f.n != b.rows()) throw DimensionMismatch("solve_mat: dimension mismatch");
    counter.mat_solve_count += 1;
    const int n = f.n, m = b.cols();
    Matrix x(n, m, n > 0 ? b.at(0, 0).precision() : 64);
    std::vector<Real> col;
    for (int j = 0; j < m; ++j) {
        col.clear();
        for (int i = 0; i < n; ++i) col.push_back(b.at(f.perm[static_cast<size_t>(i)], j));
        substitute(f, col, counter);
        for (int i = 0; i < n; ++i) x.at(i, j) = col[static_cast<size_t>(i)];
    }
    return x;
}

Real norm(const Vector& v, NormKind kind) {
    mpfr_prec_t prec = v.n() > 0 ? v[0].precision() : 64;
    Real r(prec);
    if (kind == NormKind::two) {
        for (int i = 0; i < v.n(); ++i) r += v[i] * v[i];
        return sqrt(r);
    }
    for (int i = 0; i < v.n(); ++i) {
        Real m = abs(v[i]);
        if (m > r) r = m;
    }
    return r;
}

Vector mat_vec(const Matrix& a, const Vector& x, FlopCounter& counter) {
    if (a.cols() != x.n()) throw DimensionMismatch("mat_vec: dimension mismatch");
    mpfr_prec_t prec = x.n() > 0 ? x[0].precision() : 64;
    Vector y(a.rows(), prec);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            y[i] += a.at(i, j) * x[j];
            counter.mul_add_ops += 2;
        }
    }
    return y;
}

Matrix mat_mat(const Matrix& a, const Matrix& b, FlopCounter& counter) {
    if (a.cols() != b.rows()) throw DimensionMismatch("mat_mat: dimension mismatch");
    mpfr_prec_t prec = a.rows() > 0 ? a.at(0, 0).precision() : 64;
    Matrix c(a.rows(), b.cols(), prec);
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k)
            for (int j = 0; j < b.cols(); ++j) {
                c.at(i, j) += a.at(i, k) * b.at(k, j);
                counter.mul_add_ops += 2;
            }
    return c;
}

Vector vec_axpy(const Real& alpha, const Vector& x, const Vector& y, FlopCounter& counter) {
    if (x.n() != y.n()) throw DimensionMismatch("vec_axpy: dimension mismatch");
    Vector r = y;
    for (int i = 0; i < x.n(); ++i) {
        r[i] += alpha * x[i];
        counter.mul_add_ops += 2;
    }
    return r;
}

Vector vec_sub(const Vector& a, const Vector& b, FlopCounter& counter) {
    if (a.n() != b.n()) throw DimensionMismatch("vec_sub: dimension mismatch");
    Vector r = a;
    for (int i = 0; i < b.n(); ++i) {
        r[i] -= b[i];
        counter.mul_add_ops += 1;
    }
    return r;
}

Matrix mat_lincomb(const Real& alpha, const Matrix& a, const Real& beta, const Matrix& b,
                   FlopCounter& counter) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("mat_lincomb: dimension mismatch");
    mpfr_prec_t prec = a.rows() > 0 ? a.at(0, 0).precision() : 64;
    Matrix c(a.rows(), a.cols(), prec);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            c.at(i, j) = alpha * a.at(i, j) + beta * b.at(i, j);
            counter.mul_add_ops += 3;
        }
    return c;
}

}  // namespace nlsolve
