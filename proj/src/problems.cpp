#include "problems.hpp"

#include <random>

namespace nlsolve {

Vector NonlinearSystem::f(const Vector& x) const {
    if (domain_guard && !domain_guard(x)) throw DomainError(name + ": point outside domain");
    return eval_f(x);
}

Matrix NonlinearSystem::jacobian(const Vector& x) const {
    if (domain_guard && !domain_guard(x)) throw DomainError(name + ": point outside domain");
    return eval_jacobian(x);
}

namespace {

Vector make_vec(std::initializer_list<const char*> vals, mpfr_prec_t prec) {
    std::vector<Real> d;
    d.reserve(vals.size());
    for (const char* s : vals) d.emplace_back(s, prec);
    return Vector(std::move(d));
}

// Plain Newton refinement for reference roots quoted with truncated digits.
Vector refine_root(const NonlinearSystem& sys, mpfr_prec_t prec) {
    long digits = decimal_digits(prec);
    long tgt = digits - 10 < 140 ? digits - 10 : 140;
    Real tol = pow10(-tgt, prec);
    Vector x = sys.x0;
    FlopCounter c;
    for (int it = 0; it < 200; ++it) {
        Vector fx = sys.f(x);
        if (norm(fx, NormKind::two) < tol) break;
        LuFactors lu = lu_decompose(sys.jacobian(x), c);
        Vector s = solve_vec(lu, fx, c);
        x = vec_sub(x, s, c);
    }
    return x;
}

NonlinearSystem make_ex41(mpfr_prec_t prec) {
    NonlinearSystem s;
    s.n = 2;
    s.name = "ex41";
    s.eval_f = [prec](const Vector& x) {
        Vector f(2, prec);
        Real six(6L, prec);
        f[0] = x[0] * x[0] - x[1] - Real(19L, prec);
        f[1] = -(x[0] * x[0]) + x[1] * x[1] * x[1] / six + x[1] - Real(17L, prec);
        return f;
    };
    s.eval_jacobian = [prec](const Vector& x) {
        Matrix j(2, 2, prec);
        Real two(2L, prec);
        j.at(0, 0) = two * x[0];
        j.at(0, 1) = Real(-1L, prec);
        j.at(1, 0) = -(two * x[0]);
        j.at(1, 1) = Real(1L, prec) + x[1] * x[1] / two;
        return j;
    };
    s.x0 = make_vec({"5.1", "6.1"}, prec);
    s.root = make_vec({"5", "6"}, prec);
    return s;
}

NonlinearSystem make_ex42(mpfr_prec_t prec) {
    NonlinearSystem s;
    s.n = 3;
    s.name = "ex42";
    s.domain_guard = [](const Vector& x) {
        return !x[1].is_zero() && x[2].sign() > 0 && x[0].is_finite() && x[1].is_finite() &&
               x[2].is_finite();
    };
    s.eval_f = [prec](const Vector& x) {
        Vector f(3, prec);
        f[0] = -sin(x[0]) + cos(x[1]);
        f[1] = -(Real(1L, prec) / x[1]) + pow(x[2], x[0]);
        f[2] = exp(x[0]) - x[2] * x[2];
        return f;
    };
    s.eval_jacobian = [prec](const Vector& x) {
        Matrix j(3, 3, prec);
        Real one(1L, prec), two(2L, prec);
        Real p = pow(x[2], x[0]);
        j.at(0, 0) = -cos(x[0]);
        j.at(0, 1) = -sin(x[1]);
        j.at(1, 0) = p * log(x[2]);
        j.at(1, 1) = one / (x[1] * x[1]);
        j.at(1, 2) = x[0] * pow(x[2], x[0] - one);
        j.at(2, 0) = exp(x[0]);
        j.at(2, 2) = -(two * x[2]);
        return j;
    };
    s.x0 = make_vec({"1", "0.5", "1.5"}, prec);
    return s;
}

NonlinearSystem make_ex43(mpfr_prec_t prec) {
    NonlinearSystem s;
    s.n = 4;
    s.name = "ex43";
    s.eval_f = [prec](const Vector& x) {
        Vector f(4, prec);
        f[0] = x[1] * x[2] + x[3] * (x[1] + x[2]);
        f[1] = x[0] * x[2] + x[3] * (x[0] + x[2]);
        f[2] = x[0] * x[1] + x[3] * (x[0] + x[1]);
        f[3] = x[0] * x[1] + x[0] * x[2] + x[1] * x[2] - Real(1L, prec);
        return f;
    };
    s.eval_jacobian = [prec](const Vector& x) {
        Matrix j(4, 4, prec);
        j.at(0, 1) = x[2] + x[3];
        j.at(0, 2) = x[1] + x[3];
        j.at(0, 3) = x[1] + x[2];
        j.at(1, 0) = x[2] + x[3];
        j.at(1, 2) = x[0] + x[3];
        j.at(1, 3) = x[0] + x[2];
        j.at(2, 0) = x[1] + x[3];
        j.at(2, 1) = x[0] + x[3];
        j.at(2, 3) = x[0] + x[1];
        j.at(3, 0) = x[1] + x[2];
        j.at(3, 1) = x[0] + x[2];
        j.at(3, 2) = x[0] + x[1];
        return j;
    };
    s.x0 = make_vec({"0.5", "0.5", "0.5", "-0.2"}, prec);
    // Closed form: x1 = x2 = x3 = 1/sqrt(3), x4 = -1/(2 sqrt(3)).
    Real r3 = sqrt(Real(3L, prec));
    Vector root(4, prec);
    root[0] = Real(1L, prec) / r3;
    root[1] = root[0];
    root[2] = root[0];
    root[3] = -(Real(1L, prec) / (Real(2L, prec) * r3));
    s.root = root;
    return s;
}

NonlinearSystem make_ex44(mpfr_prec_t prec) {
    NonlinearSystem s;
    s.n = 2;
    s.name = "ex44";
    s.eval_f = [prec](const Vector& x) {
        Vector f(2, prec);
        f[0] = -exp(x[0]) + atan(x[1]) + Real(2L, prec);
        f[1] = atan(x[0] * x[0] + x[1] * x[1] - Real(5L, prec));
        return f;
    };
    s.eval_jacobian = [prec](const Vector& x) {
        Matrix j(2, 2, prec);
        Real one(1L, prec), two(2L, prec);
        Real q = x[0] * x[0] + x[1] * x[1] - Real(5L, prec);
        Real den = one + q * q;
        j.at(0, 0) = -exp(x[0]);
        j.at(0, 1) = one / (one + x[1] * x[1]);
        j.at(1, 0) = two * x[0] / den;
        j.at(1, 1) = two * x[1] / den;
        return j;
    };
    s.x0 = make_vec({"1.0", "2.0"}, prec);
    return s;
}

NonlinearSystem make_ex45(mpfr_prec_t prec) {
    NonlinearSystem s;
    s.n = 3;
    s.name = "ex45";
    s.eval_f = [prec](const Vector& x) {
        Vector f(3, prec);
        f[0] = -exp(-x[0]) + x[1] + x[2];
        f[1] = -exp(-x[1]) + x[0] + x[2];
        f[2] = -exp(-x[2]) + x[0] + x[1];
        return f;
    };
    s.eval_jacobian = [prec](const Vector& x) {
        Matrix j(3, 3, prec);
        Real one(1L, prec);
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) j.at(i, k) = (i == k) ? exp(-x[i]) : one;
        return j;
    };
    s.x0 = make_vec({"-0.8", "1.1", "1.1"}, prec);
    return s;
}

NonlinearSystem make_ex46(mpfr_prec_t prec) {
    NonlinearSystem s;
    s.n = 3;
    s.name = "ex46";
    s.eval_f = [prec](const Vector& x) {
        Vector f(3, prec);
        f[0] = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - Real(9L, prec);
        f[1] = x[0] * x[1] * x[2] - Real(1L, prec);
        f[2] = x[0] + x[1] - x[2] * x[2];
        return f;
    };
    s.eval_jacobian = [prec](const Vector& x) {
        Matrix j(3, 3, prec);
        Real one(1L, prec), two(2L, prec);
        j.at(0, 0) = two * x[0];
        j.at(0, 1) = two * x[1];
        j.at(0, 2) = two * x[2];
        j.at(1, 0) = x[1] * x[2];
        j.at(1, 1) = x[0] * x[2];
        j.at(1, 2) = x[0] * x[1];
        j.at(2, 0) = one;
        j.at(2, 1) = one;
        j.at(2, 2) = -(two * x[2]);
        return j;
    };
    s.x0 = make_vec({"3", "1", "2"}, prec);
    return s;
}

NonlinearSystem make_ex47(mpfr_prec_t prec) {
    NonlinearSystem s;
    s.n = 2;
    s.name = "ex47";
    s.domain_guard = [](const Vector& x) { return x[0].sign() > 0 && x[1].sign() > 0; };
    s.eval_f = [prec](const Vector& x) {
        Vector f(2, prec);
        f[0] = log(x[1]) - x[0] * x[0] + x[0] * x[1];
        f[1] = log(x[0]) - x[1] * x[1] + x[0] * x[1];
        return f;
    };
    s.eval_jacobian = [prec](const Vector& x) {
        Matrix j(2, 2, prec);
        Real one(1L, prec), two(2L, prec);
        j.at(0, 0) = -(two * x[0]) + x[1];
        j.at(0, 1) = x[0] + one / x[1];
        j.at(1, 0) = one / x[0] + x[1];
        j.at(1, 1) = x[0] - two * x[1];
        return j;
    };
    s.x0 = make_vec({"0.5", "1.5"}, prec);
    s.root = make_vec({"1", "1"}, prec);
    return s;
}

NonlinearSystem make_ex48(int n, mpfr_prec_t prec) {
    NonlinearSystem s;
    s.n = n;
    s.name = "ex48";
    s.eval_f = [n, prec](const Vector& x) {
        Vector f(n, prec);
        Real one(1L, prec);
        for (int i = 0; i + 1 < n; ++i) f[i] = x[i] * x[i + 1] - one;
        f[n - 1] = x[n - 1] * x[0] - one;
        return f;
    };
    s.eval_jacobian = [n, prec](const Vector& x) {
        Matrix j(n, n, prec);
        for (int i = 0; i + 1 < n; ++i) {
            j.at(i, i) = x[i + 1];
            j.at(i, i + 1) = x[i];
        }
        j.at(n - 1, n - 1) = x[0];
        j.at(n - 1, 0) = x[n - 1];
        return j;
    };
    Vector x0(n, prec), root(n, prec);
    Real two(2L, prec), one(1L, prec);
    for (int i = 0; i < n; ++i) {
        x0[i] = two;
        root[i] = one;
    }
    s.x0 = x0;
    s.root = root;
    return s;
}

}  // namespace

NonlinearSystem builtin(const std::string& name, int size, mpfr_prec_t prec) {
    if (size != 0 && name != "ex48") throw InvalidSize("size is only valid for ex48");
    NonlinearSystem s;
    if (name == "ex41")
        s = make_ex41(prec);
    else if (name == "ex42")
        s = make_ex42(prec);
    else if (name == "ex43")
        s = make_ex43(prec);
    else if (name == "ex44")
        s = make_ex44(prec);
    else if (name == "ex45")
        s = make_ex45(prec);
    else if (name == "ex46")
        s = make_ex46(prec);
    else if (name == "ex47")
        s = make_ex47(prec);
    else if (name == "ex48") {
        int n = size == 0 ? 99 : size;
        if (n < 3 || n % 2 == 0) throw InvalidSize("ex48 size must be odd and >= 3");
        s = make_ex48(n, prec);
    } else {
        throw UnknownProblem("unknown problem: " + name);
    }
    // Paper roots quoted with truncated digits are refined before use.
    if (!s.root && (name == "ex42" || name == "ex44" || name == "ex45" || name == "ex46"))
        s.root = refine_root(s, prec);
    return s;
}

Real default_fd_step(mpfr_prec_t prec) {
    return pow10(-(decimal_digits(prec) / 3), prec);
}

Matrix fd_jacobian(const NonlinearSystem& sys, const Vector& x, const Real& h) {
    Vector f0 = sys.f(x);
    mpfr_prec_t prec = x[0].precision();
    Matrix j(sys.n, sys.n, prec);
    for (int c = 0; c < sys.n; ++c) {
        Vector xp = x;
        xp[c] += h;
        Vector fp = sys.f(xp);  // throws DomainError if perturbation leaves the domain
        for (int r = 0; r < sys.n; ++r) j.at(r, c) = (fp[r] - f0[r]) / h;
    }
    return j;
}

ConsistencyReport check_consistency(const NonlinearSystem& sys, int trials, mpfr_prec_t prec) {
    ConsistencyReport rep;
    rep.trials = trials;
    Real h = default_fd_step(prec);
    std::mt19937_64 rng(0x5eedu);
    std::uniform_real_distribution<double> dist(-0.05, 0.05);
    for (int t = 0; t < trials; ++t) {
        Vector x = sys.x0;
        for (int attempt = 0;; ++attempt) {
            for (int i = 0; i < sys.n; ++i) x[i] = sys.x0[i] + Real(dist(rng), prec);
            if (!sys.domain_guard || sys.domain_guard(x)) break;
            if (attempt > 100) throw DomainError(sys.name + ": no in-domain sample near x0");
        }
        Matrix ja = sys.jacobian(x);
        Matrix jf = fd_jacobian(sys, x, h);
        for (int c = 0; c < sys.n; ++c) {
            Real dn(prec), cn(prec);
            for (int r = 0; r < sys.n; ++r) {
                Real d = ja.at(r, c) - jf.at(r, c);
                dn += d * d;
                cn += ja.at(r, c) * ja.at(r, c);
            }
            double dev = sqrt(dn).to_double() / (sqrt(cn).to_double() + 1.0);
            if (dev > rep.max_rel_col_dev) rep.max_rel_col_dev = dev;
        }
    }
    rep.passed = rep.max_rel_col_dev <= 100.0 * h.to_double();
    return rep;
}

}  // namespace nlsolve
