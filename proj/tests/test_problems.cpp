#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "problems.hpp"

#include <cmath>

using namespace nlsolve;

namespace {

constexpr mpfr_prec_t kPrec = 512;

Vector vec(std::initializer_list<double> vals) {
    Vector v(static_cast<int>(vals.size()), kPrec);
    int i = 0;
    for (double d : vals) v[i++] = Real(d, kPrec);
    return v;
}

double fnorm_at(const NonlinearSystem& sys, const Vector& x) {
    return norm(sys.eval_f(x), NormKind::two).to_double();
}

}  // namespace

TEST_CASE("ex41 root is exact") {
    NonlinearSystem s = builtin("ex41", 0, kPrec);
    CHECK(s.n == 2);
    Vector f = s.eval_f(vec({5, 6}));
    CHECK(f[0].is_zero());
    CHECK(f[1].is_zero());
    CHECK(s.x0[0].to_double() == doctest::Approx(5.1));
    CHECK(s.x0[1].to_double() == doctest::Approx(6.1));
}

TEST_CASE("ex47 root is exact") {
    NonlinearSystem s = builtin("ex47", 0, kPrec);
    Vector f = s.eval_f(vec({1, 1}));
    CHECK(f[0].is_zero());
    CHECK(f[1].is_zero());
}

TEST_CASE("ex48 size 5 all-ones root and cyclic jacobian") {
    NonlinearSystem s = builtin("ex48", 5, kPrec);
    CHECK(s.n == 5);
    Vector ones = vec({1, 1, 1, 1, 1});
    Vector f = s.eval_f(ones);
    for (int i = 0; i < 5; ++i) CHECK(f[i].is_zero());
    Matrix j = s.eval_jacobian(ones);
    for (int i = 0; i < 5; ++i) {
        Real row_sum(kPrec);
        for (int c = 0; c < 5; ++c) row_sum += j.at(i, c);
        CHECK(row_sum.to_double() == 2.0);  // one cyclic pair per row
    }
    CHECK(s.x0[3].to_double() == 2.0);
}

TEST_CASE("builtin error paths") {
    CHECK_THROWS_AS(builtin("ex99", 0, kPrec), UnknownProblem);
    CHECK_THROWS_AS(builtin("ex48", 4, kPrec), InvalidSize);
    CHECK_THROWS_AS(builtin("ex48", 1, kPrec), InvalidSize);
    CHECK_THROWS_AS(builtin("ex41", 7, kPrec), InvalidSize);
}

TEST_CASE("default ex48 dimension is 99") {
    NonlinearSystem s = builtin("ex48", 0, kPrec);
    CHECK(s.n == 99);
    REQUIRE(s.root.has_value());
    CHECK(fnorm_at(s, *s.root) == 0.0);
}

TEST_CASE("closed-form roots vanish at working precision") {
    Real tol = pow10(-(decimal_digits(kPrec) - 20), kPrec);
    for (const char* name : {"ex41", "ex43", "ex47"}) {
        NonlinearSystem s = builtin(name, 0, kPrec);
        REQUIRE(s.root.has_value());
        CHECK(norm(s.eval_f(*s.root), NormKind::two) < tol);
    }
}

TEST_CASE("refined roots match their reference digits") {
    struct Case {
        const char* name;
        std::vector<double> digits;
        double tol;
    };
    const std::vector<Case> cases = {
        {"ex42", {0.9095, 0.6612, 1.5758}, 1e-4},
        {"ex44", {1.12906503, 1.930080863}, 1e-8},
        {"ex45", {-0.8320, 1.1489, 1.1489}, 1e-4},
        {"ex46", {2.4913757, 0.24274588, 1.6535179}, 1e-6},
    };
    Real tol = pow10(-(decimal_digits(kPrec) - 20), kPrec);
    for (const Case& c : cases) {
        NonlinearSystem s = builtin(c.name, 0, kPrec);
        REQUIRE(s.root.has_value());
        CHECK(norm(s.eval_f(*s.root), NormKind::two) < tol);
        for (size_t i = 0; i < c.digits.size(); ++i)
            CHECK(std::abs((*s.root)[static_cast<int>(i)].to_double() - c.digits[i]) <
                  c.tol * (std::abs(c.digits[i]) + 1));
    }
}

TEST_CASE("domain guards") {
    NonlinearSystem e42 = builtin("ex42", 0, kPrec);
    CHECK_THROWS_AS(e42.f(vec({1, 0.5, -1})), DomainError);  // x3 <= 0
    CHECK_THROWS_AS(e42.f(vec({1, 0, 1.5})), DomainError);   // x2 == 0
    CHECK_NOTHROW(e42.f(vec({1, 0.5, 1.5})));

    NonlinearSystem e47 = builtin("ex47", 0, kPrec);
    CHECK_THROWS_AS(e47.f(vec({-0.5, 1.5})), DomainError);
    CHECK_THROWS_AS(e47.jacobian(vec({0.5, 0})), DomainError);
}

TEST_CASE("fd_jacobian is exact on a linear system") {
    NonlinearSystem lin;
    lin.n = 2;
    lin.name = "linear";
    lin.eval_f = [](const Vector& x) {
        Vector f(2, kPrec);
        f[0] = Real(2L, kPrec) * x[0] + Real(3L, kPrec) * x[1] - Real(1L, kPrec);
        f[1] = Real(-1L, kPrec) * x[0] + Real(4L, kPrec) * x[1] + Real(5L, kPrec);
        return f;
    };
    lin.eval_jacobian = [](const Vector&) {
        Matrix j(2, 2, kPrec);
        j.at(0, 0) = Real(2L, kPrec);
        j.at(0, 1) = Real(3L, kPrec);
        j.at(1, 0) = Real(-1L, kPrec);
        j.at(1, 1) = Real(4L, kPrec);
        return j;
    };
    Vector x = vec({0.3, -0.7});
    Matrix fd = fd_jacobian(lin, x, default_fd_step(kPrec));
    Matrix an = lin.eval_jacobian(x);
    Real tol = pow10(-(decimal_digits(kPrec) - 60), kPrec);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(abs(fd.at(i, j) - an.at(i, j)) < tol);
}

TEST_CASE("fd_jacobian matches analytic jacobians to O(h)") {
    double h = default_fd_step(kPrec).to_double();
    for (const char* name : {"ex41", "ex45"}) {
        NonlinearSystem s = builtin(name, 0, kPrec);
        Matrix fd = fd_jacobian(s, s.x0, default_fd_step(kPrec));
        Matrix an = s.eval_jacobian(s.x0);
        for (int c = 0; c < s.n; ++c) {
            double dev = 0, scale = 0;
            for (int r = 0; r < s.n; ++r) {
                double d = (fd.at(r, c) - an.at(r, c)).to_double();
                double a = an.at(r, c).to_double();
                dev += d * d;
                scale += a * a;
            }
            CHECK(std::sqrt(dev) <= 10 * h * (std::sqrt(scale) + 1));
        }
    }
}

TEST_CASE("fd_jacobian raises DomainError when a perturbation exits the domain") {
    NonlinearSystem s = builtin("ex47", 0, kPrec);
    // x1 so close to 0 that x1+h stays in domain but -x1 does not: use a point
    // where the step crosses the boundary instead
    Vector x(2, kPrec);
    x[0] = default_fd_step(kPrec) / Real(2L, kPrec);
    x[1] = Real(1L, kPrec);
    CHECK_NOTHROW(fd_jacobian(s, x, default_fd_step(kPrec)));  // stays positive
    Vector bad(2, kPrec);
    bad[0] = Real(-1L, kPrec);
    bad[1] = Real(1L, kPrec);
    CHECK_THROWS_AS(fd_jacobian(s, bad, default_fd_step(kPrec)), DomainError);
}

TEST_CASE("check_consistency passes for every builtin") {
    double h = default_fd_step(kPrec).to_double();
    for (const char* name : {"ex41", "ex42", "ex43", "ex44", "ex45", "ex46", "ex47"}) {
        NonlinearSystem s = builtin(name, 0, kPrec);
        ConsistencyReport rep = check_consistency(s, 3, kPrec);
        INFO(name);
        CHECK(rep.passed);
        CHECK(rep.max_rel_col_dev <= 100 * h);
    }
    // bilinear entries: agreement down to rounding
    ConsistencyReport bilinear = check_consistency(builtin("ex43", 0, kPrec), 3, kPrec);
    CHECK(bilinear.max_rel_col_dev <= h);
    // cyclic problem at a smaller size to keep the suite fast
    ConsistencyReport cyc = check_consistency(builtin("ex48", 9, kPrec), 2, kPrec);
    CHECK(cyc.passed);
}
