#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "convergence.hpp"

#include <cmath>
#include <random>

using namespace nlsolve;

namespace {

constexpr mpfr_prec_t kPrec = 512;

RationalParams params(const char* b, const char* a1, const char* a2, const char* a3) {
    return RationalParams{parse_rational(b), parse_rational(a1), parse_rational(a2),
                          parse_rational(a3)};
}

}  // namespace

TEST_CASE("parse_rational") {
    CHECK(parse_rational("2/3") == Rational(2, 3));
    CHECK(parse_rational("-9/4") == Rational(-9, 4));
    CHECK(parse_rational("4/6") == Rational(2, 3));  // canonicalized
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    CHECK(parse_rational("2.25") == Rational(9, 4));
    CHECK(parse_rational("1e-2") == Rational(1, 100));
    CHECK(parse_rational("1.5e2") == 150);
    CHECK(parse_rational(" 2 / 3 ") == Rational(2, 3));
    CHECK(parse_rational("0.666666666666667") != Rational(2, 3));  // decimals stay exact

    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
}

TEST_CASE("theorem parameters satisfy every condition through order four") {
    OrderConditionReport r = order_conditions(params("2/3", "9/4", "-9/4", "1"));
    CHECK(r.a_sum_minus_one == 0);
    CHECK(r.t1 == 0);
    CHECK(r.t2 == 0);
    CHECK(r.t3 == 0);
    CHECK(r.satisfied_order == 4);
}

TEST_CASE("beta=1, a=(1,0,0) is third order only") {
    OrderConditionReport r = order_conditions(params("1", "1", "0", "0"));
    CHECK(r.a_sum_minus_one == 0);
    CHECK(r.t1 == 0);
    CHECK(r.p1 == 2);
    CHECK(r.p2 == -6);
    CHECK(r.t2 == -4);
    CHECK(r.p3 == 3);
    CHECK(r.t3 == -1);
    CHECK(r.satisfied_order == 3);
}

TEST_CASE("weight-sum failure caps the order at two") {
    OrderConditionReport r = order_conditions(params("1", "2", "0", "0"));
    CHECK(r.a_sum_minus_one == -1);
    CHECK(r.satisfied_order == 2);
}

TEST_CASE("t1 failure with the weight sum intact caps the order at two") {
    OrderConditionReport r = order_conditions(params("1", "1/2", "1/2", "0"));
    CHECK(r.a_sum_minus_one == 0);
    CHECK(r.t1 == -2);
    CHECK(r.satisfied_order == 2);
}

TEST_CASE("t1/t3 identities hold for random rational parameters") {
    std::mt19937_64 rng(0xc0c0a);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        Rational b(num(rng), den(rng)), a1(num(rng), den(rng)), a2(num(rng), den(rng)),
            a3(num(rng), den(rng));
        if (b == 0) continue;
        b.canonicalize(); a1.canonicalize(); a2.canonicalize(); a3.canonicalize();
        OrderConditionReport r = order_conditions(RationalParams{b, a1, a2, a3});
        Rational A = a1 + a2 + a3;
        CHECK(r.t1 == r.p1 - 2 * A);
        CHECK(r.t2 == r.p2 - r.p1 + 4 * A);
        CHECK(r.t3 == r.p3 - 4 * A);
        // P1 and P3 in closed form
        CHECK(r.p1 == 2 * b * (A - 2 * a2 - 4 * a3));
        CHECK(r.p3 == 3 * (b * b - 2 * b) * (2 * a2 + 4 * a3 - A));
        if (r.satisfied_order == 4) {
            CHECK(A == 1);
            CHECK(r.t1 == 0);
            CHECK(r.t2 == 0);
            CHECK(r.t3 == 0);
        }
    }
}

namespace {

// builds a trace whose residual norms follow q_{k+1} = c * q_k^p exactly
IterationTrace synthetic_trace(double p, double c, double q0, int len) {
    IterationTrace tr;
    Real q(q0, kPrec), cc(c, kPrec), pp(p, kPrec);
    for (int k = 0; k < len; ++k) {
        IterationRecord rec;
        rec.k = k;
        rec.residual_norm = q;
        tr.records.push_back(std::move(rec));
        q = cc * pow(q, pp);
    }
    return tr;
}

}  // namespace

TEST_CASE("coc recovers the exponent of a synthetic sequence") {
    for (double p : {2.0, 3.0, 4.0}) {
        IterationTrace tr = synthetic_trace(p, 0.7, 1e-3, 5);
        CocEstimate est = coc(tr, CocBasis::residual, kPrec);
        CHECK(std::abs(est.rho - p) < 1e-6);
        CHECK(est.iterations_used == 3);
    }
}

TEST_CASE("coc ignores norms at or below the noise floor") {
    // last entry collapses below 10^-(digits-10); rho must come from the
    // three preceding values
    IterationTrace tr = synthetic_trace(3.0, 1.0, 1e-4, 4);
    IterationRecord junk;
    junk.k = 4;
    junk.residual_norm = pow10(-(decimal_digits(kPrec) - 2), kPrec);
    tr.records.push_back(std::move(junk));
    CocEstimate est = coc(tr, CocBasis::residual, kPrec);
    CHECK(std::abs(est.rho - 3.0) < 1e-9);
}

TEST_CASE("coc failure modes") {
    CHECK_THROWS_AS(coc(synthetic_trace(2.0, 1.0, 1e-3, 2), CocBasis::residual, kPrec),
                    InsufficientData);
    // constant sequence stalls the denominator
    IterationTrace flat;
    for (int k = 0; k < 4; ++k) {
        IterationRecord rec;
        rec.k = k;
        rec.residual_norm = Real(0.5, kPrec);
        flat.records.push_back(std::move(rec));
    }
    CHECK_THROWS_AS(coc(flat, CocBasis::residual, kPrec), DegenerateSequence);
    // error basis needs error norms in the records
    CHECK_THROWS_AS(coc(synthetic_trace(2.0, 1.0, 1e-3, 5), CocBasis::error, kPrec),
                    InsufficientData);
}

TEST_CASE("measured orders on ex41 bracket the theoretical values") {
    NonlinearSystem s = builtin("ex41", 0, kPrec);
    SolverConfig cfg = SolverConfig::defaults(kPrec);

    cfg.method = Method::m3;
    CocEstimate r3 = coc(solve(s, cfg), CocBasis::residual, kPrec);
    CHECK(r3.rho > 2.9);
    CHECK(r3.rho < 3.1);

    cfg.method = Method::m4;
    CocEstimate r4 = coc(solve(s, cfg), CocBasis::residual, kPrec);
    CHECK(r4.rho > 3.9);
    CHECK(r4.rho < 4.1);

    CocEstimate e4 = coc(solve(s, cfg), CocBasis::error, kPrec);
    CHECK(e4.rho > 3.8);
    CHECK(e4.rho < 4.2);
}

TEST_CASE("scalar cubic error coefficient for x^2 - 1 at alpha = 1") {
    // f = x^2 - 1: C2 = 1/2, C3 = 0, so e_{k+1}/e_k^3 -> 2*C2^2 = 1/2
    constexpr mpfr_prec_t hi = 2048;
    ScalarCoefReport rep = scalar_error_coefficient(
        [](const Real& x) { return x * x - Real(1L, hi); },
        [](const Real& x) { return Real(2L, hi) * x; }, Real(1L, hi), Real(1.05, hi), 0.5, 0.0,
        hi);
    CHECK(rep.ratios_used >= 2);
    CHECK(rep.rel_fluctuation < 1e-3);
    CHECK(std::abs(rep.measured - 0.5) < 1e-3);
    CHECK(rep.predicted_derived == doctest::Approx(0.5));
    CHECK(rep.predicted_printed == doctest::Approx(0.5));  // C3 = 0: both agree
}

TEST_CASE("x^3 - x separates the two predicted coefficients") {
    // at alpha = 1: f' = 2, f'' = 6, f''' = 6 so C2 = 3/2, C3 = 1/2.
    // 2*C2^2 + C3/2 = 4.75 while the alternative 2*C2^2 + C3/3 = 4.666...
    constexpr mpfr_prec_t hi = 2048;
    ScalarCoefReport rep = scalar_error_coefficient(
        [](const Real& x) { return x * x * x - x; },
        [](const Real& x) { return Real(3L, hi) * x * x - Real(1L, hi); }, Real(1L, hi),
        Real(1.01, hi), 1.5, 0.5, hi);
    CHECK(rep.rel_fluctuation < 1e-3);
    CHECK(std::abs(rep.measured - rep.predicted_derived) < 1e-2);
    CHECK(std::abs(rep.measured - rep.predicted_printed) >
          std::abs(rep.measured - rep.predicted_derived));
}
