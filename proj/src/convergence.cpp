#include "convergence.hpp"

#include <cctype>
#include <cmath>

namespace nlsolve {

Rational parse_rational(const std::string& s) {
    std::string str;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) str += c;
    if (str.empty()) throw std::invalid_argument("parse_rational: empty string");

    if (str.find('/') != std::string::npos) {
        mpq_class q;
        if (q.set_str(str, 10) != 0) throw std::invalid_argument("parse_rational: bad fraction " + s);
        if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator " + s);
        q.canonicalize();
        return q;
    }

    // decimal form: [+-]digits[.digits][e[+-]digits]
    size_t pos = 0;
    bool neg = false;
    if (str[pos] == '+' || str[pos] == '-') neg = str[pos++] == '-';
    std::string digits;
    long frac_len = 0, exp10 = 0;
    bool any = false;
    while (pos < str.size() && std::isdigit(static_cast<unsigned char>(str[pos]))) {
        digits += str[pos++];
        any = true;
    }
    if (pos < str.size() && str[pos] == '.') {
        ++pos;
        while (pos < str.size() && std::isdigit(static_cast<unsigned char>(str[pos]))) {
            digits += str[pos++];
            ++frac_len;
            any = true;
        }
    }
    if (pos < str.size() && (str[pos] == 'e' || str[pos] == 'E')) {
        ++pos;
        bool eneg = false;
        if (pos < str.size() && (str[pos] == '+' || str[pos] == '-')) eneg = str[pos++] == '-';
        std::string e;
        while (pos < str.size() && std::isdigit(static_cast<unsigned char>(str[pos]))) e += str[pos++];
        if (e.empty()) throw std::invalid_argument("parse_rational: bad exponent " + s);
        exp10 = std::stol(e) * (eneg ? -1 : 1);
    }
    if (!any || pos != str.size()) throw std::invalid_argument("parse_rational: bad number " + s);

    mpz_class num(digits.empty() ? "0" : digits, 10);
    if (neg) num = -num;
    mpz_class den(1);
    long net = exp10 - frac_len;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(net >= 0 ? net : -net));
    mpq_class q;
    if (net >= 0)
        q = mpq_class(num * scale, den);
    else
        q = mpq_class(num, scale);
    q.canonicalize();
    return q;
}

OrderConditionReport order_conditions(const RationalParams& params) {
    const Rational &b = params.beta, &a1 = params.a1, &a2 = params.a2, &a3 = params.a3;
    Rational A = a1 + a2 + a3;
    Rational b2 = b * b, b3 = b2 * b;
    Rational omb = 1 - b;
    Rational omb3 = omb * omb * omb;

    OrderConditionReport r;
    r.a_sum_minus_one = 1 - A;
    r.p1 = 2 * b * A + 2 * (-2 * b * a2 - 4 * b * a3);
    r.p2 = 12 * b * a2 + (24 * b + 8 * b2) * a3 + 2 * b * (-2 * b * a2 - 4 * b * a3) - 6 * b * A;
    r.p3 = 6 * (b2 - 2 * b) * a2 + 12 * (b2 - 2 * b) * a3 - 3 * (b2 - 2 * b) * A;

    Rational o1 = -32 * b * a2 + 2 * (-32 * b - 24 * b2) * a3 +
                  2 * b * (6 * b * a2 + (12 * b + 4 * b2) * a3) +
                  (-6 * b * (-2 * b * a2 - 4 * b * a3) + 16 * b * A);
    Rational o2 = 2 * (-6 * b2 + 16 * b) * a2 + 2 * (-6 * b3 + 32 * b) * a3 +
                  2 * b * (3 * (b2 - 2 * b) * a2 + 6 * (b2 - 2 * b) * a3) + A * (6 * b2 - 16 * b);
    Rational o3 = 12 * b * (2 - b) * a2 + 2 * (-6 * b2 + 24 * b) * a3 +
                  (-3) * (b2 - 2 * b) * (-2 * b * a2 - 4 * b * a3) + A * (-6 * b * (2 - b));
    Rational o4 = 2 * (4 * omb3 - 4) * a2 + 4 * (4 * omb3 - 4) * a3 + A * (-4 * omb3 + 4);

    r.t1 = r.p1 - 2 * A;
    r.t2 = r.p2 - r.p1 + 4 * A;
    r.t3 = r.p3 - 4 * A;
    r.t4 = o1 - 8 * A + 2 * r.p1 - r.p2;
    r.t5 = o2 + 8 * A - 2 * r.p1;
    r.t6 = o3 + 6 * A - r.p3;
    r.t7 = o4 - 6 * A;

    if (r.a_sum_minus_one == 0 && r.t1 == 0)
        r.satisfied_order = (r.t2 == 0 && r.t3 == 0) ? 4 : 3;
    else
        r.satisfied_order = 2;
    return r;
}

CocEstimate coc(const IterationTrace& trace, CocBasis basis, mpfr_prec_t prec) {
    Real floor = pow10(-(decimal_digits(prec) - 10), prec) * Real(10L, prec);
    std::vector<Real> q;
    for (const IterationRecord& rec : trace.records) {
        const Real* v = nullptr;
        if (basis == CocBasis::residual) {
            v = &rec.residual_norm;
        } else {
            if (!rec.error_norm) throw InsufficientData("coc: error basis requires a known root");
            v = &*rec.error_norm;
        }
        if (v->is_finite() && v->sign() > 0 && *v > floor) q.push_back(*v);
    }
    if (q.size() < 3) throw InsufficientData("coc: fewer than 3 usable records");

    const Real &q1 = q[q.size() - 3], &q2 = q[q.size() - 2], &q3 = q[q.size() - 1];
    Real num = log(q3) - log(q2);
    Real den = log(q2) - log(q1);
    if (den.is_zero()) throw DegenerateSequence("coc: stalled norm sequence");
    CocEstimate est;
    est.rho = (num / den).to_double();
    est.basis = basis;
    est.iterations_used = 3;
    if (!std::isfinite(est.rho)) throw DegenerateSequence("coc: non-finite estimate");
    return est;
}

ScalarCoefReport scalar_error_coefficient(const std::function<Real(const Real&)>& f,
                                          const std::function<Real(const Real&)>& df,
                                          const Real& alpha, const Real& x0, double c2, double c3,
                                          mpfr_prec_t prec) {
    ScalarCoefReport rep;
    rep.predicted_printed = 2 * c2 * c2 + c3 / 3.0;
    rep.predicted_derived = 2 * c2 * c2 + c3 / 2.0;

    Real floor = pow10(-(decimal_digits(prec) / 2), prec);
    Real x = x0;
    Real half(0.5, prec), three(3L, prec);
    std::vector<double> ratios;
    for (int it = 0; it < 60; ++it) {
        Real e = abs(x - alpha);
        if (e.is_zero() || e < floor) break;
        Real d = df(x);
        if (d.is_zero()) throw NoConvergence("scalar_error_coefficient: zero derivative");
        Real u = f(x) / d;
        Real y = x - u;
        x = x - half * (three - df(y) / d) * u;
        Real e_next = abs(x - alpha);
        if (e < Real(0.1, prec) && e_next > floor && !e_next.is_zero()) {
            Real r = e_next / (e * e * e);
            ratios.push_back(r.to_double());
        }
        if (e_next < floor) break;
    }
    if (ratios.size() < 2) throw NoConvergence("scalar_error_coefficient: too few usable ratios");
    rep.ratios_used = static_cast<int>(ratios.size());
    double last = ratios.back(), prev = ratios[ratios.size() - 2];
    rep.measured = last;
    rep.rel_fluctuation = std::abs(last - prev) / std::abs(last);
    return rep;
}

}  // namespace nlsolve
