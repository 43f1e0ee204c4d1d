#include "real.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace nlsolve {

namespace {

Real unary(const Real& a, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
    Real r(a.precision());
    fn(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

}  // namespace

Real abs(const Real& a) { return unary(a, mpfr_abs); }
Real sqrt(const Real& a) { return unary(a, mpfr_sqrt); }
Real exp(const Real& a) { return unary(a, mpfr_exp); }
Real log(const Real& a) { return unary(a, mpfr_log); }
Real sin(const Real& a) { return unary(a, mpfr_sin); }
Real cos(const Real& a) { return unary(a, mpfr_cos); }
Real atan(const Real& a) { return unary(a, mpfr_atan); }

Real pow(const Real& a, const Real& b) {
    mpfr_prec_t p = a.precision() > b.precision() ? a.precision() : b.precision();
    Real r(p);
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real pow10(long k, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(k >= 0 ? k : -k), MPFR_RNDN);
    if (k < 0) mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
    return r;
}

long decimal_digits(mpfr_prec_t bits) {
    return static_cast<long>(std::floor(static_cast<double>(bits) * 0.30102999566398119521));
}

long Real::exponent10() const {
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, 2, v_, MPFR_RNDN);
    mpfr_free_str(s);
    // mpfr convention: value = 0.digits * 10^e
    return static_cast<long>(e) - 1;
}

std::string Real::sci(int sig) const {
    if (sig < 1) sig = 1;
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
    std::string mant;
    long e10 = 0;
    if (is_zero()) {
        mant.assign(static_cast<size_t>(sig), '0');
    } else {
        mpfr_exp_t e;
        char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig), v_, MPFR_RNDN);
        mant = s;
        mpfr_free_str(s);
        e10 = static_cast<long>(e) - 1;
    }
    std::string out;
    size_t d = 0;
    if (!mant.empty() && mant[0] == '-') {
        out += '-';
        d = 1;
    }
    out += mant[d];
    if (sig > 1) {
        out += '.';
        out.append(mant, d + 1, std::string::npos);
    }
    out += 'e';
    out += (e10 < 0) ? '-' : '+';
    out += std::to_string(e10 < 0 ? -e10 : e10);
    return out;
}

std::string Real::str(int sig) const {
    if (!is_finite()) return sci(sig);
    if (is_zero()) return "0";
    long e10 = exponent10();
    if (e10 < -6 || e10 >= sig + 6) return sci(sig);
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%ldRg", static_cast<long>(sig));
    char buf[256];
    mpfr_snprintf(buf, sizeof buf, fmt, v_);
    return buf;
}

}  // namespace nlsolve
