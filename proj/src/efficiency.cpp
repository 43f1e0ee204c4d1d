#include "efficiency.hpp"

namespace nlsolve {

const char* to_string(CostMethod m) {
    switch (m) {
        case CostMethod::SH4: return "SH4";
        case CostMethod::MN4: return "MN4";
        case CostMethod::M3: return "M3";
        case CostMethod::M4: return "M4";
    }
    return "?";
}

CostMethod cost_method_from_string(const std::string& name) {
    if (name == "SH4" || name == "sh4") return CostMethod::SH4;
    if (name == "MN4" || name == "mn4") return CostMethod::MN4;
    if (name == "M3" || name == "m3") return CostMethod::M3;
    if (name == "M4" || name == "m4") return CostMethod::M4;
    throw std::invalid_argument("unknown cost method: " + name);
}

Rational MethodCostModel::fe_count(long n) const {
    Rational nn(n);
    return nn + 2 * nn * nn;
}

Rational MethodCostModel::lu_cost(long n) const {
    Rational nn(n);
    return Rational(2 * lu_per_iter, 3) * nn * nn * nn;
}

Rational MethodCostModel::linsys_cost(long n) const {
    Rational nn(n);
    Rational n3 = nn * nn * nn;
    Rational n2 = nn * nn;
    switch (name) {
        case CostMethod::SH4: return Rational(10, 3) * n3 + 2 * n2;
        case CostMethod::MN4: return Rational(7, 3) * n3 + 2 * n2;
        case CostMethod::M3:
        case CostMethod::M4: return Rational(5, 3) * n3 + 2 * n2;
    }
    return 0;
}

Rational MethodCostModel::flops_denominator(long n) const {
    // linsys_cost already folds the LU decomposition cost
    return linsys_cost(n) + fe_count(n);
}

MethodCostModel cost_model(CostMethod m) {
    MethodCostModel c;
    c.name = m;
    c.order_p = (m == CostMethod::M3) ? 3 : 4;
    c.lu_per_iter = (m == CostMethod::SH4 || m == CostMethod::MN4) ? 2 : 1;
    return c;
}

namespace {

Real index_from_denominator(int p, const Rational& den, mpfr_prec_t prec) {
    Real d(prec);
    mpfr_set_q(d.raw(), den.get_mpq_t(), MPFR_RNDN);
    return exp(log(Real(static_cast<long>(p), prec)) / d);
}

}  // namespace

Real classical_index(const MethodCostModel& model, long n, mpfr_prec_t prec) {
    if (n < 1) throw std::invalid_argument("classical_index: n must be >= 1");
    return index_from_denominator(model.order_p, model.fe_count(n), prec);
}

Real flops_like_index(const MethodCostModel& model, long n, mpfr_prec_t prec) {
    if (n < 1) throw std::invalid_argument("flops_like_index: n must be >= 1");
    return index_from_denominator(model.order_p, model.flops_denominator(n), prec);
}

IndexTable index_table(const std::vector<CostMethod>& methods, long n_from, long n_to,
                       IndexKind kind, mpfr_prec_t prec) {
    if (n_from < 2 || n_to > 1000000 || n_to < n_from)
        throw std::invalid_argument("index_table: range must lie within [2, 1e6]");
    IndexTable t;
    t.kind = kind;
    t.methods = methods;
    for (long n = n_from; n <= n_to; ++n) {
        t.n_values.push_back(n);
        std::vector<Real> row;
        row.reserve(methods.size());
        for (CostMethod m : methods) {
            MethodCostModel model = cost_model(m);
            row.push_back(kind == IndexKind::classical ? classical_index(model, n, prec)
                                                       : flops_like_index(model, n, prec));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace nlsolve
