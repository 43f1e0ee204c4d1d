#pragma once

// Cost models and efficiency indices for SH4, MN4, M3 and M4: the classical
// index p^(1/C) over functional evaluations and the flops-like index whose
// denominator adds the LU and triangular-solve costs.

#include "convergence.hpp"

#include <vector>

namespace nlsolve {

enum class CostMethod { SH4, MN4, M3, M4 };

const char* to_string(CostMethod m);
CostMethod cost_method_from_string(const std::string& name);

struct MethodCostModel {
    CostMethod name;
    int order_p;
    int lu_per_iter;

    Rational fe_count(long n) const;      // n + 2n^2 for all four methods
    Rational lu_cost(long n) const;       // lu_per_iter * 2n^3/3
    Rational linsys_cost(long n) const;   // triangular-solve model cost
    // lu_cost + linsys_cost + fe_count, the flops-like index denominator
    Rational flops_denominator(long n) const;
};

MethodCostModel cost_model(CostMethod m);

enum class IndexKind { classical, flops };

Real classical_index(const MethodCostModel& model, long n, mpfr_prec_t prec);
Real flops_like_index(const MethodCostModel& model, long n, mpfr_prec_t prec);

struct IndexTable {
    IndexKind kind;
    std::vector<CostMethod> methods;
    std::vector<long> n_values;
    std::vector<std::vector<Real>> rows;  // rows[i][j] = index of methods[j] at n_values[i]
};

IndexTable index_table(const std::vector<CostMethod>& methods, long n_from, long n_to,
                       IndexKind kind, mpfr_prec_t prec);

}  // namespace nlsolve
