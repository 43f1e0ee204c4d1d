#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "efficiency.hpp"

#include <cmath>

using namespace nlsolve;

namespace {

constexpr mpfr_prec_t kPrec = 256;

double classical(CostMethod m, long n) {
    return classical_index(cost_model(m), n, kPrec).to_double();
}

double flopslike(CostMethod m, long n) {
    return flops_like_index(cost_model(m), n, kPrec).to_double();
}

}  // namespace

TEST_CASE("cost model shapes") {
    MethodCostModel m3 = cost_model(CostMethod::M3);
    MethodCostModel m4 = cost_model(CostMethod::M4);
    MethodCostModel sh4 = cost_model(CostMethod::SH4);
    MethodCostModel mn4 = cost_model(CostMethod::MN4);

    CHECK(m3.order_p == 3);
    CHECK(m4.order_p == 4);
    CHECK(sh4.order_p == 4);
    CHECK(mn4.order_p == 4);

    for (long n : {2L, 3L, 10L}) {
        for (CostMethod cm : {CostMethod::SH4, CostMethod::MN4, CostMethod::M3, CostMethod::M4})
            CHECK(cost_model(cm).fe_count(n) == Rational(n + 2 * n * n));
        // SH4 and MN4 factor two Jacobians per iteration, M3/M4 share one
        Rational n3 = Rational(n) * n * n;
        CHECK(sh4.lu_cost(n) == Rational(4, 3) * n3);
        CHECK(mn4.lu_cost(n) == Rational(4, 3) * n3);
        CHECK(m3.lu_cost(n) == Rational(2, 3) * n3);
        CHECK(m4.lu_cost(n) == Rational(2, 3) * n3);
    }
}

TEST_CASE("flops denominators match the published closed forms") {
    struct Row {
        CostMethod m;
        Rational cubic;  // coefficient of n^3
    };
    const Row rows[] = {
        {CostMethod::SH4, Rational(10, 3)},
        {CostMethod::MN4, Rational(7, 3)},
        {CostMethod::M3, Rational(5, 3)},
        {CostMethod::M4, Rational(5, 3)},
    };
    for (const Row& r : rows) {
        MethodCostModel model = cost_model(r.m);
        for (long n : {2L, 3L, 4L, 10L, 99L}) {
            Rational nn(n);
            Rational want = r.cubic * nn * nn * nn + 4 * nn * nn + nn;
            INFO(to_string(r.m) << " n=" << n);
            CHECK(model.flops_denominator(n) == want);
        }
    }
}

TEST_CASE("classical indices at n = 2") {
    // M4: 4^(1/10) = 1.148698...; M3: 3^(1/10) = 1.116123...
    CHECK(classical(CostMethod::M4, 2) == doctest::Approx(std::pow(4.0, 0.1)).epsilon(1e-12));
    CHECK(classical(CostMethod::M3, 2) == doctest::Approx(std::pow(3.0, 0.1)).epsilon(1e-12));
    // same order and same functional cost: classical index cannot separate them
    Real m4 = classical_index(cost_model(CostMethod::M4), 2, kPrec);
    CHECK(classical_index(cost_model(CostMethod::SH4), 2, kPrec) == m4);
    CHECK(classical_index(cost_model(CostMethod::MN4), 2, kPrec) == m4);
}

TEST_CASE("flops-like indices reproduce the published four-decimal values") {
    struct Row {
        long n;
        double m3, mn4, sh4, m4;
    };
    const Row rows[] = {
        {2, 1.0357, 1.0385, 1.0315, 1.0452},
        {3, 1.0132, 1.0137, 1.0108, 1.0166},
        {4, 1.0063, 1.0064, 1.0049, 1.0080},
    };
    for (const Row& r : rows) {
        INFO("n=" << r.n);
        CHECK(flopslike(CostMethod::M3, r.n) == doctest::Approx(r.m3).epsilon(5e-5));
        CHECK(flopslike(CostMethod::MN4, r.n) == doctest::Approx(r.mn4).epsilon(5e-5));
        CHECK(flopslike(CostMethod::SH4, r.n) == doctest::Approx(r.sh4).epsilon(5e-5));
        CHECK(flopslike(CostMethod::M4, r.n) == doctest::Approx(r.m4).epsilon(5e-5));
    }
    // all indices collapse toward 1.0000 for large n
    for (CostMethod m : {CostMethod::SH4, CostMethod::MN4, CostMethod::M3, CostMethod::M4})
        CHECK(flopslike(m, 99) == doctest::Approx(1.0).epsilon(5e-4));
}

TEST_CASE("m4 dominates and all indices decrease with n") {
    for (long n = 2; n <= 80; ++n) {
        double m3 = flopslike(CostMethod::M3, n);
        double mn4 = flopslike(CostMethod::MN4, n);
        double sh4 = flopslike(CostMethod::SH4, n);
        double m4 = flopslike(CostMethod::M4, n);
        CHECK(m4 > mn4);
        CHECK(m4 > m3);
        CHECK(mn4 > sh4);
        CHECK(m3 > sh4);
        CHECK(m4 > 1.0);
        // the second LU catches up with MN4's higher order by n = 5
        if (n <= 4) CHECK(mn4 > m3);
        if (n >= 5) CHECK(m3 > mn4);
        if (n > 2) {
            CHECK(flopslike(CostMethod::M4, n) < flopslike(CostMethod::M4, n - 1));
            CHECK(classical(CostMethod::M4, n) < classical(CostMethod::M4, n - 1));
        }
    }
}

TEST_CASE("index_table layout") {
    IndexTable t = index_table({CostMethod::M3, CostMethod::M4}, 2, 6, IndexKind::flops, kPrec);
    CHECK(t.kind == IndexKind::flops);
    REQUIRE(t.n_values.size() == 5);
    REQUIRE(t.rows.size() == 5);
    CHECK(t.n_values.front() == 2);
    CHECK(t.n_values.back() == 6);
    for (size_t i = 0; i < t.rows.size(); ++i) {
        REQUIRE(t.rows[i].size() == 2);
        CHECK(t.rows[i][0].to_double() ==
              doctest::Approx(flopslike(CostMethod::M3, t.n_values[i])));
        CHECK(t.rows[i][1].to_double() ==
              doctest::Approx(flopslike(CostMethod::M4, t.n_values[i])));
    }
}

TEST_CASE("dimension range validation") {
    CHECK_THROWS_AS(index_table({CostMethod::M4}, 1, 5, IndexKind::flops, kPrec),
                    std::invalid_argument);
    CHECK_THROWS_AS(index_table({CostMethod::M4}, 5, 2, IndexKind::flops, kPrec),
                    std::invalid_argument);
    CHECK_THROWS_AS(index_table({CostMethod::M4}, 2, 2000000, IndexKind::flops, kPrec),
                    std::invalid_argument);
    CHECK_THROWS_AS(classical_index(cost_model(CostMethod::M4), 0, kPrec),
                    std::invalid_argument);
    CHECK_NOTHROW(classical_index(cost_model(CostMethod::M4), 1000000, kPrec));
}
