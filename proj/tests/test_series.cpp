#include <doctest.h>

#include "hca/parse.hpp"
#include "hca/series.hpp"
#include "test_util.hpp"

using namespace hca;

namespace {

HalfGridSeries int_poly(std::initializer_list<std::pair<long, long>> terms) {
    HalfGridSeries s;
    for (auto [e, c] : terms) s += HalfGridSeries::term_int(e, ParamPoly(c));
    return s;
}

// Random series with constant term 1, exponents on the half grid.
HalfGridSeries random_unit_series(testutil::Rng& rng, long trunc2) {
    HalfGridSeries s = HalfGridSeries::one().truncated2(trunc2);
    for (long e2 = 1; e2 < trunc2; ++e2)
        if (rng.pick(0, 2) == 0) s.set_coeff2(e2, rng.poly({"b"}, 2, 2));
    return s;
}

}  // namespace

TEST_CASE("series multiplication") {
    HalfGridSeries one_plus = int_poly({{0, 1}, {1, 1}});
    HalfGridSeries one_minus = int_poly({{0, 1}, {1, -1}});
    CHECK(HalfGridSeries::agree(one_plus * one_minus, int_poly({{0, 1}, {2, -1}})));
    HalfGridSeries half = HalfGridSeries::term2(1, ParamPoly(1));  // z^{1/2}
    CHECK(HalfGridSeries::agree(half * half, int_poly({{1, 1}})));
}

TEST_CASE("quartic series product by hand to order 10") {
    // (1 + z^4)(1 + (4c/5) z^6) = 1 + z^4 + (4c/5) z^6 + (4c/5) z^10
    ParamPoly fc = parse_param_poly("4*c/5");
    HalfGridSeries a = int_poly({{0, 1}, {4, 1}});
    HalfGridSeries b = HalfGridSeries::one() + HalfGridSeries::term_int(6, fc);
    HalfGridSeries prod = a * b;
    CHECK(prod.coeff_int(0) == ParamPoly(1));
    CHECK(prod.coeff_int(4) == ParamPoly(1));
    CHECK(prod.coeff_int(6) == fc);
    CHECK(prod.coeff_int(8).is_zero());
    CHECK(prod.coeff_int(10) == fc);
}

TEST_CASE("truncation propagates through multiplication") {
    // ord = min(ordA + valB, ordB + valA)
    HalfGridSeries a = int_poly({{1, 1}}).truncated2(10);  // val 1, ord 5
    HalfGridSeries b = int_poly({{2, 1}}).truncated2(16);  // val 2, ord 8
    CHECK((a * b).truncation2() == std::min(10 + 4, 16 + 2));
    CHECK((a + b).truncation2() == 10);
}

TEST_CASE("square root by Newton iteration") {
    CHECK(HalfGridSeries::agree(HalfGridSeries::one().truncated2(20).sqrt_newton(),
                                HalfGridSeries::one()));
    SUBCASE("squares back: 1 - 2c z^2 + z^4") {
        HalfGridSeries a = (HalfGridSeries::one() +
                            HalfGridSeries::term_int(2, parse_param_poly("-2*c")) +
                            HalfGridSeries::term_int(4, ParamPoly(1)))
                               .truncated2(24);
        HalfGridSeries r = a.sqrt_newton();
        CHECK(r.coeff_int(0) == ParamPoly(1));
        CHECK(r.coeff_int(2) == parse_param_poly("-c"));
        CHECK(r.coeff_int(4) == parse_param_poly("(1 - c^2)/2"));
        CHECK(HalfGridSeries::agree(r * r, a));
    }
    SUBCASE("binomial series for sqrt(1+z)") {
        HalfGridSeries a = int_poly({{0, 1}, {1, 1}}).truncated2(20);
        HalfGridSeries r = a.sqrt_newton();
        // oracle: c_k = c_{k-1} (1/2 - (k-1)) / k
        Rational ck(1);
        for (long k = 0; k < 10; ++k) {
            if (k > 0) ck = ck * (Rational(1, 2) - Rational(k - 1)) / Rational(k);
            CHECK(r.coeff_int(k) == ParamPoly(ck));
        }
    }
    SUBCASE("requires constant term 1") {
        CHECK_THROWS_AS(int_poly({{0, 4}}).truncated2(8).sqrt_newton(), std::domain_error);
        CHECK_THROWS_AS(int_poly({{1, 1}}).truncated2(8).sqrt_newton(), std::domain_error);
    }
}

TEST_CASE("square root squares back on random series") {
    testutil::Rng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        HalfGridSeries a = random_unit_series(rng, 16);
        CHECK(HalfGridSeries::agree(a.sqrt_newton() * a.sqrt_newton(), a));
    }
}

TEST_CASE("integration") {
    CHECK(HalfGridSeries::agree(int_poly({{2, 3}}).integrated(), int_poly({{3, 1}})));
    HalfGridSeries half = HalfGridSeries::term2(1, ParamPoly(1));
    CHECK(HalfGridSeries::agree(half.integrated(),
                                HalfGridSeries::term2(3, ParamPoly(Rational(2, 3)))));
    CHECK_THROWS_AS(HalfGridSeries::term_int(-1, ParamPoly(1)).integrated(),
                    std::domain_error);
}

TEST_CASE("differentiation") {
    CHECK(HalfGridSeries::agree(int_poly({{5, 1}}).differentiated(), int_poly({{4, 5}})));
    CHECK(HalfGridSeries::one().differentiated().is_zero());
    CHECK(int_poly({{3, 1}}).truncated2(12).differentiated().truncation2() == 10);
}

TEST_CASE("differentiate after integrate is the identity") {
    testutil::Rng rng(78);
    for (int trial = 0; trial < 20; ++trial) {
        HalfGridSeries a;
        for (long e2 = -6; e2 < 12; ++e2)
            if (e2 != -2 && rng.pick(0, 2) == 0)
                a += HalfGridSeries::term2(e2, rng.poly({"c"}, 2, 2));
        a = a.truncated2(12);
        CHECK(HalfGridSeries::agree(a.integrated().differentiated(), a));
    }
}

TEST_CASE("coefficients above the truncation order are unreachable") {
    HalfGridSeries a = int_poly({{0, 1}}).truncated2(6);
    CHECK_THROWS_AS(a.coeff_int(3), std::out_of_range);
    CHECK(a.coeff_int(2).is_zero());
}
