#include <doctest.h>

#include "hca/coeffs.hpp"
#include "hca/parse.hpp"

using namespace hca;

namespace {

ParamPoly pp(const std::string& s) { return parse_param_poly(s); }

CoeffTables hexic() { return CoeffTables(parse_curve("t^6 - 2*b*t^3 + 1")); }
CoeffTables quartic() { return CoeffTables(parse_curve("t^4 - 2*c*t^2 + 1")); }

}  // namespace

TEST_CASE("seed rows: P is the Kronecker delta on [-n,-1]") {
    CoeffTables t = hexic();
    for (long k = -6; k <= -1; ++k)
        for (long i = -6; i <= -1; ++i)
            CHECK(t.p(k, i) == (k == i ? ParamPoly(1) : ParamPoly()));
    CHECK(t.p(-3, -3) == ParamPoly(1));
}

TEST_CASE("seed rows: Q_{m,i} = delta_{m,-i} on [1,n]") {
    CoeffTables t = hexic();
    for (long m = 1; m <= 6; ++m)
        for (long i = -6; i <= -1; ++i)
            CHECK(t.q(m, i) == (m == -i ? ParamPoly(1) : ParamPoly()));
    CHECK(t.q(3, -3) == ParamPoly(1));
}

TEST_CASE("hexic P column i=-1") {
    CoeffTables t = hexic();
    CHECK(t.p(2, -1) == pp("b/2"));
    CHECK(t.p(5, -1) == pp("b^2/2"));
    CHECK(t.p(8, -1) == pp("(1/8)*b*(5*b^2-1)"));
    CHECK(t.p(11, -1) == pp("(1/8)*b^2*(7*b^2-3)"));
    CHECK(t.p(14, -1) == pp("(1/16)*(21*b^5-14*b^3+b)"));
    // gaps between the nonzero entries
    CHECK(t.p(0, -1).is_zero());
    CHECK(t.p(1, -1).is_zero());
    CHECK(t.p(3, -1).is_zero());
    CHECK(t.p(4, -1).is_zero());
}

TEST_CASE("hexic P values used by the omega reducers") {
    CoeffTables t = hexic();
    CHECK(t.p(2, -4) == pp("1/2"));
    CHECK(t.p(2, -2).is_zero());
    CHECK(t.p(2, -3).is_zero());
    CHECK(t.p(2, -5).is_zero());
    CHECK(t.p(2, -6).is_zero());
}

TEST_CASE("quartic P column i=-4") {
    CoeffTables t = quartic();
    CHECK(t.p(0, -4) == ParamPoly(1));
    CHECK(t.p(2, -4) == pp("4*c/5"));
    CHECK(t.p(4, -4) == pp("(32*c^2-5)/35"));
    CHECK(t.p(6, -4) == pp("(16/105)*c*(8*c^2-3)"));
    CHECK(t.p(8, -4) == pp("(2048*c^4 - 1248*c^2 + 75)/1155"));
    for (long k : {1L, 3L, 5L, 7L}) CHECK(t.p(k, -4).is_zero());
}

TEST_CASE("hexic Q column i=-1") {
    CoeffTables t = hexic();
    CHECK(t.q(7, -1) == pp("1/2"));
    CHECK(t.q(8, -1).is_zero());
}

TEST_CASE("Q-family refuses a symbolic constant term beyond the seed") {
    CoeffTables t{parse_curve("t^2 + a1*t + a0")};
    CHECK(t.q(2, -1) == ParamPoly());          // seed row, fine
    CHECK_THROWS_AS(t.q(3, -1), std::invalid_argument);
    CHECK(!t.q_available());
}

TEST_CASE("p_series lays table entries on the z^{k+n} grid") {
    CoeffTables t = quartic();
    HalfGridSeries s = p_series(t, -4, 13);
    CHECK(s.coeff_int(0) == ParamPoly(1));
    CHECK(s.coeff_int(4) == ParamPoly(1));
    CHECK(s.coeff_int(6) == pp("4*c/5"));
    CHECK(s.coeff_int(8) == pp("(32*c^2-5)/35"));
    CHECK(s.coeff_int(10) == pp("(16/105)*c*(8*c^2-3)"));
    CHECK(s.coeff_int(12) == pp("(2048*c^4-1248*c^2+75)/1155"));
    for (long m : {1L, 2L, 3L, 5L, 7L, 9L, 11L}) CHECK(s.coeff_int(m).is_zero());
}

TEST_CASE("hexic generating series for i=-1 through z^23") {
    CoeffTables t = hexic();
    HalfGridSeries s = p_series(t, -1, 24);
    CHECK(s.coeff_int(5) == ParamPoly(1));
    CHECK(s.coeff_int(8) == pp("b/2"));
    CHECK(s.coeff_int(11) == pp("b^2/2"));
    CHECK(s.coeff_int(14) == pp("(1/8)*b*(5*b^2-1)"));
    CHECK(s.coeff_int(17) == pp("(1/8)*b^2*(7*b^2-3)"));
    CHECK(s.coeff_int(20) == pp("(1/16)*(21*b^5-14*b^3+b)"));
    CHECK(s.coeff_int(23) == pp("(1/16)*b^2*(33*b^4-30*b^2+5)"));
    for (long m = 0; m < 5; ++m) CHECK(s.coeff_int(m).is_zero());
    CHECK(s.coeff_int(6).is_zero());
    CHECK(s.coeff_int(7).is_zero());
}

TEST_CASE("series derivative shifts the table coefficients termwise") {
    CoeffTables t = quartic();
    HalfGridSeries s = p_series(t, -4, 13);
    HalfGridSeries d = s.differentiated();
    for (long m = 0; m < 12; ++m)
        CHECK(d.coeff_int(m) == t.p(m + 1 - 4, -4) * Rational(m + 1));
}

TEST_CASE("q_series starts at z^{n-i} with coefficient 1") {
    CoeffTables t = hexic();
    for (long i = -6; i <= -1; ++i) {
        HalfGridSeries s = q_series(t, i, 14);
        for (long m = 0; m < 7 - i && m < 14; ++m) {
            if (m == 6 - i)
                CHECK(s.coeff_int(m) == ParamPoly(1));
            else
                CHECK(s.coeff_int(m).is_zero());
        }
    }
    CHECK(q_series(t, -1, 14).coeff_int(13) == pp("1/2"));
}
