#include <doctest.h>

#include "hca/parse.hpp"
#include "hca/quartic.hpp"

using namespace hca;

TEST_CASE("fourth-order residual vanishes for every series index") {
    CoeffTables t{parse_curve("t^4 - 2*c*t^2 + 1")};
    for (long m = 0; m <= 24; ++m) CHECK(quartic_ode_residual(m, t).is_zero());
}

TEST_CASE("spot values feeding the residual") {
    CoeffTables t{parse_curve("t^4 - 2*c*t^2 + 1")};
    // m = 0: P = 1, all derivative terms vanish and (m-4)^2 m^2 = 0
    CHECK(t.p(-4, -4) == ParamPoly(1));
    CHECK(quartic_ode_residual(0, t).is_zero());
    // m = 8 and m = 12 carry nontrivial cancellations
    CHECK(t.p(4, -4) == parse_param_poly("(32*c^2-5)/35"));
    CHECK(quartic_ode_residual(8, t).is_zero());
    CHECK(t.p(8, -4) == parse_param_poly("(2048*c^4-1248*c^2+75)/1155"));
    CHECK(quartic_ode_residual(12, t).is_zero());
}

TEST_CASE("three-term coefficient relation") {
    CoeffTables t{parse_curve("t^4 - 2*c*t^2 + 1")};
    for (long k = 0; k <= 16; ++k) CHECK(quartic_recursion_check(k, t));
}

TEST_CASE("other curves are rejected") {
    CoeffTables hexic{parse_curve("t^6 - 2*b*t^3 + 1")};
    CHECK_THROWS_AS(quartic_ode_residual(4, hexic), std::invalid_argument);
    CoeffTables shifted{parse_curve("t^4 - 2*c*t^2 + 2")};
    CHECK_THROWS_AS(quartic_ode_residual(4, shifted), std::invalid_argument);
}
