#include <doctest.h>

#include "hca/parse.hpp"

using namespace hca;

TEST_CASE("curve expressions") {
    CurveSpec s = parse_curve("t^6 - 2*b*t^3 + 1");
    CHECK(s.degree() == 6);
    CHECK(s.a(0) == ParamPoly(1));
    CHECK(s.a(3) == parse_param_poly("-2*b"));
    CHECK_THROWS_AS(parse_curve("t^2 + u"), std::invalid_argument);
    CHECK_THROWS_AS(parse_curve("t^-1 + t^2 + 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_curve(""), std::invalid_argument);
}

TEST_CASE("ring element expressions") {
    CurveSpec hexic = parse_curve("t^6 - 2*b*t^3 + 1");
    RingElement v = parse_ring_element("(3/2)*t^-2 + b*t^3*u", hexic);
    CHECK(v.even.coeff(-2) == ParamPoly(Rational(3, 2)));
    CHECK(v.odd.coeff(3) == parse_param_poly("b"));
    // u^2 collapses to p(t)
    RingElement uu = parse_ring_element("u^2", hexic);
    CHECK(uu.odd.is_zero());
    CHECK(uu.even == hexic.p());
    RingElement diff = parse_ring_element("(t+u)*(t-u) - t^2 + u^2", hexic);
    CHECK(diff.is_zero());
    CHECK_THROWS_AS(parse_ring_element("t/(1+t)", hexic), std::invalid_argument);
    CHECK_THROWS_AS(parse_ring_element("u^-1", hexic), std::invalid_argument);
    CHECK_THROWS_AS(parse_ring_element("1/0", hexic), std::invalid_argument);
}

TEST_CASE("caret diagnostics name the offending position") {
    CurveSpec hexic = parse_curve("t^6 - 2*b*t^3 + 1");
    try {
        parse_ring_element("t^2 + $", hexic);
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        CHECK(msg.find('^') != std::string::npos);
        CHECK(msg.find("t^2 + $") != std::string::npos);
    }
}

TEST_CASE("loop expressions accept @ and the tensor sign") {
    CurveSpec hexic = parse_curve("t^6 - 2*b*t^3 + 1");
    auto [label1, v1] = parse_loop_expr("e@t^2*u", hexic);
    CHECK(label1 == "e");
    CHECK(v1.odd.coeff(2) == ParamPoly(1));
    auto [label2, v2] = parse_loop_expr("f\xe2\x8a\x97t^-1", hexic);
    CHECK(label2 == "f");
    CHECK(v2.even.coeff(-1) == ParamPoly(1));
    CHECK_THROWS_AS(parse_loop_expr("e t", hexic), std::invalid_argument);
}

TEST_CASE("monomial 1-forms") {
    CurveSpec hexic = parse_curve("t^6 - 2*b*t^3 + 1");
    MonomialForm a = parse_monomial_form("t^3*u dt", hexic);
    CHECK(a.exp == 3);
    CHECK(a.with_u);
    CHECK(a.weight == ParamPoly(1));
    MonomialForm b = parse_monomial_form("t^-1 dt", hexic);
    CHECK(b.exp == -1);
    CHECK(!b.with_u);
    MonomialForm c = parse_monomial_form("u dt", hexic);
    CHECK(c.exp == 0);
    CHECK(c.with_u);
    CHECK_THROWS_AS(parse_monomial_form("t^2 + t dt", hexic), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial_form("t^2", hexic), std::invalid_argument);
}

TEST_CASE("instantiation points") {
    auto pt = parse_point("b=2, c = -1/3");
    CHECK(pt.at("b") == Rational(2));
    CHECK(pt.at("c") == Rational(-1, 3));
    CHECK(parse_point("").empty());
    CHECK_THROWS_AS(parse_point("b"), std::invalid_argument);
}
