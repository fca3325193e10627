#include <doctest.h>

#include "hca/laurent.hpp"
#include "hca/param_poly.hpp"
#include "hca/parse.hpp"
#include "test_util.hpp"

using namespace hca;

TEST_CASE("rational canonical form and printing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(7).to_string() == "7");
    CHECK(Rational(-3, 8).to_string() == "-3/8");
    CHECK(Rational::from_string("32/48") == Rational(2, 3));
    CHECK(Rational::from_string(" -5 ") == Rational(-5));
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(-2, 3).pow_int(-2) == Rational(9, 4));
}

TEST_CASE("factorials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(double_factorial(-3) == -1);
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(1) == 1);
    CHECK(double_factorial(7) == 105);
    CHECK(binomial(7, 3) == 35);
}

TEST_CASE("polynomial arithmetic basics") {
    ParamPoly b = ParamPoly::variable("b");
    ParamPoly c = ParamPoly::variable("c");
    CHECK(b * b == parse_param_poly("b^2"));
    CHECK((c * Rational(2) + c * Rational(-2)).is_zero());
    CHECK((b + c) * (b - c) == parse_param_poly("b^2 - c^2"));
    ParamPoly zero = b - b;
    CHECK(zero.is_zero());
    CHECK(zero.parameters().empty());  // names pruned with the terms
}

TEST_CASE("canonical printing and round trip") {
    ParamPoly p = parse_param_poly("(1/8)*b*(5*b^2 - 1)");
    CHECK(p.to_string() == "5/8*b^3 - 1/8*b");
    CHECK(parse_param_poly(p.to_string()) == p);
    ParamPoly q = parse_param_poly("(32*c^2 - 5)/35");
    CHECK(parse_param_poly(q.to_string()) == q);
    CHECK(ParamPoly().to_string() == "0");
    CHECK(ParamPoly(Rational(-1, 2)).to_string() == "-1/2");
}

TEST_CASE("evaluation") {
    ParamPoly half_b = parse_param_poly("b/2");
    CHECK(half_b.eval({{"b", Rational(2)}}) == Rational(1));
    ParamPoly q = parse_param_poly("(32*c^2 - 5)/35");
    CHECK(q.eval({{"c", Rational(1)}}) == Rational(27, 35));
    CHECK(ParamPoly(1).eval({}) == Rational(1));
    CHECK_THROWS_WITH_AS(q.eval({{"b", Rational(1)}}), "unbound parameter 'c'",
                         std::invalid_argument);
    // extra bindings are fine
    CHECK(half_b.eval({{"b", Rational(4)}, {"z", Rational(9)}}) == Rational(2));
}

TEST_CASE("derivative") {
    ParamPoly p = parse_param_poly("c^3 - 2*c + 7");
    CHECK(p.derivative("c") == parse_param_poly("3*c^2 - 2"));
    CHECK(p.derivative("b").is_zero());
}

TEST_CASE("ring laws on random polynomials") {
    testutil::Rng rng(42);
    const std::vector<std::string> names{"b", "c"};
    for (int trial = 0; trial < 60; ++trial) {
        ParamPoly a = rng.poly(names), b = rng.poly(names), c = rng.poly(names);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    testutil::Rng rng(43);
    const std::vector<std::string> names{"b", "c"};
    for (int trial = 0; trial < 40; ++trial) {
        ParamPoly a = rng.poly(names), b = rng.poly(names);
        std::map<std::string, Rational> point{{"b", rng.rational()}, {"c", rng.rational()}};
        CHECK((a * b).eval(point) == a.eval(point) * b.eval(point));
        CHECK((a + b).eval(point) == a.eval(point) + b.eval(point));
    }
}

TEST_CASE("Laurent polynomials") {
    LaurentPoly x = LaurentPoly::term(-2, ParamPoly(Rational(3, 2))) +
                    LaurentPoly::term(3, parse_param_poly("b"));
    CHECK(x.to_string() == "b*t^3 + 3/2*t^-2");
    CHECK(x.coeff(-2) == ParamPoly(Rational(3, 2)));
    CHECK(x.coeff(0).is_zero());
    CHECK(x.min_exp() == -2);
    CHECK(x.max_exp() == 3);
    CHECK((x - x).is_zero());
    LaurentPoly t = LaurentPoly::t_pow(1);
    LaurentPoly tinv = LaurentPoly::t_pow(-1);
    CHECK(t * tinv == LaurentPoly::one());
    CHECK(x.shifted(2) * LaurentPoly::t_pow(-2) == x);
}
