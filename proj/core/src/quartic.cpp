#include "hca/quartic.hpp"

#include <stdexcept>

namespace hca {

std::string quartic_parameter(const CurveSpec& spec) {
    const auto bad = [] {
        return std::invalid_argument("this check requires the curve t^4 - 2c*t^2 + 1");
    };
    if (spec.degree() != 4 || spec.parameters().size() != 1) throw bad();
    const std::string& c = spec.parameters().front();
    if (spec.a(0) != ParamPoly(1) || !spec.a(1).is_zero() || !spec.a(3).is_zero()) throw bad();
    if (spec.a(2) != ParamPoly::monomial(Rational(-2), c, 1)) throw bad();
    return c;
}

ParamPoly quartic_ode_residual(long m, const CoeffTables& tables) {
    const std::string cname = quartic_parameter(tables.spec());
    if (m < 0) throw std::invalid_argument("series index m must be nonnegative");
    const ParamPoly c = ParamPoly::variable(cname);
    const ParamPoly c2m1 = c * c - ParamPoly(1);  // c^2 - 1

    const ParamPoly& p0 = tables.p(m - 4, -4);
    const ParamPoly p1 = p0.derivative(cname);
    const ParamPoly p2 = p1.derivative(cname);
    const ParamPoly p3 = p2.derivative(cname);
    const ParamPoly p4 = p3.derivative(cname);

    const long mm = m * m;
    ParamPoly res = c2m1 * c2m1 * p4 * Rational(16);
    res += c * c2m1 * p3 * Rational(160);
    res -= (c * c * Rational(mm - 4 * m - 46) + ParamPoly(Rational(-(mm - 4 * m - 22)))) * p2 *
           Rational(8);
    res -= c * p1 * Rational(24 * (mm - 4 * m - 6));
    res += p0 * Rational((m - 4) * (m - 4) * m * m);
    return res;
}

bool quartic_recursion_check(long k, const CoeffTables& tables) {
    const std::string cname = quartic_parameter(tables.spec());
    if (k < 0) throw std::invalid_argument("recursion check needs k >= 0");
    const ParamPoly c = ParamPoly::variable(cname);
    ParamPoly lhs = tables.p(k, -4) * Rational(6 + 2 * k);
    ParamPoly rhs = c * tables.p(k - 2, -4) * Rational(4 * k) -
                    tables.p(k - 4, -4) * Rational(2 * (k - 3));
    return lhs == rhs;
}

}  // namespace hca
