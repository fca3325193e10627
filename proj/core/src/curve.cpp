#include "hca/curve.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hca {

const ParamPoly CurveSpec::zero_{};

bool numeric_poly_separable(const std::vector<Rational>& coeffs) {
    auto degree = [](const std::vector<Rational>& v) {
        for (std::size_t i = v.size(); i-- > 0;)
            if (!v[i].is_zero()) return static_cast<long>(i);
        return -1L;
    };
    auto rem = [&](std::vector<Rational> a, const std::vector<Rational>& b) {
        long db = degree(b);
        for (long da = degree(a); da >= db && da >= 0; da = degree(a)) {
            Rational q = a[da] / b[db];
            for (long k = 0; k <= db; ++k) a[da - db + k] -= q * b[k];
        }
        return a;
    };
    std::vector<Rational> p = coeffs, d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
    // Euclid; gcd is constant iff the last nonzero remainder has degree 0.
    std::vector<Rational> x = p, y = d;
    while (degree(y) > 0) {
        auto r = rem(x, y);
        x = y;
        y = r;
    }
    return degree(y) == 0;
}

CurveSpec CurveSpec::validated(std::vector<ParamPoly> coeffs) {
    if (coeffs.size() < 2)
        throw std::invalid_argument("curve polynomial must have degree >= 1");
    if (coeffs.back() != ParamPoly(1))
        throw std::invalid_argument("curve polynomial must be monic (a_n = 1)");
    if (coeffs.front().is_zero())
        throw std::invalid_argument("curve polynomial must have a_0 != 0");
    std::set<std::string> names;
    bool numeric = true;
    for (const auto& c : coeffs) {
        if (!c.is_constant()) numeric = false;
        for (const auto& nm : c.parameters()) names.insert(nm);
    }
    if (numeric) {
        std::vector<Rational> vals;
        vals.reserve(coeffs.size());
        for (const auto& c : coeffs) vals.push_back(c.constant_value());
        if (!numeric_poly_separable(vals))
            throw std::invalid_argument("curve polynomial has a repeated root");
    }
    CurveSpec s;
    s.coeffs_ = std::move(coeffs);
    s.params_.assign(names.begin(), names.end());
    return s;
}

const ParamPoly& CurveSpec::a(long k) const {
    if (k < 0 || k > degree()) return zero_;
    return coeffs_[static_cast<std::size_t>(k)];
}

LaurentPoly CurveSpec::p() const {
    LaurentPoly out;
    for (long k = 0; k <= degree(); ++k) out += LaurentPoly::term(k, a(k));
    return out;
}

LaurentPoly CurveSpec::p_prime() const {
    LaurentPoly out;
    for (long k = 1; k <= degree(); ++k)
        out += LaurentPoly::term(k - 1, a(k) * Rational(k));
    return out;
}

CurveSpec CurveSpec::instantiated(const std::map<std::string, Rational>& point) const {
    std::vector<ParamPoly> vals;
    vals.reserve(coeffs_.size());
    for (const auto& c : coeffs_) vals.emplace_back(c.eval(point));
    return validated(std::move(vals));
}

}  // namespace hca
