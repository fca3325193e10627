#pragma once

#include <limits>
#include <map>
#include <string>

#include "hca/param_poly.hpp"

namespace hca {

// Truncated formal series with exponents on the half-integer grid (1/2)*Z
// and ParamPoly coefficients. Exponents are addressed by twice their value
// ("e2"), so z^{5/2} lives at e2 = 5.
//
// truncation2() is twice the truncation order: coefficients at e2 <
// truncation2() are known (zero if absent), everything above is unknown.
// Exact polynomials carry the sentinel order kExact2. Arithmetic propagates
// truncation pessimistically, so equality of two series is only ever
// asserted below the smaller order.
class HalfGridSeries {
  public:
    static constexpr long kExact2 = std::numeric_limits<long>::max() / 4;

    HalfGridSeries() : trunc2_(kExact2) {}  // exact zero
    static HalfGridSeries zero(long trunc2);
    // coeff * z^{e2/2}, exact
    static HalfGridSeries term2(long e2, ParamPoly coeff);
    static HalfGridSeries term_int(long e, ParamPoly coeff) { return term2(2 * e, std::move(coeff)); }
    static HalfGridSeries one() { return term_int(0, ParamPoly(1)); }

    long truncation2() const { return trunc2_; }
    bool is_exact() const { return trunc2_ == kExact2; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<long, ParamPoly>& coeffs() const { return coeffs_; }

    // Known coefficient at e2; throws std::out_of_range above the
    // truncation order.
    ParamPoly coeff2(long e2) const;
    ParamPoly coeff_int(long e) const { return coeff2(2 * e); }
    bool known2(long e2) const { return e2 < trunc2_; }
    // Lowest stored exponent; truncation2() when no term is stored.
    long min_exp2() const { return coeffs_.empty() ? trunc2_ : coeffs_.begin()->first; }

    void set_coeff2(long e2, ParamPoly c);

    HalfGridSeries operator-() const;
    HalfGridSeries& operator+=(const HalfGridSeries& o);
    HalfGridSeries& operator-=(const HalfGridSeries& o);
    HalfGridSeries& operator*=(const HalfGridSeries& o);
    friend HalfGridSeries operator+(HalfGridSeries a, const HalfGridSeries& b) { return a += b; }
    friend HalfGridSeries operator-(HalfGridSeries a, const HalfGridSeries& b) { return a -= b; }
    friend HalfGridSeries operator*(HalfGridSeries a, const HalfGridSeries& b) { return a *= b; }

    HalfGridSeries& scale(const ParamPoly& s);
    HalfGridSeries& scale(const Rational& s) { return scale(ParamPoly(s)); }
    HalfGridSeries shifted2(long d2) const;  // multiply by z^{d2/2}
    HalfGridSeries truncated2(long trunc2) const;

    // Term-by-term antiderivative, constant of integration 0. Throws if a
    // z^{-1} term is present (a logarithm would arise). Truncation order
    // rises by 1.
    HalfGridSeries integrated() const;
    // Term-by-term derivative; truncation order drops by 1.
    HalfGridSeries differentiated() const;

    // Square root by Newton iteration on the inverse square root; requires
    // constant term 1 (lowest exponent 0, coefficient 1). The result squares
    // back to the input below the truncation order.
    HalfGridSeries sqrt_newton() const;

    // Agreement below min(truncation of a, truncation of b, bound2).
    static bool agree(const HalfGridSeries& a, const HalfGridSeries& b,
                      long bound2 = kExact2);

    std::string to_string(const std::string& var = "z") const;

  private:
    std::map<long, ParamPoly> coeffs_;
    long trunc2_;

    void add_term(long e2, const ParamPoly& c);
    void drop_unknown();
    static long sat_add(long a, long b);
};

}  // namespace hca
