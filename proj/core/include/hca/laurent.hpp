#pragma once

#include <map>
#include <string>

#include "hca/param_poly.hpp"

namespace hca {

// Finitely supported Laurent polynomial in t with ParamPoly coefficients.
// No zero coefficient is ever stored.
class LaurentPoly {
  public:
    LaurentPoly() = default;  // zero
    static LaurentPoly term(long exp, ParamPoly coeff);
    static LaurentPoly one() { return term(0, ParamPoly(1)); }
    static LaurentPoly t_pow(long exp) { return term(exp, ParamPoly(1)); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, ParamPoly>& terms() const { return terms_; }
    ParamPoly coeff(long exp) const;
    long min_exp() const;  // throws on zero polynomial
    long max_exp() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

    LaurentPoly& scale(const ParamPoly& s);
    LaurentPoly shifted(long d) const;  // multiply by t^d

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // e.g. "3/2*t^-2 + b*t^3"; "0" when zero.
    std::string to_string(const std::string& var = "t") const;

  private:
    std::map<long, ParamPoly> terms_;
    void add_term(long exp, const ParamPoly& c);
};

}  // namespace hca
