#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hca/rational.hpp"

namespace hca {

// Multivariate polynomial over Rational in named parameters.
//
// Canonical form invariants:
//   * parameter names sorted, and every name appears in at least one term,
//   * no zero coefficient is stored,
// so structural equality is mathematical equality. Values are immutable in
// spirit: every operation returns a fresh canonical polynomial.
class ParamPoly {
  public:
    using Exponents = std::vector<std::uint32_t>;

    ParamPoly() = default;  // zero
    ParamPoly(const Rational& c);
    ParamPoly(int c) : ParamPoly(Rational(c)) {}
    ParamPoly(long c) : ParamPoly(Rational(c)) {}

    static ParamPoly variable(const std::string& name);
    // coeff * name^exp
    static ParamPoly monomial(const Rational& coeff, const std::string& name, std::uint32_t exp);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return names_.empty(); }
    // Throws unless is_constant().
    Rational constant_value() const;

    const std::vector<std::string>& parameters() const { return names_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    long total_degree() const;  // -1 for the zero polynomial

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(ParamPoly a, const ParamPoly& b) { return a *= b; }

    ParamPoly& operator*=(const Rational& s);
    ParamPoly& operator/=(const Rational& s);
    friend ParamPoly operator*(ParamPoly a, const Rational& s) { return a *= s; }
    friend ParamPoly operator*(const Rational& s, ParamPoly a) { return a *= s; }
    friend ParamPoly operator/(ParamPoly a, const Rational& s) { return a /= s; }

    ParamPoly pow(std::uint32_t k) const;
    ParamPoly derivative(const std::string& name) const;

    // Exact evaluation; throws naming the first parameter missing from point.
    Rational eval(const std::map<std::string, Rational>& point) const;

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
        return a.names_ == b.names_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    // Canonical text: terms by descending total degree, ties broken by
    // descending exponent vector; e.g. "5/8*b^3 - 1/8*b".
    std::string to_string() const;
    // As above but parenthesized whenever the result is not a single
    // leading-sign-free monomial, for embedding as a factor.
    std::string to_factor_string() const;

  private:
    std::vector<std::string> names_;
    std::map<Exponents, Rational> terms_;

    void prune();
    ParamPoly remapped(const std::vector<std::string>& new_names) const;
    static std::vector<std::string> merged_names(const ParamPoly& a, const ParamPoly& b);
};

}  // namespace hca
