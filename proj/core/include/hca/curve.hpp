#pragma once

#include <map>
#include <string>
#include <vector>

#include "hca/laurent.hpp"
#include "hca/param_poly.hpp"

namespace hca {

// The defining polynomial p(t) = t^n + a_{n-1} t^{n-1} + ... + a_0 of the
// ring R = C[t, t^-1, u | u^2 = p(t)]. Coefficients may carry parameters.
//
// Validated invariants: a_n = 1, a_0 != 0 as a polynomial, and p separable
// (gcd(p, p') constant) whenever every coefficient is numeric. Separability
// with symbolic coefficients is the caller's responsibility.
class CurveSpec {
  public:
    // coeffs = a_0 .. a_n; throws std::invalid_argument on violation.
    static CurveSpec validated(std::vector<ParamPoly> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // a_k for any k; zero outside [0, n].
    const ParamPoly& a(long k) const;
    const std::vector<ParamPoly>& coeffs() const { return coeffs_; }
    const std::vector<std::string>& parameters() const { return params_; }
    bool is_numeric() const { return params_.empty(); }

    LaurentPoly p() const;        // p(t)
    LaurentPoly p_prime() const;  // p'(t)

    // Evaluates every coefficient; the result is validated numerically
    // (a_0 != 0 and separability at the instantiation point).
    CurveSpec instantiated(const std::map<std::string, Rational>& point) const;

    friend bool operator==(const CurveSpec& x, const CurveSpec& y) {
        return x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const CurveSpec& x, const CurveSpec& y) { return !(x == y); }

    std::string to_string() const { return p().to_string(); }

  private:
    CurveSpec() = default;
    std::vector<ParamPoly> coeffs_;
    std::vector<std::string> params_;
    static const ParamPoly zero_;
};

// Exact gcd-based separability test for a numeric polynomial given as
// coefficients c_0..c_n; true iff gcd(p, p') is a nonzero constant.
bool numeric_poly_separable(const std::vector<Rational>& coeffs);

}  // namespace hca
