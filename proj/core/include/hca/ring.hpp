#pragma once

#include <string>
#include <vector>

#include "hca/curve.hpp"
#include "hca/laurent.hpp"

namespace hca {

// Element f + g*u of R = C[t, t^-1, u | u^2 = p(t)], stored as the pair of
// Laurent polynomials (even part f, odd part g).
struct RingElement {
    LaurentPoly even;
    LaurentPoly odd;

    static RingElement one() { return {LaurentPoly::one(), {}}; }
    static RingElement t_pow(long k) { return {LaurentPoly::t_pow(k), {}}; }
    static RingElement u() { return {{}, LaurentPoly::one()}; }
    // t^k or t^k*u
    static RingElement monomial(long k, bool with_u) {
        return with_u ? RingElement{{}, LaurentPoly::t_pow(k)} : t_pow(k);
    }

    bool is_zero() const { return even.is_zero() && odd.is_zero(); }

    RingElement operator-() const { return {-even, -odd}; }
    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }

    RingElement& scale(const ParamPoly& s);

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.even == b.even && a.odd == b.odd;
    }
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

    std::string to_string() const;
};

// (f1 + g1 u)(f2 + g2 u) = (f1 f2 + g1 g2 p) + (f1 g2 + f2 g1) u.
RingElement ring_mul(const RingElement& x, const RingElement& y, const CurveSpec& spec);

// One monomial pairing t^i u^{left_u} d(t^j u^{right_u}) with a scalar
// polynomial weight; the bilinear expansion of f dg is a list of these.
struct MonomialPairing {
    long i = 0;
    long j = 0;
    bool left_u = false;
    bool right_u = false;
    ParamPoly weight;
};

// Expands f dg by bilinearity into weighted monomial pairings. The d-side
// monomials are kept unreduced; downstream reducers handle d(t^j u).
std::vector<MonomialPairing> derivative_pairings(const RingElement& f, const RingElement& g);

}  // namespace hca
