#pragma once

#include <functional>

#include "hca/coeffs.hpp"
#include "hca/series.hpp"

namespace hca {

// Taylor series of f(g(z)) about 0 through exponents < order, given the
// outer derivative values f^(l)(g(0)) and the inner series g. Built from
// the composite-derivative expansion
//   d^n/dz^n f(g) = sum_l f^(l)(g) B_{n,l}(g', g'', ...).
// The inner series must live on the integer grid and be known below order.
HalfGridSeries faa_series(const std::function<Rational(int)>& outer_derivs,
                          const HalfGridSeries& inner, long order);

// f(x) = sqrt(x):   f^(l)(1) = (-1)^{l+1} (2l-3)!! / 2^l
Rational sqrt_deriv_at_one(int l);
// f(x) = x^{-3/2}:  f^(l)(1) = (-1)^l (2l+1)!! / 2^l
Rational pow_neg_3_2_deriv_at_one(int l);

// The generating series recovered through the closed integral form
//
//   P_i(z) = z^{(n-2)/2} sqrt(p_bar) ( C + int r / (2 z^{n/2} p_bar^{3/2}) dz )
//   Q_i(z) = z^{n+1}    sqrt(p~)    ( C + int s / (2 a_0 z^{n+2} p~^{3/2}) dz )
//
// with p~ = p_low / a_0. Series are expanded about 0 with Bell-polynomial
// composition, integrated term by term, and the constant C is pinned by the
// seed coefficients alone: C = [z^{-i-(n+2)/2}] p_bar^{-1/2} on the P side
// (zero whenever that exponent is not a nonnegative integer) and
// C = delta_{i,-1} on the Q side. Everything here depends only on the seed
// table rows, never on the recursion, so agreement with p_series/q_series
// is a genuine two-route check.
HalfGridSeries integral_p_series(long i, long order, const CoeffTables& tables);
HalfGridSeries integral_q_series(long i, long order, const CoeffTables& tables);

}  // namespace hca
