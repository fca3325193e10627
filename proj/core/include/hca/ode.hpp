#pragma once

#include "hca/coeffs.hpp"
#include "hca/series.hpp"

namespace hca {

// Polynomial data of the first-order equations satisfied by the generating
// series. With P_i(z) = sum_k P_{k,i} z^{k+n} and Q_i(z) = sum_m Q_{m,i} z^{m+n}:
//
//   2z p_bar P_i' - q_even P_i = r      p_bar = sum_j a_j z^{n-j},
//                                       q_even = z p_bar' + (n-2) p_bar
//   2z p_low Q_i' - q_odd Q_i  = s      p_low = sum_j a_j z^j,
//                                       q_odd = z p_low' + 2(n+1) p_low
//
// r and s only touch table entries in the seed range, so they are exact
// polynomials of degree < 2n (r) resp. <= 2n (s), and s never has a
// z^{n+1} term.
struct OdeData {
    HalfGridSeries p_bar;
    HalfGridSeries p_low;
    HalfGridSeries q_even;
    HalfGridSeries q_odd;
    HalfGridSeries r;
    HalfGridSeries s;
};

OdeData build_ode_data(long i, const CoeffTables& tables);

// 2z p_bar P_i' - q_even P_i - r, truncated; identically zero when the
// table satisfies its recursion.
HalfGridSeries ode_residual_p(long i, long order, const CoeffTables& tables);
// Q-side analogue (requires numeric a_0).
HalfGridSeries ode_residual_q(long i, long order, const CoeffTables& tables);

}  // namespace hca
