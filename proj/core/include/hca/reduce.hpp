#pragma once

#include <utility>
#include <vector>

#include "hca/central.hpp"
#include "hca/coeffs.hpp"
#include "hca/ring.hpp"

namespace hca {

// Closed-form reduction of the four monomial 1-form shapes to the
// omega-basis.
//
//   t^i d(t^j)     = j delta_{i+j,0} omega_0
//   t^i u d(t^j u) = sum_k (j + k/2) a_k delta_{i+j,-k} omega_0
//   t^i u d(t^j)   = j sum_k P_{i+j-1,-k} omega_k   (i+j >= -n+1)
//                  = j sum_k Q_{-i-j+1,-k} omega_k  (i+j <  -n+1)
//   t^i d(t^j u)   = -(t^j u d(t^i))        since d(t^{i+j} u) is exact.

CentralVector reduce_even_even(long i, long j, const CurveSpec& spec);
CentralVector reduce_odd_odd(long i, long j, const CurveSpec& spec);
CentralVector reduce_odd_even(long i, long j, const CoeffTables& tables);
CentralVector reduce_even_odd(long i, long j, const CoeffTables& tables);

// The class of f dg, extended bilinearly over the monomial reducers.
CentralVector cocycle(const RingElement& f, const RingElement& g, const CoeffTables& tables);

// One application of the u^m = p(t) rewrite of 1-forms:
//   ((m+1)n + i m) t^{n+i-1} u dt = -sum_{j<n} ((m+1)j + m i) a_j t^{i+j-1} u dt
// normalized by the leading scalar. Only m = 2 feeds the pipeline; the
// general relation is exposed here.
struct RewriteStep {
    long lead_exponent;                              // n + i - 1
    std::vector<std::pair<long, ParamPoly>> terms;   // exponent -> coefficient
};
RewriteStep rewrite_step(long m, const CurveSpec& spec, long i);

}  // namespace hca
