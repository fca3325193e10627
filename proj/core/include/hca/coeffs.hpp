#pragma once

#include <memory>
#include <vector>

#include "hca/curve.hpp"
#include "hca/series.hpp"

namespace hca {

// Memoized tables of the two coefficient families attached to a curve.
//
// P_{k,i} for k >= -n and i in [-n,-1]:
//   P_{k,i} = delta_{k,i}                                  for -n <= k <= -1,
//   (2k+n+2) P_{k,i} = -sum_{j=0}^{n-1} (3j+2k-2n+2) a_j P_{k-n+j,i}   for k >= 0.
//
// Q_{m,i} for m >= 1 and i in [-n,-1]:
//   Q_{m,i} = delta_{m,-i}                                 for 1 <= m <= n,
//   -2(m-1) a_0 Q_{m,i} = -sum_{j=1}^{n} (3j-2m+2) a_j Q_{m-j,i}       for m >= n+1.
//
// The Q family divides by a_0 and therefore requires a_0 to be a nonzero
// rational constant; q() throws otherwise. Table construction is lazy and
// must be driven from a single thread; once filled, reads are const.
class CoeffTables {
  public:
    explicit CoeffTables(CurveSpec spec);

    const CurveSpec& spec() const { return spec_; }
    int degree() const { return spec_.degree(); }

    // P_{k,i}; requires k >= -n, -n <= i <= -1.
    const ParamPoly& p(long k, long i) const;
    // Q_{m,i}; requires m >= 1, -n <= i <= -1 and numeric a_0.
    const ParamPoly& q(long m, long i) const;
    bool q_available() const { return a0_numeric_; }

  private:
    CurveSpec spec_;
    bool a0_numeric_;
    Rational a0_;
    mutable std::vector<std::vector<ParamPoly>> p_memo_;  // [i+n][k+n]
    mutable std::vector<std::vector<ParamPoly>> q_memo_;  // [i+n][m-1]
    std::size_t column(long i) const;
};

// Generating series on the z^m grid; the coefficient of z^m is the table
// entry with k = m - n (respectively m = m' - n for the Q side). `order`
// is the truncation order: exponents below it are produced.
HalfGridSeries p_series(const CoeffTables& tables, long i, long order);
HalfGridSeries q_series(const CoeffTables& tables, long i, long order);

}  // namespace hca
