#pragma once

#include <map>
#include <vector>

#include "hca/central.hpp"
#include "hca/curve.hpp"
#include "hca/ring.hpp"

namespace hca {

// Configuration of the brute-force reduction: Laurent exponents are
// confined to [-radius, radius] and all curve parameters are instantiated
// at `point`. The instantiated polynomial must be separable with a_0 != 0.
struct ReductionWindow {
    long radius = 0;  // >= 3n
    std::map<std::string, Rational> point;
};

long default_window_radius(const CurveSpec& spec, long max_abs_exponent);

// A 1-form with numeric coefficients, written over the generators
// t^e dt, t^e u dt and t^e du.
struct WindowForm {
    std::map<long, Rational> dt;
    std::map<long, Rational> u_dt;
    std::map<long, Rational> du;

    void add_dt(long e, const Rational& w);
    void add_u_dt(long e, const Rational& w);
    void add_du(long e, const Rational& w);
};

// Reduction to the omega-basis by exact Gaussian elimination against the
// span of the exact forms d(t^m) and d(t^m u) inside the window, fully
// independent of the closed-form reducers. The module relations
// 2u du = p' dt and p du = (p'/2) u dt put every form into the shape
// a(t) dt + b(t) u dt + r(t) du with deg r < n before elimination.
class KaehlerOracle {
  public:
    KaehlerOracle(const CurveSpec& spec, const ReductionWindow& window);

    // Class of the given form; entries are constant polynomials. Throws if
    // the reduction needs exponents outside the window.
    CentralVector reduce(const WindowForm& form) const;
    // Class of t^k u dt (with_u = true) or t^k dt.
    CentralVector reduce_monomial(long k, bool with_u) const;
    // Class of weight * t^i u^{left_u} d(t^j u^{right_u}).
    CentralVector reduce_pairing(long i, long j, bool left_u, bool right_u,
                                 const Rational& weight) const;

    // Dimension of the windowed quotient; equals n+1 when the window
    // relations have full rank.
    long quotient_dimension() const { return quotient_dim_; }

    const CurveSpec& numeric_spec() const { return spec_; }
    long radius() const { return radius_; }

  private:
    CurveSpec spec_;
    long radius_ = 0;
    int n_ = 0;
    std::vector<Rational> a_;  // numeric a_0..a_n
    long ncols_ = 0;
    std::vector<std::vector<Rational>> rows_;  // reduced echelon rows
    std::vector<long> pivot_col_;              // pivot column of rows_[r]
    long quotient_dim_ = 0;

    long col_dt(long e) const;
    long col_u_dt(long e) const;
    long col_du(long e) const;
    std::vector<Rational> assemble(const WindowForm& form) const;
    void insert_row(std::vector<Rational> row);
};

}  // namespace hca
