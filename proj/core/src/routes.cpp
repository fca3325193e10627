#include "hca/routes.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hca/bell.hpp"
#include "hca/ode.hpp"

namespace hca {

Rational sqrt_deriv_at_one(int l) {
    Rational sign = (l % 2 == 0) ? Rational(-1) : Rational(1);
    return sign * Rational(double_factorial(2L * l - 3), mpz_class(1) << l);
}

Rational pow_neg_3_2_deriv_at_one(int l) {
    Rational sign = (l % 2 == 0) ? Rational(1) : Rational(-1);
    return sign * Rational(double_factorial(2L * l + 1), mpz_class(1) << l);
}

HalfGridSeries faa_series(const std::function<Rational(int)>& outer_derivs,
                          const HalfGridSeries& inner, long order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    if (inner.truncation2() < 2 * order)
        throw std::invalid_argument("inner series is not known to the requested order");
    const int ord = static_cast<int>(order);
    // args[j-1] = g^(j)(0) = j! [z^j] g
    std::vector<ParamPoly> args(static_cast<std::size_t>(ord));
    for (const auto& [e2, c] : inner.coeffs()) {
        if (e2 < 0 || e2 % 2 != 0)
            throw std::invalid_argument("inner series must live on the nonnegative integer grid");
        long j = e2 / 2;
        if (j >= 1 && j <= ord) args[static_cast<std::size_t>(j - 1)] = c * Rational(factorial(j));
    }
    // bell[m][l] = B_{m,l}(args); bell[0] = {1}, absent l means zero.
    std::vector<std::vector<ParamPoly>> bell(static_cast<std::size_t>(std::max(ord, 1)));
    bell[0] = {ParamPoly(1)};
    for (int m = 1; m < ord; ++m) {
        auto& row = bell[static_cast<std::size_t>(m)];
        row.assign(static_cast<std::size_t>(m) + 1, ParamPoly());
        for (int l = 1; l <= m; ++l) {
            ParamPoly sum;
            for (int j = 1; j <= m - l + 1; ++j) {
                const ParamPoly& zj = args[static_cast<std::size_t>(j - 1)];
                if (zj.is_zero()) continue;
                const ParamPoly& prev =
                    bell[static_cast<std::size_t>(m - j)][static_cast<std::size_t>(l - 1)];
                if (prev.is_zero()) continue;
                sum += zj * prev * Rational(binomial(m - 1, j - 1));
            }
            row[static_cast<std::size_t>(l)] = std::move(sum);
        }
    }
    HalfGridSeries out = HalfGridSeries::zero(2 * order);
    if (ord > 0) out.set_coeff2(0, ParamPoly(outer_derivs(0)));
    for (int m = 1; m < ord; ++m) {
        ParamPoly cm;
        for (int l = 1; l <= m; ++l) {
            const ParamPoly& b = bell[static_cast<std::size_t>(m)][static_cast<std::size_t>(l)];
            if (b.is_zero()) continue;
            cm += b * outer_derivs(l);
        }
        cm /= Rational(factorial(m));
        out.set_coeff2(2 * m, std::move(cm));
    }
    return out;
}

namespace {

// Working order with enough slack for the shifts and products below.
long working_order(long order, long n) { return order + 2 * n + 4; }

}  // namespace

HalfGridSeries integral_p_series(long i, long order, const CoeffTables& tables) {
    const long n = tables.degree();
    if (i < -n || i > -1) throw std::invalid_argument("series index i must lie in [-n,-1]");
    const long w = working_order(order, n);
    OdeData d = build_ode_data(i, tables);
    HalfGridSeries neg32 = faa_series(pow_neg_3_2_deriv_at_one, d.p_bar, w);
    HalfGridSeries integrand = (d.r * neg32).shifted2(-n);
    integrand.scale(Rational(1, 2));
    HalfGridSeries t = integrand.integrated();
    // Constant of integration, from the seed coefficients alone.
    const long e2 = -2 * i - (n + 2);
    if (e2 >= 0 && e2 % 2 == 0) {
        HalfGridSeries inv_sqrt = neg32 * d.p_bar;  // p_bar^{-1/2}
        t += HalfGridSeries::term_int(0, inv_sqrt.coeff2(e2));
    }
    HalfGridSeries sqrt_pbar = faa_series(sqrt_deriv_at_one, d.p_bar, w);
    return (sqrt_pbar * t).shifted2(n - 2).truncated2(2 * order);
}

HalfGridSeries integral_q_series(long i, long order, const CoeffTables& tables) {
    const long n = tables.degree();
    if (i < -n || i > -1) throw std::invalid_argument("series index i must lie in [-n,-1]");
    if (!tables.q_available())
        throw std::invalid_argument("Q-family requires numeric a_0");
    const Rational a0 = tables.spec().a(0).constant_value();
    const long w = working_order(order, n);
    OdeData d = build_ode_data(i, tables);
    HalfGridSeries p_tilde = d.p_low;
    p_tilde.scale(Rational(1) / a0);
    HalfGridSeries neg32 = faa_series(pow_neg_3_2_deriv_at_one, p_tilde, w);
    HalfGridSeries integrand = (d.s * neg32).shifted2(-2 * (n + 2));
    integrand.scale(Rational(1, 2) / a0);
    HalfGridSeries t = integrand.integrated();
    if (i == -1) t += HalfGridSeries::one();
    HalfGridSeries sqrt_pt = faa_series(sqrt_deriv_at_one, p_tilde, w);
    return (sqrt_pt * t).shifted2(2 * (n + 1)).truncated2(2 * order);
}

}  // namespace hca
