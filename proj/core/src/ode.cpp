#include "hca/ode.hpp"

namespace hca {

OdeData build_ode_data(long i, const CoeffTables& tables) {
    const CurveSpec& spec = tables.spec();
    const long n = spec.degree();
    OdeData out;
    for (long j = 0; j <= n; ++j) {
        out.p_bar += HalfGridSeries::term_int(n - j, spec.a(j));
        out.p_low += HalfGridSeries::term_int(j, spec.a(j));
    }
    out.q_even = out.p_bar.differentiated().shifted2(2) +
                 HalfGridSeries::term_int(0, ParamPoly(n - 2)) * out.p_bar;
    out.q_odd = out.p_low.differentiated().shifted2(2) +
                HalfGridSeries::term_int(0, ParamPoly(2 * (n + 1))) * out.p_low;

    for (long j = 0; j <= n; ++j) {
        const ParamPoly& aj = spec.a(j);
        if (aj.is_zero()) continue;
        for (long k = -j; k < 0; ++k) {
            const ParamPoly& pk = tables.p(k - n + j, i);
            if (pk.is_zero()) continue;
            out.r += HalfGridSeries::term_int(n + k, pk * aj * Rational(3 * j + 2 * k - 2 * n + 2));
        }
    }
    for (long m = 1; m <= n; ++m) {
        for (long j = 0; j <= m - 1; ++j) {
            const ParamPoly& aj = spec.a(j);
            if (aj.is_zero()) continue;
            const ParamPoly& qm = tables.q(m - j, i);
            if (qm.is_zero()) continue;
            out.s -= HalfGridSeries::term_int(m + n, qm * aj * Rational(3 * j - 2 * m + 2));
        }
    }
    return out;
}

HalfGridSeries ode_residual_p(long i, long order, const CoeffTables& tables) {
    OdeData d = build_ode_data(i, tables);
    HalfGridSeries pi = p_series(tables, i, order);
    HalfGridSeries lhs = d.p_bar * pi.differentiated().shifted2(2);
    lhs.scale(Rational(2));
    return lhs - d.q_even * pi - d.r;
}

HalfGridSeries ode_residual_q(long i, long order, const CoeffTables& tables) {
    OdeData d = build_ode_data(i, tables);
    HalfGridSeries qi = q_series(tables, i, order);
    HalfGridSeries lhs = d.p_low * qi.differentiated().shifted2(2);
    lhs.scale(Rational(2));
    return lhs - d.q_odd * qi - d.s;
}

}  // namespace hca
