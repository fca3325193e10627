#include "hca/reduce.hpp"

#include <stdexcept>

namespace hca {

CentralVector reduce_even_even(long i, long j, const CurveSpec& spec) {
    CentralVector out(spec.degree());
    if (i + j == 0 && j != 0) out.omega(0) = ParamPoly(Rational(j));
    return out;
}

CentralVector reduce_odd_odd(long i, long j, const CurveSpec& spec) {
    CentralVector out(spec.degree());
    const long k = -(i + j);
    if (k < 0 || k > spec.degree()) return out;
    // (j + k/2) a_k
    out.omega(0) = spec.a(k) * Rational(2 * j + k, 2);
    return out;
}

CentralVector reduce_odd_even(long i, long j, const CoeffTables& tables) {
    const int n = tables.degree();
    CentralVector out(n);
    if (j == 0) return out;
    if (i + j >= -n + 1) {
        for (int k = 1; k <= n; ++k)
            out.omega(k) = tables.p(i + j - 1, -k) * Rational(j);
    } else {
        for (int k = 1; k <= n; ++k)
            out.omega(k) = tables.q(-i - j + 1, -k) * Rational(j);
    }
    return out;
}

CentralVector reduce_even_odd(long i, long j, const CoeffTables& tables) {
    return -reduce_odd_even(j, i, tables);
}

CentralVector cocycle(const RingElement& f, const RingElement& g, const CoeffTables& tables) {
    CentralVector out(tables.degree());
    for (const auto& pairing : derivative_pairings(f, g)) {
        CentralVector part;
        if (!pairing.left_u && !pairing.right_u)
            part = reduce_even_even(pairing.i, pairing.j, tables.spec());
        else if (pairing.left_u && pairing.right_u)
            part = reduce_odd_odd(pairing.i, pairing.j, tables.spec());
        else if (pairing.left_u)
            part = reduce_odd_even(pairing.i, pairing.j, tables);
        else
            part = reduce_even_odd(pairing.i, pairing.j, tables);
        part.scale(pairing.weight);
        out += part;
    }
    return out;
}

RewriteStep rewrite_step(long m, const CurveSpec& spec, long i) {
    if (m < 2) throw std::invalid_argument("rewrite relation needs m >= 2");
    const long n = spec.degree();
    const long lead = (m + 1) * n + i * m;
    if (lead == 0)
        throw std::domain_error("rewrite leading scalar (m+1)n + i m vanishes");
    RewriteStep out;
    out.lead_exponent = n + i - 1;
    for (long j = 0; j <= n - 1; ++j) {
        const ParamPoly& aj = spec.a(j);
        if (aj.is_zero()) continue;
        ParamPoly c = aj * Rational(-((m + 1) * j + m * i), lead);
        if (!c.is_zero()) out.terms.emplace_back(i + j - 1, std::move(c));
    }
    return out;
}

}  // namespace hca
