#include "hca/coeffs.hpp"

#include <stdexcept>

namespace hca {

CoeffTables::CoeffTables(CurveSpec spec) : spec_(std::move(spec)) {
    const int n = spec_.degree();
    a0_numeric_ = spec_.a(0).is_constant();
    a0_ = a0_numeric_ ? spec_.a(0).constant_value() : Rational(0);
    p_memo_.assign(static_cast<std::size_t>(n), {});
    q_memo_.assign(static_cast<std::size_t>(n), {});
    // Seed the initial data: P_{k,i} = delta_{k,i} on -n <= k <= -1 and
    // Q_{m,i} = delta_{m,-i} on 1 <= m <= n.
    for (long i = -n; i <= -1; ++i) {
        auto& pcol = p_memo_[column(i)];
        pcol.resize(static_cast<std::size_t>(n));
        pcol[static_cast<std::size_t>(i + n)] = ParamPoly(1);
        auto& qcol = q_memo_[column(i)];
        qcol.resize(static_cast<std::size_t>(n));
        qcol[static_cast<std::size_t>(-i - 1)] = ParamPoly(1);
    }
}

std::size_t CoeffTables::column(long i) const {
    const int n = spec_.degree();
    if (i < -n || i > -1)
        throw std::invalid_argument("coefficient family index i must lie in [-n,-1]");
    return static_cast<std::size_t>(i + n);
}

const ParamPoly& CoeffTables::p(long k, long i) const {
    const long n = spec_.degree();
    if (k < -n) throw std::invalid_argument("P table index k must be >= -n");
    auto& col = p_memo_[column(i)];
    while (static_cast<long>(col.size()) <= k + n) {
        const long next = static_cast<long>(col.size()) - n;  // >= 0
        // (2k+n+2) P_k = -sum_j (3j+2k-2n+2) a_j P_{k-n+j}
        ParamPoly sum;
        for (long j = 0; j <= n - 1; ++j) {
            const ParamPoly& aj = spec_.a(j);
            if (aj.is_zero()) continue;
            const ParamPoly& prev = col[static_cast<std::size_t>(next + j)];
            if (prev.is_zero()) continue;
            sum += prev * aj * Rational(3 * j + 2 * next - 2 * n + 2);
        }
        sum /= Rational(-(2 * next + n + 2));
        col.push_back(std::move(sum));
    }
    return col[static_cast<std::size_t>(k + n)];
}

const ParamPoly& CoeffTables::q(long m, long i) const {
    const long n = spec_.degree();
    if (m < 1) throw std::invalid_argument("Q table index m must be >= 1");
    if (m > n && !a0_numeric_)  // the seed rows never divide by a_0
        throw std::invalid_argument("Q-family requires numeric a_0");
    auto& col = q_memo_[column(i)];
    while (static_cast<long>(col.size()) < m) {
        const long next = static_cast<long>(col.size()) + 1;  // >= n+1
        // -2(m-1) a_0 Q_m = -sum_{j>=1} (3j-2m+2) a_j Q_{m-j}
        ParamPoly sum;
        for (long j = 1; j <= n; ++j) {
            const ParamPoly& aj = spec_.a(j);
            if (aj.is_zero()) continue;
            const ParamPoly& prev = col[static_cast<std::size_t>(next - j - 1)];
            if (prev.is_zero()) continue;
            sum += prev * aj * Rational(3 * j - 2 * next + 2);
        }
        sum /= Rational(2 * (next - 1)) * a0_;
        col.push_back(std::move(sum));
    }
    return col[static_cast<std::size_t>(m - 1)];
}

HalfGridSeries p_series(const CoeffTables& tables, long i, long order) {
    const long n = tables.degree();
    HalfGridSeries out = HalfGridSeries::zero(2 * order);
    for (long m = 0; m < order; ++m) out.set_coeff2(2 * m, tables.p(m - n, i));
    return out;
}

HalfGridSeries q_series(const CoeffTables& tables, long i, long order) {
    const long n = tables.degree();
    HalfGridSeries out = HalfGridSeries::zero(2 * order);
    for (long m = n + 1; m < order; ++m) out.set_coeff2(2 * m, tables.q(m - n, i));
    return out;
}

}  // namespace hca
