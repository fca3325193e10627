#include "hca/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace hca {

long default_window_radius(const CurveSpec& spec, long max_abs_exponent) {
    return std::max<long>(3 * spec.degree(), max_abs_exponent + 2 * spec.degree());
}

void WindowForm::add_dt(long e, const Rational& w) {
    auto [it, fresh] = dt.emplace(e, w);
    if (!fresh) it->second += w;
}
void WindowForm::add_u_dt(long e, const Rational& w) {
    auto [it, fresh] = u_dt.emplace(e, w);
    if (!fresh) it->second += w;
}
void WindowForm::add_du(long e, const Rational& w) {
    auto [it, fresh] = du.emplace(e, w);
    if (!fresh) it->second += w;
}

KaehlerOracle::KaehlerOracle(const CurveSpec& spec, const ReductionWindow& window)
    : spec_(spec.instantiated(window.point)), radius_(window.radius), n_(spec.degree()) {
    if (radius_ < 3 * n_)
        throw std::invalid_argument("reduction window radius must be at least 3n");
    a_.reserve(static_cast<std::size_t>(n_) + 1);
    for (long k = 0; k <= n_; ++k) a_.push_back(spec_.a(k).constant_value());
    const long N = radius_;
    ncols_ = 4 * N + n_ + 2;

    // Exact forms d(t^m), m != 0: a single dt coordinate each.
    for (long m = -N + 1; m <= N + 1; ++m) {
        if (m == 0) continue;
        std::vector<Rational> row(static_cast<std::size_t>(ncols_), Rational(0));
        row[static_cast<std::size_t>(col_dt(m - 1))] = Rational(m);
        insert_row(std::move(row));
    }
    // Exact forms d(t^m u) = m t^{m-1} u dt + t^m du.
    for (long m = -N + 1; m <= N + 1; ++m) {
        WindowForm f;
        if (m != 0) f.add_u_dt(m - 1, Rational(m));
        f.add_du(m, Rational(1));
        insert_row(assemble(f));
    }
    quotient_dim_ = ncols_ - static_cast<long>(rows_.size());
}

// Column layout: every omega coordinate sits at the very end so that
// elimination pivots land on the non-basis coordinates first.
//   [dt exponents except -1] [u dt exponents except -n..-1] [du 0..n-1]
//   [dt -1 = omega0] [u dt -1 = omega1] ... [u dt -n = omega n]
long KaehlerOracle::col_dt(long e) const {
    const long N = radius_;
    if (e < -N || e > N)
        throw std::domain_error("dt exponent " + std::to_string(e) +
                                " outside reduction window; increase the window radius");
    if (e == -1) return 4 * N + 1;
    return e < -1 ? e + N : e + N - 1;
}

long KaehlerOracle::col_u_dt(long e) const {
    const long N = radius_;
    if (e < -N || e > N)
        throw std::domain_error("u dt exponent " + std::to_string(e) +
                                " outside reduction window; increase the window radius");
    if (e >= -n_ && e <= -1) return 4 * N + 1 - e;  // omega_{-e}
    return e < -n_ ? 2 * N + (e + N) : 2 * N + (e + N - n_);
}

long KaehlerOracle::col_du(long e) const { return 4 * radius_ - n_ + 1 + e; }

std::vector<Rational> KaehlerOracle::assemble(const WindowForm& form) const {
    std::vector<Rational> v(static_cast<std::size_t>(ncols_), Rational(0));
    for (const auto& [e, w] : form.dt) v[static_cast<std::size_t>(col_dt(e))] += w;
    for (const auto& [e, w] : form.u_dt) v[static_cast<std::size_t>(col_u_dt(e))] += w;
    std::map<long, Rational> du(form.du);
    // p du = (p'/2) u dt lifts t^m du with m < 0 upward ...
    while (!du.empty() && du.begin()->first < 0) {
        const long m = du.begin()->first;
        const Rational w = du.begin()->second;
        du.erase(du.begin());
        if (w.is_zero()) continue;
        for (long k = 1; k <= n_; ++k) {
            if (a_[static_cast<std::size_t>(k)].is_zero()) continue;
            Rational c = w * a_[static_cast<std::size_t>(k)] * Rational(k, 2) / a_[0];
            v[static_cast<std::size_t>(col_u_dt(m + k - 1))] += c;
        }
        for (long j = 1; j <= n_; ++j) {
            if (a_[static_cast<std::size_t>(j)].is_zero()) continue;
            du[m + j] -= w * a_[static_cast<std::size_t>(j)] / a_[0];
        }
    }
    // ... and t^m du with m >= n downward, into deg < n.
    while (!du.empty() && du.rbegin()->first >= n_) {
        const long m = du.rbegin()->first;
        const Rational w = du.rbegin()->second;
        du.erase(std::prev(du.end()));
        if (w.is_zero()) continue;
        for (long k = 1; k <= n_; ++k) {
            if (a_[static_cast<std::size_t>(k)].is_zero()) continue;
            Rational c = w * a_[static_cast<std::size_t>(k)] * Rational(k, 2);
            v[static_cast<std::size_t>(col_u_dt(m - n_ + k - 1))] += c;
        }
        for (long j = 0; j <= n_ - 1; ++j) {
            if (a_[static_cast<std::size_t>(j)].is_zero()) continue;
            du[m - n_ + j] -= w * a_[static_cast<std::size_t>(j)];
        }
    }
    for (const auto& [e, w] : du)
        if (!w.is_zero()) v[static_cast<std::size_t>(col_du(e))] += w;
    return v;
}

void KaehlerOracle::insert_row(std::vector<Rational> row) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = row[static_cast<std::size_t>(pivot_col_[r])];
        if (c.is_zero()) continue;
        const Rational f = c;
        for (std::size_t k = 0; k < row.size(); ++k)
            if (!rows_[r][k].is_zero()) row[k] -= f * rows_[r][k];
    }
    long pivot = -1;
    for (std::size_t k = 0; k < row.size(); ++k)
        if (!row[k].is_zero()) {
            pivot = static_cast<long>(k);
            break;
        }
    if (pivot < 0) return;  // dependent
    const Rational lead = row[static_cast<std::size_t>(pivot)];
    for (auto& x : row) x /= lead;
    // keep the stored system fully reduced
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational c = rows_[r][static_cast<std::size_t>(pivot)];
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < row.size(); ++k)
            if (!row[k].is_zero()) rows_[r][k] -= c * row[k];
    }
    rows_.push_back(std::move(row));
    pivot_col_.push_back(pivot);
}

CentralVector KaehlerOracle::reduce(const WindowForm& form) const {
    std::vector<Rational> v = assemble(form);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational c = v[static_cast<std::size_t>(pivot_col_[r])];
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!rows_[r][k].is_zero()) v[k] -= c * rows_[r][k];
    }
    const long omega0 = 4 * radius_ + 1;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero() && static_cast<long>(k) < omega0)
            throw std::domain_error(
                "reduction left residue outside the basis block; increase the window radius");
    CentralVector out(n_);
    out.omega(0) = ParamPoly(v[static_cast<std::size_t>(omega0)]);
    for (int k = 1; k <= n_; ++k)
        out.omega(k) = ParamPoly(v[static_cast<std::size_t>(omega0 + k)]);
    return out;
}

CentralVector KaehlerOracle::reduce_monomial(long k, bool with_u) const {
    WindowForm f;
    if (with_u)
        f.add_u_dt(k, Rational(1));
    else
        f.add_dt(k, Rational(1));
    return reduce(f);
}

CentralVector KaehlerOracle::reduce_pairing(long i, long j, bool left_u, bool right_u,
                                            const Rational& weight) const {
    WindowForm f;
    if (!left_u && !right_u) {
        if (j != 0) f.add_dt(i + j - 1, weight * Rational(j));
    } else if (left_u && !right_u) {
        if (j != 0) f.add_u_dt(i + j - 1, weight * Rational(j));
    } else if (!left_u && right_u) {
        // t^i d(t^j u) = j t^{i+j-1} u dt + t^{i+j} du
        if (j != 0) f.add_u_dt(i + j - 1, weight * Rational(j));
        f.add_du(i + j, weight);
    } else {
        // t^i u d(t^j u) = j t^{i+j-1} p dt + (1/2) t^{i+j} p' dt
        for (long k = 0; k <= n_; ++k) {
            const Rational& ak = a_[static_cast<std::size_t>(k)];
            if (ak.is_zero()) continue;
            f.add_dt(i + j + k - 1, weight * ak * Rational(2 * j + k, 2));
        }
    }
    return reduce(f);
}

}  // namespace hca
