#include "hca/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace hca {

long HalfGridSeries::sat_add(long a, long b) {
    if (a >= kExact2 || b >= kExact2) {
        long s = std::min(a, kExact2) + std::min(b, kExact2);
        return std::min(s, kExact2);
    }
    return std::min(a + b, kExact2);
}

HalfGridSeries HalfGridSeries::zero(long trunc2) {
    HalfGridSeries s;
    s.trunc2_ = trunc2;
    return s;
}

HalfGridSeries HalfGridSeries::term2(long e2, ParamPoly coeff) {
    HalfGridSeries s;
    if (!coeff.is_zero()) s.coeffs_.emplace(e2, std::move(coeff));
    return s;
}

ParamPoly HalfGridSeries::coeff2(long e2) const {
    if (e2 >= trunc2_)
        throw std::out_of_range("series coefficient above truncation order");
    auto it = coeffs_.find(e2);
    return it == coeffs_.end() ? ParamPoly() : it->second;
}

void HalfGridSeries::set_coeff2(long e2, ParamPoly c) {
    if (e2 >= trunc2_)
        throw std::out_of_range("series coefficient above truncation order");
    if (c.is_zero())
        coeffs_.erase(e2);
    else
        coeffs_[e2] = std::move(c);
}

void HalfGridSeries::add_term(long e2, const ParamPoly& c) {
    if (c.is_zero() || e2 >= trunc2_) return;
    auto [it, fresh] = coeffs_.emplace(e2, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void HalfGridSeries::drop_unknown() {
    coeffs_.erase(coeffs_.lower_bound(trunc2_), coeffs_.end());
}

HalfGridSeries HalfGridSeries::operator-() const {
    HalfGridSeries out = *this;
    for (auto& [e, c] : out.coeffs_) c = -c;
    return out;
}

HalfGridSeries& HalfGridSeries::operator+=(const HalfGridSeries& o) {
    trunc2_ = std::min(trunc2_, o.trunc2_);
    drop_unknown();
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

HalfGridSeries& HalfGridSeries::operator-=(const HalfGridSeries& o) {
    trunc2_ = std::min(trunc2_, o.trunc2_);
    drop_unknown();
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
}

HalfGridSeries& HalfGridSeries::operator*=(const HalfGridSeries& o) {
    // Known below min(ord_a + val_b, ord_b + val_a).
    long t = std::min(sat_add(trunc2_, o.min_exp2()), sat_add(o.trunc2_, min_exp2()));
    HalfGridSeries out = zero(t);
    for (const auto& [ea, ca] : coeffs_)
        for (const auto& [eb, cb] : o.coeffs_) {
            if (ea + eb >= t) continue;
            out.add_term(ea + eb, ca * cb);
        }
    *this = std::move(out);
    return *this;
}

HalfGridSeries& HalfGridSeries::scale(const ParamPoly& s) {
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::map<long, ParamPoly> out;
    for (const auto& [e, c] : coeffs_) {
        ParamPoly p = c * s;
        if (!p.is_zero()) out.emplace(e, std::move(p));
    }
    coeffs_ = std::move(out);
    return *this;
}

HalfGridSeries HalfGridSeries::shifted2(long d2) const {
    HalfGridSeries out = zero(sat_add(trunc2_, d2));
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + d2, c);
    return out;
}

HalfGridSeries HalfGridSeries::truncated2(long trunc2) const {
    HalfGridSeries out = *this;
    out.trunc2_ = std::min(out.trunc2_, trunc2);
    out.drop_unknown();
    return out;
}

HalfGridSeries HalfGridSeries::integrated() const {
    HalfGridSeries out = zero(sat_add(trunc2_, 2));
    for (const auto& [e2, c] : coeffs_) {
        if (e2 == -2)
            throw std::domain_error("cannot integrate a z^-1 term");
        // z^e -> z^{e+1}/(e+1)
        out.coeffs_.emplace(e2 + 2, c / Rational(e2 + 2, 2));
    }
    return out;
}

HalfGridSeries HalfGridSeries::differentiated() const {
    long t = trunc2_ == kExact2 ? kExact2 : trunc2_ - 2;
    HalfGridSeries out = zero(t);
    for (const auto& [e2, c] : coeffs_) {
        if (e2 == 0) continue;
        out.add_term(e2 - 2, c * Rational(e2, 2));
    }
    return out;
}

HalfGridSeries HalfGridSeries::sqrt_newton() const {
    if (min_exp2() != 0 || coeff2(0) != ParamPoly(1))
        throw std::domain_error("series square root requires constant term 1");
    if (trunc2_ == kExact2)
        throw std::invalid_argument("series square root requires a finite truncation order");
    // Newton for r = a^{-1/2}:  r <- r*(3 - a*r^2)/2, truncated throughout;
    // the valid order doubles each step, so the fixpoint arrives quickly.
    HalfGridSeries r = one().truncated2(trunc2_);
    const HalfGridSeries three = term_int(0, ParamPoly(3)).truncated2(trunc2_);
    for (int guard = 0;; ++guard) {
        HalfGridSeries next = r;
        HalfGridSeries corr = three - (*this * r * r);
        next = (r * corr).truncated2(trunc2_);
        next.scale(Rational(1, 2));
        if (next.coeffs_ == r.coeffs_) break;
        r = std::move(next);
        if (guard > 128)
            throw std::runtime_error("series inverse square root failed to converge");
    }
    return (*this * r).truncated2(trunc2_);
}

bool HalfGridSeries::agree(const HalfGridSeries& a, const HalfGridSeries& b, long bound2) {
    long t = std::min({a.trunc2_, b.trunc2_, bound2});
    for (const auto& [e, c] : a.coeffs_) {
        if (e >= t) break;
        auto it = b.coeffs_.find(e);
        if (it == b.coeffs_.end() || it->second != c) return false;
    }
    for (const auto& [e, c] : b.coeffs_) {
        if (e >= t) break;
        if (a.coeffs_.find(e) == a.coeffs_.end()) return false;
    }
    return true;
}

std::string HalfGridSeries::to_string(const std::string& var) const {
    std::string out;
    bool first = true;
    for (const auto& [e2, c] : coeffs_) {
        std::string cs = c.to_factor_string();
        std::string body;
        if (e2 == 0)
            body = cs;
        else {
            std::string ep = (e2 % 2 == 0) ? std::to_string(e2 / 2)
                                           : std::to_string(e2) + "/2";
            std::string zp = var + (ep == "1" ? "" : "^" + ep);
            body = (cs == "1") ? zp : cs + "*" + zp;
        }
        out += first ? body : " + " + body;
        first = false;
    }
    if (first) out = "0";
    if (trunc2_ != kExact2) {
        std::string ep = (trunc2_ % 2 == 0) ? std::to_string(trunc2_ / 2)
                                            : std::to_string(trunc2_) + "/2";
        out += " + O(" + var + "^" + ep + ")";
    }
    return out;
}

}  // namespace hca
