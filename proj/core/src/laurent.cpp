#include "hca/laurent.hpp"

#include <stdexcept>

namespace hca {

LaurentPoly LaurentPoly::term(long exp, ParamPoly coeff) {
    LaurentPoly p;
    if (!coeff.is_zero()) p.terms_.emplace(exp, std::move(coeff));
    return p;
}

ParamPoly LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? ParamPoly() : it->second;
}

long LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::invalid_argument("zero Laurent polynomial has no support");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::invalid_argument("zero Laurent polynomial has no support");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(long exp, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(exp, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) out.add_term(ea + eb, ca * cb);
    *this = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::scale(const ParamPoly& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    std::map<long, ParamPoly> out;
    for (const auto& [e, c] : terms_) {
        ParamPoly p = c * s;
        if (!p.is_zero()) out.emplace(e, std::move(p));
    }
    terms_ = std::move(out);
    return *this;
}

LaurentPoly LaurentPoly::shifted(long d) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + d, c);
    return out;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // descending exponent
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.to_factor_string();
        bool neg = false;
        if (!cs.empty() && cs[0] == '-' && cs.find('(') == std::string::npos) {
            neg = true;
            cs = cs.substr(1);
        }
        std::string body;
        if (e == 0)
            body = cs;
        else {
            std::string tp = var + (e == 1 ? "" : "^" + std::to_string(e));
            body = (cs == "1") ? tp : cs + "*" + tp;
        }
        if (first) {
            out += (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

}  // namespace hca
