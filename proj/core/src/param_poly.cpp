#include "hca/param_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hca {

ParamPoly::ParamPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

ParamPoly ParamPoly::variable(const std::string& name) {
    return monomial(Rational(1), name, 1);
}

ParamPoly ParamPoly::monomial(const Rational& coeff, const std::string& name, std::uint32_t exp) {
    if (name.empty()) throw std::invalid_argument("parameter name must be nonempty");
    ParamPoly p;
    if (coeff.is_zero()) return p;
    if (exp == 0) return ParamPoly(coeff);
    p.names_ = {name};
    p.terms_.emplace(Exponents{exp}, coeff);
    return p;
}

Rational ParamPoly::constant_value() const {
    if (!is_constant()) throw std::invalid_argument("polynomial is not constant");
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

long ParamPoly::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long t = 0;
        for (auto x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

std::vector<std::string> ParamPoly::merged_names(const ParamPoly& a, const ParamPoly& b) {
    std::vector<std::string> out;
    std::set_union(a.names_.begin(), a.names_.end(), b.names_.begin(), b.names_.end(),
                   std::back_inserter(out));
    return out;
}

ParamPoly ParamPoly::remapped(const std::vector<std::string>& new_names) const {
    ParamPoly out;
    out.names_ = new_names;
    std::vector<std::size_t> pos(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        auto it = std::lower_bound(new_names.begin(), new_names.end(), names_[i]);
        pos[i] = static_cast<std::size_t>(it - new_names.begin());
    }
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_names.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

void ParamPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    if (names_.empty()) return;
    std::vector<bool> used(names_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (used[i]) kept.push_back(names_[i]);
    std::map<Exponents, Rational> nt;
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(kept.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        nt.emplace(std::move(ne), c);
    }
    names_ = std::move(kept);
    terms_ = std::move(nt);
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    if (names_ != o.names_) {
        auto names = merged_names(*this, o);
        ParamPoly a = remapped(names), b = o.remapped(names);
        a += b;
        *this = std::move(a);
        return *this;
    }
    for (const auto& [e, c] : o.terms_) {
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) it->second += c;
    }
    prune();
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) { return *this += -o; }

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
    if (names_ != o.names_) {
        auto names = merged_names(*this, o);
        ParamPoly a = remapped(names), b = o.remapped(names);
        a *= b;
        *this = std::move(a);
        return *this;
    }
    std::map<Exponents, Rational> out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            Rational c = ca * cb;
            auto [it, fresh] = out.emplace(std::move(e), c);
            if (!fresh) it->second += c;
        }
    }
    terms_ = std::move(out);
    prune();
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        names_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

ParamPoly& ParamPoly::operator/=(const Rational& s) {
    if (s.is_zero()) throw std::domain_error("polynomial division by zero scalar");
    for (auto& [e, c] : terms_) c /= s;
    return *this;
}

ParamPoly ParamPoly::pow(std::uint32_t k) const {
    ParamPoly r(Rational(1));
    for (std::uint32_t i = 0; i < k; ++i) r *= *this;
    return r;
}

ParamPoly ParamPoly::derivative(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return ParamPoly();
    std::size_t pos = static_cast<std::size_t>(it - names_.begin());
    ParamPoly out;
    out.names_ = names_;
    for (const auto& [e, c] : terms_) {
        if (e[pos] == 0) continue;
        Exponents ne = e;
        ne[pos] -= 1;
        out.terms_.emplace(std::move(ne), c * Rational(static_cast<long>(e[pos])));
    }
    out.prune();
    return out;
}

Rational ParamPoly::eval(const std::map<std::string, Rational>& point) const {
    std::vector<const Rational*> vals(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        auto it = point.find(names_[i]);
        if (it == point.end())
            throw std::invalid_argument("unbound parameter '" + names_[i] + "'");
        vals[i] = &it->second;
    }
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= vals[i]->pow_int(e[i]);
        sum += t;
    }
    return sum;
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    // (total degree desc, exponent vector desc)
    std::vector<const std::pair<const Exponents, Rational>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    auto tot = [](const Exponents& e) {
        long s = 0;
        for (auto x : e) s += x;
        return s;
    };
    std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        long ta = tot(a->first), tb = tot(b->first);
        if (ta != tb) return ta > tb;
        return a->first > b->first;
    });
    std::string out;
    bool first = true;
    for (auto* t : order) {
        const Rational& c = t->second;
        Rational a = c.abs();
        std::string mon;
        for (std::size_t i = 0; i < t->first.size(); ++i) {
            if (t->first[i] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += names_[i];
            if (t->first[i] > 1) mon += "^" + std::to_string(t->first[i]);
        }
        std::string body;
        if (mon.empty())
            body = a.to_string();
        else if (a == Rational(1))
            body = mon;
        else
            body = a.to_string() + "*" + mon;
        if (first) {
            out += (c.sign() < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += (c.sign() < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

std::string ParamPoly::to_factor_string() const {
    std::string s = to_string();
    return terms_.size() <= 1 ? s : "(" + s + ")";
}

}  // namespace hca
