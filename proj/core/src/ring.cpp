#include "hca/ring.hpp"

namespace hca {

RingElement& RingElement::operator+=(const RingElement& o) {
    even += o.even;
    odd += o.odd;
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    even -= o.even;
    odd -= o.odd;
    return *this;
}

RingElement& RingElement::scale(const ParamPoly& s) {
    even.scale(s);
    odd.scale(s);
    return *this;
}

std::string RingElement::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (!even.is_zero()) out += even.to_string();
    if (!odd.is_zero()) {
        std::string os;
        for (const auto& [e, c] : odd.terms()) {
            std::string cs = c.to_factor_string();
            std::string mono = (e == 0) ? "u" : "t^" + std::to_string(e) + "*u";
            if (e == 1) mono = "t*u";
            std::string body = (cs == "1") ? mono : cs + "*" + mono;
            if (cs == "-1") body = "-" + mono;
            os += os.empty() ? body : " + " + body;
        }
        out += out.empty() ? os : " + " + os;
    }
    return out;
}

RingElement ring_mul(const RingElement& x, const RingElement& y, const CurveSpec& spec) {
    RingElement out;
    out.even = x.even * y.even + x.odd * y.odd * spec.p();
    out.odd = x.even * y.odd + x.odd * y.even;
    return out;
}

std::vector<MonomialPairing> derivative_pairings(const RingElement& f, const RingElement& g) {
    std::vector<MonomialPairing> out;
    auto emit = [&out](const LaurentPoly& lhs, bool lu, const LaurentPoly& rhs, bool ru) {
        for (const auto& [i, ci] : lhs.terms())
            for (const auto& [j, cj] : rhs.terms())
                out.push_back({i, j, lu, ru, ci * cj});
    };
    emit(f.even, false, g.even, false);
    emit(f.even, false, g.odd, true);
    emit(f.odd, true, g.even, false);
    emit(f.odd, true, g.odd, true);
    return out;
}

}  // namespace hca
