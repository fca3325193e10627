#include "hca/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace hca {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        std::string out = msg + "\n  " + text + "\n  " + std::string(at, ' ') + "^";
        throw std::invalid_argument(out);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    // The tensor sign (UTF-8 e2 8a 97) doubles as '@'.
    bool accept_tensor() {
        skip_ws();
        if (pos < text.size() && text[pos] == '@') {
            ++pos;
            return true;
        }
        if (pos + 2 < text.size() && static_cast<unsigned char>(text[pos]) == 0xe2 &&
            static_cast<unsigned char>(text[pos + 1]) == 0x8a &&
            static_cast<unsigned char>(text[pos + 2]) == 0x97) {
            pos += 3;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected a number", pos);
        return text.substr(start, pos - start);
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) ||
                                  text[pos] == '_'))
            ++pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        if (start == pos) fail("expected an identifier", pos);
        return text.substr(start, pos - start);
    }
};

struct ExprParser {
    Lexer lex;
    const CurveSpec* spec;  // null while parsing the curve itself
    bool allow_u;

    ExprParser(const std::string& text, const CurveSpec* s, bool u)
        : lex(text), spec(s), allow_u(u) {}

    RingElement mul(const RingElement& a, const RingElement& b) {
        if (!a.odd.is_zero() && !b.odd.is_zero()) {
            if (!spec) lex.fail("u*u needs a curve to reduce against", lex.pos);
            return ring_mul(a, b, *spec);
        }
        RingElement out;
        out.even = a.even * b.even;
        out.odd = a.even * b.odd + a.odd * b.even;
        return out;
    }

    static std::optional<Rational> as_rational(const RingElement& v) {
        if (!v.odd.is_zero()) return std::nullopt;
        if (v.even.is_zero()) return Rational(0);
        if (v.even.terms().size() != 1) return std::nullopt;
        const auto& [e, c] = *v.even.terms().begin();
        if (e != 0 || !c.is_constant()) return std::nullopt;
        return c.constant_value();
    }

    RingElement parse() {
        RingElement v = expr();
        if (!lex.eof()) lex.fail("trailing input", lex.pos);
        return v;
    }

    RingElement expr() {
        RingElement v = term();
        for (;;) {
            if (lex.accept('+'))
                v += term();
            else if (lex.accept('-'))
                v -= term();
            else
                return v;
        }
    }

    RingElement term() {
        RingElement v = factor();
        for (;;) {
            if (lex.accept('*')) {
                v = mul(v, factor());
            } else if (lex.accept('/')) {
                std::size_t at = lex.pos;
                RingElement rhs = factor();
                auto r = as_rational(rhs);
                if (!r) lex.fail("division only by rational constants", at);
                if (r->is_zero()) lex.fail("division by zero", at);
                ParamPoly inv{Rational(1) / *r};
                v.even.scale(inv);
                v.odd.scale(inv);
            } else {
                return v;
            }
        }
    }

    RingElement factor() {
        if (lex.accept('-')) {
            RingElement v = factor();
            return -v;
        }
        if (lex.accept('+')) return factor();
        RingElement v = atom();
        while (lex.peek() == '^') {
            lex.accept('^');
            bool neg = lex.accept('-');
            std::size_t at = lex.pos;
            long e = std::stol(lex.number());
            if (neg) {
                // Negative powers only on t or constants.
                if (v == RingElement::t_pow(1)) {
                    v = RingElement::t_pow(-e);
                } else if (auto r = as_rational(v)) {
                    if (r->is_zero()) lex.fail("zero to a negative power", at);
                    v = RingElement{LaurentPoly::term(0, ParamPoly(r->pow_int(-e))), {}};
                } else {
                    lex.fail("negative exponent requires t or a constant base", at);
                }
            } else {
                RingElement r = RingElement::one();
                for (long k = 0; k < e; ++k) r = mul(r, v);
                v = std::move(r);
            }
        }
        return v;
    }

    RingElement atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.accept('(');
            RingElement v = expr();
            if (!lex.accept(')')) lex.fail("expected ')'", lex.pos);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class n(lex.number());
            return RingElement{LaurentPoly::term(0, ParamPoly(Rational(n))), {}};
        }
        std::size_t at = lex.pos;
        std::string id = lex.identifier();
        if (id == "t") return RingElement::t_pow(1);
        if (id == "u") {
            if (!allow_u) lex.fail("u is not allowed here", at);
            return RingElement::u();
        }
        return RingElement{LaurentPoly::term(0, ParamPoly::variable(id)), {}};
    }
};

}  // namespace

CurveSpec parse_curve(const std::string& text) {
    ExprParser p(text, nullptr, false);
    RingElement v = p.parse();
    if (v.even.is_zero()) throw std::invalid_argument("curve polynomial is zero");
    if (v.even.min_exp() < 0)
        throw std::invalid_argument("curve polynomial must not contain t^-1");
    long n = v.even.max_exp();
    std::vector<ParamPoly> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) coeffs.push_back(v.even.coeff(k));
    return CurveSpec::validated(std::move(coeffs));
}

ParamPoly parse_param_poly(const std::string& text) {
    ExprParser p(text, nullptr, false);
    RingElement v = p.parse();
    if (!v.odd.is_zero() || (!v.even.is_zero() && v.even.min_exp() != 0) ||
        v.even.terms().size() > 1)
        throw std::invalid_argument("expected a parameter expression without t: " + text);
    return v.even.coeff(0);
}

RingElement parse_ring_element(const std::string& text, const CurveSpec& spec) {
    ExprParser p(text, &spec, true);
    return p.parse();
}

std::pair<std::string, RingElement> parse_loop_expr(const std::string& text,
                                                    const CurveSpec& spec) {
    Lexer lex(text);
    std::string label = lex.identifier();
    if (!lex.accept_tensor()) lex.fail("expected '@' after the basis label", lex.pos);
    std::string rest = text.substr(lex.pos);
    return {label, parse_ring_element(rest, spec)};
}

MonomialForm parse_monomial_form(const std::string& text, const CurveSpec& spec) {
    // Strip the trailing "dt" token.
    std::size_t end = text.find_last_not_of(" \t");
    if (end == std::string::npos || end < 1 || text.substr(end - 1, 2) != "dt")
        throw std::invalid_argument("a 1-form must end in 'dt': " + text);
    std::string head = text.substr(0, end - 1);
    if (head.empty() || head.find_first_not_of(" \t") == std::string::npos)
        throw std::invalid_argument("missing monomial before 'dt'");
    RingElement v = parse_ring_element(head, spec);
    MonomialForm out;
    if (v.odd.is_zero() && v.even.terms().size() == 1) {
        out.exp = v.even.terms().begin()->first;
        out.with_u = false;
        out.weight = v.even.terms().begin()->second;
    } else if (v.even.is_zero() && v.odd.terms().size() == 1) {
        out.exp = v.odd.terms().begin()->first;
        out.with_u = true;
        out.weight = v.odd.terms().begin()->second;
    } else {
        throw std::invalid_argument("expected a single monomial 1-form, got: " + v.to_string());
    }
    return out;
}

std::map<std::string, Rational> parse_point(const std::string& text) {
    std::map<std::string, Rational> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected name=value in '" + item + "'");
        std::string name = item.substr(0, eq);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        if (name.empty()) throw std::invalid_argument("empty parameter name");
        out[name] = Rational::from_string(item.substr(eq + 1));
        pos = comma == std::string::npos ? text.size() : comma + 1;
    }
    return out;
}

}  // namespace hca
