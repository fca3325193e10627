#pragma once

#include <map>
#include <optional>
#include <string>

#include "hca/curve.hpp"
#include "hca/ring.hpp"

namespace hca {

// Parsers for the CLI surface. Expressions use +, -, *, /, ^ and
// parentheses over integer/rational literals, the ring generators t and u,
// and identifiers as curve parameters; '/' divides by rational constants
// only, exponents are integers (negative only on t and constants).
// Throws std::invalid_argument with a caret diagnostic on bad input.

// "t^6 - 2*b*t^3 + 1" -> validated curve (u not allowed).
CurveSpec parse_curve(const std::string& text);

// Pure parameter expression, e.g. "(32*c^2 - 5)/35" (no t, no u).
ParamPoly parse_param_poly(const std::string& text);

// "(3/2)*t^-2 + b*t^3*u" over the given curve (u^2 collapses to p).
RingElement parse_ring_element(const std::string& text, const CurveSpec& spec);

// "e@t^2*u" (a tensor sign is accepted for '@'): basis label + ring factor.
std::pair<std::string, RingElement> parse_loop_expr(const std::string& text,
                                                    const CurveSpec& spec);

// Monomial 1-form "t^3*u dt" / "t^-1 dt" / "u dt".
struct MonomialForm {
    long exp = 0;
    bool with_u = false;
    ParamPoly weight;  // usually 1
};
MonomialForm parse_monomial_form(const std::string& text, const CurveSpec& spec);

// "b=2,c=-1/3" -> instantiation point.
std::map<std::string, Rational> parse_point(const std::string& text);

}  // namespace hca
