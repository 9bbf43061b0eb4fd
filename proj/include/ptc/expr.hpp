#pragma once

#include <string>

#include "ptc/graded.hpp"

namespace ptc {

// Parses "3*x*y - 1/2*z^2 + t1" over the given generators. Terms are
// separated by +/-; a term is an optional rational coefficient followed by
// *-separated factors `name` or `name^k`. Identifiers use letters, digits,
// `_` and `'`. Whitespace is ignored. "0" and "1" parse to the zero
// polynomial and the unit. Throws ParseError on malformed input or unknown
// generator names.
GradedPoly parse_expression(const std::string& text, const GeneratorList& gens);

// Canonical rendering: terms in monomial order, explicit `*` between
// factors, `^k` for exponents, unit coefficients omitted. Zero prints "0".
std::string print_poly(const GradedPoly& p, const GeneratorList& gens);

bool valid_identifier(const std::string& s);

}  // namespace ptc
