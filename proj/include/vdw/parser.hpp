#pragma once

#include "vdw/poly.hpp"

#include <span>
#include <string>
#include <string_view>

namespace vdw {

/// Parse an arithmetic expression over the named variables into canonical
/// expanded form.
///
/// Grammar: integer literals (arbitrary precision), identifiers, binary
/// + - * /, exponentiation ^ by a nonnegative integer literal, unary signs
/// and parentheses. Division requires a nonzero constant divisor, which is
/// how rational coefficients like 3/4 enter. Whitespace is ignored.
///
/// Throws ParseError with the byte position for syntax errors, unknown
/// variable names and negative exponents.
Poly parse_poly(std::string_view text, std::span<const std::string> variables);

}  // namespace vdw
