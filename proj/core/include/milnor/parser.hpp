#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "milnor/polynomial.hpp"

namespace milnor {

/// Grammar (whitespace insensitive):
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := number 'i'? | 'i' | variable | '(' expr ')'
///   variable:= 'z' integer | 'z{' integer '}'
///   number  := digits ('.' digits)? (('e' | 'E') ('+' | '-')? digits)?
///
/// Numbers are read exactly ("0.25" is 1/4). Division is only allowed by a
/// nonzero constant, so "(1/2)*z1^3" is fine but "z1/z2" is rejected.
/// The resulting polynomial has max(min_vars, largest variable index) variables.
Polynomial parse_polynomial(std::string_view text, std::size_t min_vars = 0);

/// Parses several expressions into a common variable count.
std::vector<Polynomial> parse_polynomials(const std::vector<std::string>& texts, std::size_t min_vars = 0);

/// A constant expression such as "1/2", "0.7071-0.5i" or "(1+i)/3".
GaussianRational parse_constant(std::string_view text);

/// Comma-separated complex literals, e.g. "0.7071+0i,0.7071+0i".
ComplexVector parse_point(std::string_view text);

}  // namespace milnor
