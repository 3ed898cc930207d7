#ifndef ARCH_PARSER_HPP
#define ARCH_PARSER_HPP

#include "arch/field.hpp"

#include <string>

namespace arch {

/// Parses an entry expression: integer and rational literals, the symbol t
/// (Qt backend only), operators + - * / ^ with integer exponents, and
/// parentheses.  Whitespace is insignificant.
FieldElement parse_entry(const std::string& text, Backend backend);

/// Canonical spelling of an entry: reduced fractions, denominator lowest
/// coefficient 1, terms in increasing exponent order.  Re-parses to the
/// identical element.
std::string entry_to_string(const FieldElement& a);

std::string poly_to_string(const Poly& p);

} // namespace arch

#endif
