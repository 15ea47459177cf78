#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "blowup/derivation.hpp"
#include "blowup/polynomial.hpp"

namespace blowup {

/// Grammar (whitespace free):
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*        '/' only by nonzero constants
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' (N | '(' N ')'))?        N a nonnegative integer
///   atom   := number | variable | 'd/d'variable | '(' expr ')'
/// Variables may carry trailing primes (x'). A value built from d/dv tokens
/// is a derivation; polynomial coefficients may multiply it on either side.
/// Errors are ParseError with 1-based positions, counted from `line` and `column`.
using Expression = std::variant<Polynomial, Derivation>;

Expression parse_expression(std::string_view text, const RingPtr& ring, std::size_t line = 1, std::size_t column = 1);
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line = 1, std::size_t column = 1);
Derivation parse_derivation(std::string_view text, const RingPtr& ring, std::size_t line = 1, std::size_t column = 1);

/// `(f, g, ...)` or a bare comma separated list; `(0)` and `()` give no generators.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring, std::size_t line = 1,
                                              std::size_t column = 1);
std::vector<Derivation> parse_derivation_list(std::string_view text, const RingPtr& ring, std::size_t line = 1,
                                              std::size_t column = 1);

/// `(x^2, y^3, z^(15/2))`: variables with positive rational exponents.
std::vector<std::pair<std::string, Rational>> parse_center(std::string_view text, const RingPtr& ring,
                                                           std::size_t line = 1, std::size_t column = 1);

/// `(0, 1/2, -1)` with one entry per variable, or `origin`.
Point parse_point(std::string_view text, const RingPtr& ring, std::size_t line = 1, std::size_t column = 1);

/// Variable names: a letter or '_', then letters, digits or '_', then primes.
bool is_identifier(std::string_view name);

}  // namespace blowup
