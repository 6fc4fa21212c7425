#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nakai/monomial_order.hpp"
#include "nakai/polynomial.hpp"

namespace nakai {

/// Expression text together with the ordered variable names it is read over.
struct PolySource {
  std::string text;
  std::vector<std::string> variables;
};

/// Parses
///
///   expr   := [sign] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := rational | ident | '(' expr ')'
///
/// Multiplication must be written out: "2x" and "x y" are syntax errors.
/// Throws ParseError (with byte position) on bad syntax, unknown identifiers
/// and negative exponents.
Polynomial parse_poly(const PolySource& src);
Polynomial parse_poly(std::string_view text, std::span<const std::string> variables);

/// Terms in descending `order`, e.g. "x^2 - 3/2*x*y + 1". The zero polynomial is "0".
std::string format_poly(const Polynomial& p, std::span<const std::string> variables,
                        const MonomialOrder& order = MonomialOrder::grevlex());

/// x1, ..., xn
std::vector<std::string> indexed_variables(std::size_t n, std::string_view stem = "x");

/// Identifiers occurring in the given texts, in natural-sort order (x2 < x10).
std::vector<std::string> infer_variables(std::span<const std::string> texts);

/// Splits "x, y ,z" into names and checks they are distinct identifiers.
std::vector<std::string> parse_variable_list(std::string_view list);

}  // namespace nakai
