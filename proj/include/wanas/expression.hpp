#ifndef WANAS_EXPRESSION_HPP
#define WANAS_EXPRESSION_HPP

#include <map>
#include <string>
#include <string_view>

#include "wanas/polynomial.hpp"

namespace wanas {

/// Named polynomials usable inside expressions, e.g. {"a1": (alpha-beta-gamma)/2}.
using SymbolTable = std::map<std::string, Polynomial, std::less<>>;

/// Parses an arithmetic expression over the variable universe.
///
/// Grammar: sums, differences, products with an explicit '*', division by a
/// nonzero constant, non-negative integer powers with '^', parentheses and
/// unary signs. Numbers are integers; "3/2" is read as a division. Any
/// identifier outside the universe must be listed in `symbols`.
Polynomial parse_expression(std::string_view text, const SymbolTable& symbols = {});

/// Parses "lhs = rhs" or "lhs != rhs" into (lhs - rhs, is_equation).
std::pair<Polynomial, bool> parse_condition(std::string_view text,
                                            const SymbolTable& symbols = {});

/// Parses "name=p/q,name=p/q" into an assignment. Unknown names and decimal
/// values are rejected.
Assignment parse_assignment(std::string_view text);

}  // namespace wanas

#endif  // WANAS_EXPRESSION_HPP
