#pragma once

#include "polyalg/coeff_poly.hpp"

#include <stdexcept>
#include <string_view>

namespace polyalg {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses a polynomial expression over the rationals:
///
///   expr  := term (('+'|'-') term)*
///   term  := unary (('*'|'/') unary)*
///   unary := ('+'|'-') unary | power
///   power := atom ('^' ['-'] integer)?
///   atom  := integer | identifier | '(' expr ')'
///
/// Division is only allowed by a single term (a rational or a monomial), so
/// the result stays a Laurent polynomial. Accepts everything CoeffPoly::str()
/// emits.
CoeffPoly parse_coeff_poly(std::string_view text);

}  // namespace polyalg
