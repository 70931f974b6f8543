#pragma once

#include "polyalg/coeff_poly.hpp"

#include <optional>

namespace polyalg {

/// Exact quotient a/b in the Laurent ring, or nullopt when b does not divide
/// a. Throws on b == 0.
std::optional<CoeffPoly> exact_divide(const CoeffPoly &a, const CoeffPoly &b);

/// Like exact_divide but throws std::logic_error when the division leaves a
/// remainder.
CoeffPoly divide_exact(const CoeffPoly &a, const CoeffPoly &b);

/// Greatest common divisor in the Laurent ring Q[x1^±,...]. Units (rational
/// multiples of monomials) are normalized away: the result has no monomial
/// factor and its leading term has coefficient 1. gcd(0, 0) = 0.
CoeffPoly gcd(const CoeffPoly &a, const CoeffPoly &b);

/// Greatest common divisor treating every variable except `units` as a true
/// polynomial variable: powers of non-unit variables shared by both inputs
/// are kept. Used for polynomials in N with Laurent parameter coefficients.
CoeffPoly gcd_keeping(const CoeffPoly &a, const CoeffPoly &b, Var polynomial_var);

/// Rational multiple of a monomial that makes the leading term of p equal
/// to 1 with no monomial content; p divided by unit_part(p) is the
/// normalized associate.
CoeffPoly unit_part(const CoeffPoly &p);

/// Pseudo-remainder of p by q with respect to x.
CoeffPoly pseudo_remainder(const CoeffPoly &p, const CoeffPoly &q, Var x);

}  // namespace polyalg
