#pragma once

#include "polyalg/coeff_poly.hpp"

#include <stdexcept>

namespace polyalg {

struct ZeroResultant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Determinant of the Sylvester matrix of p and q in x, with the deg_x(q)
/// rows of p on top. Sign convention: res(x - y, x + y, x) = 2y.
/// Computed by fraction-free (Bareiss) elimination. Both inputs must be
/// polynomial (no negative powers) in x with positive degree.
CoeffPoly resultant(const CoeffPoly &p, const CoeffPoly &q, Var x);

/// Resultant that refuses an identically zero answer: throws ZeroResultant
/// (p and q share a factor involving x).
CoeffPoly eliminate(const CoeffPoly &p, const CoeffPoly &q, Var x);

/// First subresultant S_1 = s1 * x + s0 of p, q in x (requires
/// min(deg p, deg q) >= 1). At a common root where s1 != 0 the shared root is
/// x = -s0/s1. Returned as the pair (s1, s0).
std::pair<CoeffPoly, CoeffPoly> first_subresultant(const CoeffPoly &p, const CoeffPoly &q, Var x);

}  // namespace polyalg
