#pragma once

#include "polyalg/coeff_poly.hpp"

#include <string>
#include <vector>

namespace polyalg {

/// Structure constants of the three-generator polynomial algebra of order M:
///
///   [A,B] = C
///   [A,C] = sum_{i=1}^{L+1} alpha_i A^i + delta B + epsilon + beta {A,B}
///   [B,C] = sum_{i=1}^{M} lambda_i A^i - beta B^2 + eta B
///           + sum_{i=1}^{L} omega_i {A^i,B} + zeta
///
/// with L = floor(M/2). The classical (Poisson) version uses 2 beta AB in the
/// second relation and rho B^2 + 2 omega_i A^i B in the third.
///
/// Parameter aliases: a<i> = alpha_i, b = beta, d = sqrt(delta) (delta is
/// always written d^2), e = epsilon, z = zeta, l<i> = lambda_i, eta, w<i> =
/// omega_i, rho. N is reserved for the oscillator number operator.
struct AlgebraSpec {
  int M = 1;
  std::vector<CoeffPoly> alpha;   // alpha_1 .. alpha_{L+1}
  CoeffPoly beta, delta, epsilon, zeta;
  std::vector<CoeffPoly> lambda;  // lambda_1 .. lambda_M
  CoeffPoly eta;
  std::vector<CoeffPoly> omega;   // omega_1 .. omega_L
  CoeffPoly rho;                  // classical B^2 coefficient
  std::string family = "general";

  int L() const { return M / 2; }
  const CoeffPoly &a(int i) const;  // alpha_i, zero outside 1..L+1
  const CoeffPoly &l(int i) const;  // lambda_i with lambda_0 = zeta
  /// omega_i with omega_0 = eta/2.
  CoeffPoly w(int i) const;

  /// Every constant a free symbol, eta/omega/rho still unknown.
  static AlgebraSpec symbolic(int M);
  /// alpha = beta = epsilon = 0, hence eta = omega = 0.
  static AlgebraSpec cartesian(int M);
  /// Only alpha_1, alpha_2 nonzero (M = 2 or 3).
  static AlgebraSpec polar(int M);
  static AlgebraSpec family_named(const std::string &name, int M);

  /// Throws std::invalid_argument when list lengths disagree with M.
  void validate() const;
};

}  // namespace polyalg
