#pragma once

#include "polyalg/algebra_spec.hpp"
#include "polyalg/structure.hpp"

namespace polyalg {

/// Commutative polynomials in A, B, C with the classical brackets
///   {A,B} = C
///   {A,C} = sum alpha_i A^i + delta B + eps + 2 beta A B
///   {B,C} = sum lambda_i A^i + rho B^2 + eta B + sum 2 omega_i A^i B + zeta
/// extended to all polynomials as a biderivation.
class PoissonAlgebra {
public:
  explicit PoissonAlgebra(const AlgebraSpec &spec);

  static Var A();
  static Var B();
  static Var C();

  const CoeffPoly &ac() const { return ac_; }
  const CoeffPoly &bc() const { return bc_; }

  CoeffPoly bracket(const CoeffPoly &f, const CoeffPoly &g) const;
  /// {A,{B,C}} + {B,{C,A}} + {C,{A,B}}
  CoeffPoly jacobi_residual() const;

private:
  CoeffPoly ab_, ac_, bc_;
};

/// The classical Casimir as a polynomial in A, B, C.
CoeffPoly casimir_poly(const CasimirCoeffs &cas);

}  // namespace polyalg
