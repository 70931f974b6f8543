#pragma once

#include "polyalg/algebra_spec.hpp"
#include "polyalg/osc.hpp"
#include "polyalg/structure.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyalg {

struct ZeroDenominator : std::domain_error {
  using std::domain_error::domain_error;
};
struct SingularSystem : std::domain_error {
  using std::domain_error::domain_error;
};
struct NonIntegrable : std::domain_error {
  using std::domain_error::domain_error;
};

enum class Branch { BetaZero, BetaNonzero };

/// A symbolic beta counts as nonzero.
Branch branch_of(const CoeffPoly &beta);

/// Square root of a monomial with a square coefficient (d^2 -> d); throws
/// std::invalid_argument otherwise.
CoeffPoly sqrt_exact(const CoeffPoly &p);

/// Quantum: (Delta A)^2 = delta + beta (A(N) + A(N+1)).  Classical: A'^2 = delta + 2 beta A.
NPoly build_AN(const CoeffPoly &beta, const CoeffPoly &delta, const CoeffPoly &c1, OscMode mode);

/// b(N) = -(sum alpha_i A^i + eps) / (delta + 2 beta A), both modes.
NRatFn build_bN(const AlgebraSpec &spec, const NPoly &A);

/// eta DA + sum omega_i DA (A^i + A(N+1)^i) + sum alpha_i (A(N+1)^i - A^i)
NRatFn jacobi_residual_realized(const AlgebraSpec &spec, const NPoly &A);

/// Constraint identities of the quantum realization, each residual
/// (left minus right side) in the order qsolcAB1, qsolcAB2, jacobireal,
/// qeq3c1, qeq3c2, qcasimirc1, qcasimirc2.
std::vector<std::pair<std::string, NRatFn>> quantum_constraint_residuals(const AlgebraSpec &spec, const NPoly &A,
                                                                          const NRatFn &b);

/// Coefficients of the two Psi equations
///   e1: a11 Psi(N) + a12 Psi(N+1) = r1     (the [B,C] constraint)
///   e2: a21 Psi(N) + a22 Psi(N+1) = u - r2  (K with no ladder terms)
/// with Psi(N) = rho(N-1)^2 Phi(N).
struct PsiSystem {
  NRatFn a11, a12, r1, a21, a22, r2;
};
PsiSystem psi_system(const AlgebraSpec &spec, const CasimirCoeffs &cas, const NPoly &A, const NRatFn &b);

struct StructureSolution {
  NRatFn psi;       // Psi(N)
  NRatFn psi_next;  // Psi(N+1) from the same solve
  NRatFn shift_residual;  // psi_next - psi(N+1)
  bool shift_consistent = false;
  NRatFn phi;  // Psi(N) / rho(N-1)^2
};

/// Solves the 2x2 system for Psi(N), Psi(N+1) with K replaced by u.
/// Throws SingularSystem when the determinant vanishes identically.
StructureSolution solve_structure_function(const AlgebraSpec &spec, const CasimirCoeffs &cas, const NPoly &A,
                                           const NRatFn &b, const NRatFn &rho2, const CoeffPoly &u);

/// beta = 0 only: Psi from the [B,C] difference equation alone,
/// Psi(N) = psi0 + sum_{n<N} r1(n) / (2 DA).
NRatFn telescope_structure_function(const AlgebraSpec &spec, const NPoly &A, const NRatFn &b, const CoeffPoly &psi0);

/// rho(N)^2 making Psi(N) / rho(N-1)^2 a polynomial: rho(N-1)^2 = 1/den(Psi)(N).
NRatFn polynomialize(const NRatFn &psi);

/// Antiderivative of f when f is a polynomial or P(N)/(N+c)^k without a
/// 1/(N+c) term; NonIntegrable otherwise. Constant of integration 0.
NRatFn integrate(const NRatFn &f);

/// (A'^2 H)' = A' (sum lambda_i A^i + A' b' b + beta b^2 + zeta), H = 2 rho^2 G,
/// G = (integral + g0) / (2 rho^2 A'^2).
NRatFn classical_G(const AlgebraSpec &spec, const NPoly &A, const NRatFn &b, const NRatFn &rho2, const CoeffPoly &g0);

struct QuantumRealization {
  NPoly A;
  NRatFn b, rho2, psi, phi;
  CoeffPoly c1, u;
  Branch branch = Branch::BetaZero;
  StructureSolution solution;
};

struct ClassicalRealization {
  NPoly A;
  NRatFn b, rho2, G, phi;
  CoeffPoly c1, g0;
  Branch branch = Branch::BetaZero;
};

struct RealizeOptions {
  CoeffPoly c1 = CoeffPoly::var("c1");
  CoeffPoly u = CoeffPoly::var("u");
  CoeffPoly g0;  // classical integration constant
  NRatFn rho2 = NRatFn(1);
  bool polynomialize = false;
};

/// spec closed; cas from quantum_casimir.
QuantumRealization realize_quantum(const AlgebraSpec &spec, const CasimirCoeffs &cas, const RealizeOptions &opt = {});
/// spec classically closed.
ClassicalRealization realize_classical(const AlgebraSpec &spec, const RealizeOptions &opt = {});

struct Check {
  std::string name;
  bool passed = false;
  std::string residual;  // "0" when passed
};

struct VerificationReport {
  std::vector<Check> checks;
  std::string casimir_value;  // the N-free value of K, if it is one
  bool all_passed() const;
  const Check *find(const std::string &name) const;
};

/// Oscillator elements of the realization, in the gauge b~ = rho(N) b where
/// b~^dag b~ = Psi(N); returns {A, B, C}.
std::vector<OscElement> quantum_generators(const QuantumRealization &r);
std::vector<OscElement> classical_generators(const ClassicalRealization &r);

VerificationReport verify_realization(const QuantumRealization &r, const AlgebraSpec &spec, const CasimirCoeffs &cas);
VerificationReport verify_realization(const ClassicalRealization &r, const AlgebraSpec &spec,
                                      const CasimirCoeffs &cas);

}  // namespace polyalg
