#pragma once

#include "polyalg/algebra_spec.hpp"
#include "polyalg/nc_element.hpp"

#include <vector>

namespace polyalg {

class RewriteSystem;

enum class TableKind { Quantum, Casimir };  // x/y or xbar/ybar boundary data

/// x_{i,j}, y_{i,j} for 1 <= j <= jmax, 0 <= i <= j; zero elsewhere.
class XYTable {
public:
  XYTable(int jmax, TableKind kind, const CoeffPoly &beta, const CoeffPoly &delta);
  const CoeffPoly &x(int i, int j) const;
  const CoeffPoly &y(int i, int j) const;
  int jmax() const { return jmax_; }
  TableKind kind() const { return kind_; }

private:
  int jmax_;
  TableKind kind_;
  std::vector<std::vector<CoeffPoly>> x_, y_;  // [j][i]
};

inline XYTable xy_tables(int jmax, TableKind kind, const CoeffPoly &beta, const CoeffPoly &delta) {
  return XYTable(jmax, kind, beta, delta);
}

/// Everything derived from (beta, delta) up to depth jmax:
///   [A^j, B] = sum_k s^(j)_k {A^k, C},  j <= jmax
///   A^i B A^j - A^j B A^i = sum_k W^{i,j}_k {A^k, C},  i + j <= jmax
class RecurrenceTables {
public:
  RecurrenceTables(const CoeffPoly &beta, const CoeffPoly &delta, int jmax);

  int jmax() const { return jmax_; }
  const XYTable &xy() const { return xy_; }
  const XYTable &xybar() const { return bar_; }

  /// s^(j)_k, zero for k outside 0..j-1.
  const CoeffPoly &s(int j, int k) const;
  const std::vector<CoeffPoly> &s(int j) const { return s_.at(j); }
  /// Coefficients of P(m', l) = A^m' C A^l + A^l C A^m' in the {A^m, C}, m = 0..m'+l.
  std::vector<CoeffPoly> T(int mp, int l) const;
  /// W^{i,j}_k for k = 0..i+j-1.
  std::vector<CoeffPoly> W(int i, int j) const;

private:
  int jmax_;
  XYTable xy_, bar_;
  std::vector<std::vector<CoeffPoly>> s_;  // s_[j][k], s_[0] empty
};

struct Closure {
  CoeffPoly eta;
  std::vector<CoeffPoly> omega;  // omega_1..omega_L
};

/// omega_i = -sum_{k=i+1}^{L+1} alpha_k s^(k)_i for i = 0..L, eta = 2 omega_0.
Closure close_algebra(const AlgebraSpec &spec);
/// Copy of spec with eta and omega replaced by the closure values.
AlgebraSpec closed(const AlgebraSpec &spec);

struct ClassicalClosure {
  CoeffPoly eta, rho;
  std::vector<CoeffPoly> omega;
};
ClassicalClosure classical_close(const AlgebraSpec &spec);
AlgebraSpec classical_closed(const AlgebraSpec &spec);

/// Quantum:   K = C^2 + sum 1/2 m_i {A^i,B} + n/2 {A,B^2} + sum k_i A^i + l1 B + l2 B^2
/// Classical: K = C^2 + sum m_i A^i B + n A B^2 + sum k_i A^i + l1 B + l2 B^2
struct CasimirCoeffs {
  bool quantum = true;
  std::vector<CoeffPoly> m;  // m_1..m_{L+1}
  CoeffPoly n, l1, l2;
  std::vector<CoeffPoly> k;  // k_1..k_{M+1}
  std::vector<CoeffPoly> H;  // H_0..H_M (quantum only)
};

struct CasimirOptions {
  // Adds the G_k = sum alpha_i s^(i)_k term to the [B,K] system. That term is
  // already contained in the anticommutator that vanishes by the Jacobi
  // constraint, so including it breaks centrality; kept for regression tests.
  bool include_G = false;
  // Use the three-branch Z_k form instead of the plain double sum.
  bool piecewise_Z = false;
};

/// spec must be closed (eta, omega from close_algebra or given).
CasimirCoeffs quantum_casimir(const AlgebraSpec &spec, const CasimirOptions &opt = {});
CasimirCoeffs classical_casimir(const AlgebraSpec &spec);

/// K as an ordered element, built with the rules of rw.
NCElement casimir_element(const CasimirCoeffs &cas, const RewriteSystem &rw);

}  // namespace polyalg
