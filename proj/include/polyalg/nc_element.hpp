#pragma once

#include "polyalg/coeff_poly.hpp"

#include <array>
#include <map>
#include <string>

namespace polyalg {

/// Exponent triple (i, j, k) standing for the ordered monomial A^i B^j C^k.
using NCMono = std::array<int, 3>;

/// Linear combination of ordered monomials A^i B^j C^k with CoeffPoly
/// coefficients. Only arithmetic that does not need the algebra relations
/// lives here; products go through a RewriteSystem.
class NCElement {
public:
  NCElement() = default;
  NCElement(const CoeffPoly &c);  // NOLINT(implicit)  scalar multiple of 1
  NCElement(long c) : NCElement(CoeffPoly(c)) {}  // NOLINT(implicit)
  NCElement(int c) : NCElement(CoeffPoly(c)) {}   // NOLINT(implicit)
  static NCElement mono(int i, int j, int k, const CoeffPoly &c = CoeffPoly(1));
  static NCElement A(int i = 1) { return mono(i, 0, 0); }
  static NCElement B(int j = 1) { return mono(0, j, 0); }
  static NCElement C(int k = 1) { return mono(0, 0, k); }

  const std::map<NCMono, CoeffPoly> &terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  CoeffPoly coeff(int i, int j, int k) const;
  void add_term(const NCMono &m, const CoeffPoly &c);

  NCElement operator-() const;
  NCElement &operator+=(const NCElement &o);
  NCElement &operator-=(const NCElement &o);
  friend NCElement operator+(NCElement a, const NCElement &b) { return a += b; }
  friend NCElement operator-(NCElement a, const NCElement &b) { return a -= b; }
  NCElement scaled(const CoeffPoly &c) const;
  NCElement substitute(const std::map<Var, CoeffPoly> &values) const;

  friend bool operator==(const NCElement &a, const NCElement &b) = default;

  /// "(coeff)*A^i*B^j*C^k + ..." in increasing monomial order.
  std::string str() const;

private:
  std::map<NCMono, CoeffPoly> t_;
};

std::string mono_str(const NCMono &m);

}  // namespace polyalg
