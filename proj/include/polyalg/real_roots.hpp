#pragma once

#include "polyalg/coeff_poly.hpp"

#include <string>
#include <vector>

namespace polyalg {

/// Dense univariate polynomial with rational coefficients, c[i] * x^i.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> c);
  /// Reads a CoeffPoly in the single variable x; throws if any other
  /// variable or a negative power appears.
  static UPoly from_coeff_poly(const CoeffPoly &p, Var x);
  CoeffPoly to_coeff_poly(Var x) const;

  const std::vector<Rational> &coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational &leading() const { return c_.back(); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly &a, const UPoly &b);
  friend UPoly operator-(const UPoly &a, const UPoly &b) { return a + (-b); }
  friend UPoly operator*(const UPoly &a, const UPoly &b);
  friend bool operator==(const UPoly &a, const UPoly &b) = default;
  UPoly scaled(const Rational &k) const;

  /// Euclidean division; throws on a zero divisor.
  static void divmod(const UPoly &a, const UPoly &b, UPoly &q, UPoly &r);
  static UPoly gcd(const UPoly &a, const UPoly &b);  // monic, gcd(0,0)=0
  UPoly monic() const;
  UPoly derivative() const;
  Rational eval(const Rational &x) const;
  int sign_at(const Rational &x) const { return eval(x).sign(); }

  /// Integer coefficients with content 1 and positive leading coefficient.
  UPoly primitive() const;

  std::string str(const std::string &var = "x") const;

private:
  void trim();
  std::vector<Rational> c_;
};

/// Yun square-free decomposition: p = lc * prod f_i^i, f_i square-free,
/// pairwise coprime. Entry i-1 holds f_i (possibly 1).
std::vector<UPoly> squarefree_decomposition(const UPoly &p);

struct RealRoot {
  Rational lo, hi;          // root lies in [lo, hi]; lo == hi when exact
  bool exact = false;       // rational root, value lo
  int multiplicity = 1;
  // Certificate: signs of the square-free factor at the interval ends
  // (opposite for an isolating interval, 0 at an exact root).
  int sign_lo = 0, sign_hi = 0;

  Rational midpoint() const { return (lo + hi) / Rational(2); }
};

/// Default isolation width, 10^-12.
Rational default_precision();

/// Every real root of p (p != 0), isolated by Sturm sequences in a rational
/// interval of width <= precision, sorted increasing. Rational roots are
/// found and reported exactly. Throws std::invalid_argument for p == 0.
std::vector<RealRoot> real_roots(const UPoly &p, const Rational &precision = default_precision());

/// Number of distinct real roots of the square-free polynomial p in (a, b].
int sturm_count(const std::vector<UPoly> &sturm, const Rational &a, const Rational &b);
std::vector<UPoly> sturm_sequence(const UPoly &p);

/// The rational with the smallest denominator in [lo, hi].
Rational simplest_rational(const Rational &lo, const Rational &hi);

}  // namespace polyalg
