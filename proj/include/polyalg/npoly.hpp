#pragma once

#include "polyalg/coeff_poly.hpp"

#include <string>
#include <vector>

namespace polyalg {

/// Name of the oscillator number symbol. Reserved: never use it as a
/// structure parameter.
inline const char *const kNumberSymbol = "N";
Var number_var();

/// Polynomial in N with CoeffPoly coefficients, dense, c[i] multiplies N^i.
class NPoly {
public:
  NPoly() = default;
  NPoly(const CoeffPoly &c);  // NOLINT(implicit)
  NPoly(const Rational &c) : NPoly(CoeffPoly(c)) {}  // NOLINT(implicit)
  NPoly(long c) : NPoly(CoeffPoly(c)) {}  // NOLINT(implicit)
  NPoly(int c) : NPoly(CoeffPoly(c)) {}   // NOLINT(implicit)
  explicit NPoly(std::vector<CoeffPoly> coeffs);
  static NPoly N();
  /// Reads N out of a CoeffPoly; throws on negative powers of N.
  static NPoly from_coeff_poly(const CoeffPoly &p);
  static NPoly parse(std::string_view text) { return from_coeff_poly(CoeffPoly::parse(text)); }

  const std::vector<CoeffPoly> &coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const CoeffPoly &coeff(int i) const;
  const CoeffPoly &leading() const { return c_.back(); }

  NPoly operator-() const;
  NPoly &operator+=(const NPoly &o);
  NPoly &operator-=(const NPoly &o);
  NPoly &operator*=(const NPoly &o) { return *this = *this * o; }
  friend NPoly operator+(NPoly a, const NPoly &b) { return a += b; }
  friend NPoly operator-(NPoly a, const NPoly &b) { return a -= b; }
  friend NPoly operator*(const NPoly &a, const NPoly &b);
  NPoly scaled(const CoeffPoly &c) const;
  NPoly pow(unsigned e) const;

  friend bool operator==(const NPoly &a, const NPoly &b) = default;

  /// f(N + k).
  NPoly shift(int k) const { return translate(CoeffPoly(k)); }
  NPoly translate(const CoeffPoly &k) const;
  NPoly difference() const { return shift(1) - *this; }
  NPoly derivative() const;
  /// Zero integration constant.
  NPoly antiderivative() const;
  /// F with F(N+1) - F(N) = f and F(0) = 0.
  NPoly antidifference() const;

  CoeffPoly eval(const CoeffPoly &at) const;
  /// Composition f(g(N)).
  NPoly compose(const NPoly &g) const;
  NPoly substitute(const std::map<Var, CoeffPoly> &values) const;

  CoeffPoly to_coeff_poly() const;
  std::string str() const { return to_coeff_poly().str(); }

private:
  void trim();
  std::vector<CoeffPoly> c_;
};

/// Rational function num/den in N over the parameters. Kept reduced:
/// gcd(num, den) = 1 up to units of the Laurent parameter ring, and den is
/// made monic in N whenever its leading coefficient is a single term;
/// otherwise den has no monomial content and leading rational coefficient 1.
class NRatFn {
public:
  NRatFn() : den_(1) {}
  NRatFn(const NPoly &p) : num_(p), den_(1) {}  // NOLINT(implicit)
  NRatFn(const CoeffPoly &c) : NRatFn(NPoly(c)) {}  // NOLINT(implicit)
  NRatFn(const Rational &c) : NRatFn(NPoly(c)) {}   // NOLINT(implicit)
  NRatFn(long c) : NRatFn(NPoly(c)) {}  // NOLINT(implicit)
  NRatFn(int c) : NRatFn(NPoly(c)) {}   // NOLINT(implicit)
  /// Throws std::domain_error on a zero denominator.
  NRatFn(const NPoly &num, const NPoly &den);

  const NPoly &num() const { return num_; }
  const NPoly &den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Free of N (a pure parameter fraction).
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// The polynomial when the denominator is free of N.
  NPoly as_polynomial() const;

  NRatFn operator-() const;
  friend NRatFn operator+(const NRatFn &a, const NRatFn &b);
  friend NRatFn operator-(const NRatFn &a, const NRatFn &b) { return a + (-b); }
  friend NRatFn operator*(const NRatFn &a, const NRatFn &b);
  friend NRatFn operator/(const NRatFn &a, const NRatFn &b);
  NRatFn &operator+=(const NRatFn &o) { return *this = *this + o; }
  NRatFn &operator-=(const NRatFn &o) { return *this = *this - o; }
  NRatFn &operator*=(const NRatFn &o) { return *this = *this * o; }
  NRatFn &operator/=(const NRatFn &o) { return *this = *this / o; }
  NRatFn pow(unsigned e) const;

  friend bool operator==(const NRatFn &a, const NRatFn &b);

  NRatFn shift(int k) const { return translate(CoeffPoly(k)); }
  NRatFn translate(const CoeffPoly &k) const;
  NRatFn difference() const { return shift(1) - *this; }
  NRatFn derivative() const;
  NRatFn substitute(const std::map<Var, CoeffPoly> &values) const;
  /// Value at N = at, still a parameter fraction.
  NRatFn eval(const CoeffPoly &at) const;

  std::string str() const;

private:
  void reduce();
  NPoly num_, den_;
};

std::ostream &operator<<(std::ostream &os, const NPoly &p);
std::ostream &operator<<(std::ostream &os, const NRatFn &f);

}  // namespace polyalg
