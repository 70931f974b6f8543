#pragma once

#include "polyalg/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polyalg {

/// Interned parameter name. Two Vars are equal iff their names are equal;
/// ordering is lexicographic on the name.
class Var {
public:
  explicit Var(std::string_view name);
  const std::string &name() const { return *p_; }
  friend bool operator==(Var a, Var b) { return a.p_ == b.p_; }
  friend std::strong_ordering operator<=>(Var a, Var b) {
    if (a.p_ == b.p_) return std::strong_ordering::equal;
    int c = a.p_->compare(*b.p_);
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

private:
  const std::string *p_;
};

/// Product of parameter powers. Exponents may be negative (Laurent
/// monomials); zero exponents are never stored. Factors are sorted by name.
class Monomial {
public:
  using Factor = std::pair<Var, int>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);  // normalizes
  static Monomial of(Var v, int e = 1);

  const std::vector<Factor> &factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  int total_degree() const;
  int exponent(Var v) const;
  bool nonnegative() const;

  Monomial operator*(const Monomial &o) const;
  Monomial operator/(const Monomial &o) const;
  Monomial pow(int e) const;
  /// Componentwise minimum / maximum of exponents over the union of variables.
  static Monomial gcd(const Monomial &a, const Monomial &b);
  /// True when every exponent of `o` is <= the matching exponent here.
  bool divisible_by(const Monomial &o) const;
  Monomial without(Var v) const;

  friend bool operator==(const Monomial &a, const Monomial &b) = default;
  /// Graded lexicographic order with variables ordered by name.
  friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b);

  std::string str() const;

private:
  std::vector<Factor> f_;
};

/// Sparse multivariate (Laurent) polynomial over the rationals in named
/// parameters. Terms are kept in descending graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality.
class CoeffPoly {
public:
  using Term = std::pair<Monomial, Rational>;

  CoeffPoly() = default;
  CoeffPoly(const Rational &c);  // NOLINT(implicit)
  CoeffPoly(long c) : CoeffPoly(Rational(c)) {}  // NOLINT(implicit)
  CoeffPoly(int c) : CoeffPoly(Rational(c)) {}   // NOLINT(implicit)
  CoeffPoly(const Monomial &m, const Rational &c);
  static CoeffPoly var(std::string_view name, int e = 1);
  static CoeffPoly from_terms(std::vector<Term> terms);  // sorts and combines
  /// Parses the textual form produced by str() (and ordinary arithmetic
  /// expressions). See expr_parser.hpp.
  static CoeffPoly parse(std::string_view text);

  const std::vector<Term> &terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
  /// The value of a constant polynomial; throws if not constant.
  Rational constant_value() const;
  /// The coefficient of the monomial 1 (zero if absent).
  Rational constant_term() const;
  const Term &leading_term() const { return t_.front(); }
  bool is_monomial() const { return t_.size() == 1; }

  CoeffPoly operator-() const;
  CoeffPoly &operator+=(const CoeffPoly &o);
  CoeffPoly &operator-=(const CoeffPoly &o);
  CoeffPoly &operator*=(const CoeffPoly &o);
  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly &b) { return a += b; }
  friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly &b) { return a -= b; }
  friend CoeffPoly operator*(const CoeffPoly &a, const CoeffPoly &b);
  CoeffPoly scaled(const Rational &c) const;
  CoeffPoly times_monomial(const Monomial &m) const;
  CoeffPoly pow(unsigned e) const;

  /// Divides by a single term (a unit of the Laurent ring); throws if `d` is
  /// not a single nonzero term.
  CoeffPoly divided_by_term(const CoeffPoly &d) const;

  friend bool operator==(const CoeffPoly &a, const CoeffPoly &b) = default;

  std::set<Var> vars() const;
  bool contains(Var v) const;
  int degree(Var v) const;      // max exponent (0 if absent)
  int min_degree(Var v) const;  // min exponent (0 if absent)
  int total_degree() const;
  /// Collects coefficients of powers of `v`: result[e] is free of `v`.
  std::map<int, CoeffPoly> collect(Var v) const;
  /// Substitutes polynomials for variables. Negative exponents require the
  /// substituted value to be a single term.
  CoeffPoly substitute(const std::map<Var, CoeffPoly> &values) const;
  CoeffPoly substitute(Var v, const CoeffPoly &value) const;
  /// Evaluates with every variable assigned; throws if any is missing.
  Rational evaluate(const std::map<Var, Rational> &values) const;
  CoeffPoly derivative(Var v) const;
  /// Monomial with the minimum exponent of every variable across terms.
  Monomial min_monomial() const;

  /// Canonical text, e.g. "-a1 + 1/2*a3*d^2". Deterministic.
  std::string str() const;

private:
  void normalize();
  std::vector<Term> t_;
};

std::ostream &operator<<(std::ostream &os, const CoeffPoly &p);

}  // namespace polyalg
