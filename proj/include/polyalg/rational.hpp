#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyalg {

/// Exact rational number. Always canonical: positive denominator, reduced.
class Rational {
public:
  Rational() = default;
  Rational(long v) : q_(v) {}                       // NOLINT(implicit)
  Rational(int v) : q_(v) {}                        // NOLINT(implicit)
  Rational(long num, long den);
  explicit Rational(const mpz_class &v) : q_(v) {}
  Rational(const mpz_class &num, const mpz_class &den);
  explicit Rational(mpq_class v) : q_(std::move(v)) { q_.canonicalize(); }

  /// Parses "p", "-p", "p/q". Throws std::invalid_argument otherwise.
  static Rational parse(std::string_view text);

  const mpq_class &raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
  Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
  Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  Rational pow(unsigned e) const;
  /// Integer power allowing negative exponents; throws on 0^negative.
  Rational ipow(int e) const;
  double to_double() const { return q_.get_d(); }

  /// Canonical text: "p" when the denominator is 1, else "p/q".
  std::string str() const;

  std::size_t hash() const;

private:
  mpq_class q_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

/// floor(q) as an integer.
mpz_class floor(const Rational &q);

}  // namespace polyalg

template <> struct std::hash<polyalg::Rational> {
  std::size_t operator()(const polyalg::Rational &r) const { return r.hash(); }
};
