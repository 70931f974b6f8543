#include "polyalg/rational.hpp"

#include <ostream>

namespace polyalg {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_.canonicalize();
}

Rational::Rational(const mpz_class &num, const mpz_class &den) : q_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_.canonicalize();
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("not a rational literal: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto valid_int = [](const std::string &t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw bad();
    return Rational(mpz_class(strip_plus(s)));
  }
  std::string n = s.substr(0, slash), d = s.substr(slash + 1);
  if (!valid_int(n) || !valid_int(d) || d[0] == '-' || d[0] == '+') throw bad();
  mpz_class den(d);
  if (den == 0) throw bad();
  return Rational(mpz_class(strip_plus(n)), den);
}

Rational Rational::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
  return Rational(n, d);
}

Rational Rational::ipow(int e) const {
  if (e >= 0) return pow(static_cast<unsigned>(e));
  if (is_zero()) throw std::domain_error("Rational: zero to a negative power");
  return Rational(1) / pow(static_cast<unsigned>(-e));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::size_t Rational::hash() const {
  std::size_t h = std::hash<std::string>{}(q_.get_num().get_str(16));
  h ^= std::hash<std::string>{}(q_.get_den().get_str(16)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

mpz_class floor(const Rational &q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
  return r;
}

}  // namespace polyalg
