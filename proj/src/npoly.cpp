#include "polyalg/npoly.hpp"

#include "polyalg/poly_gcd.hpp"

#include <ostream>
#include <stdexcept>

namespace polyalg {

Var number_var() {
  static const Var v(kNumberSymbol);
  return v;
}

NPoly::NPoly(const CoeffPoly &c) {
  if (!c.is_zero()) {
    if (c.contains(number_var())) throw std::invalid_argument("NPoly: coefficient contains N");
    c_.push_back(c);
  }
}

NPoly::NPoly(std::vector<CoeffPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

NPoly NPoly::N() { return NPoly(std::vector<CoeffPoly>{CoeffPoly(), CoeffPoly(1)}); }

NPoly NPoly::from_coeff_poly(const CoeffPoly &p) {
  std::vector<CoeffPoly> c;
  for (auto &[e, part] : p.collect(number_var())) {
    if (e < 0) throw std::invalid_argument("negative power of N in " + p.str());
    if (c.size() <= static_cast<std::size_t>(e)) c.resize(e + 1);
    c[e] = part;
  }
  return NPoly(std::move(c));
}

void NPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const CoeffPoly &NPoly::coeff(int i) const {
  static const CoeffPoly zero;
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

NPoly NPoly::operator-() const {
  NPoly r = *this;
  for (auto &c : r.c_) c = -c;
  return r;
}

NPoly &NPoly::operator+=(const NPoly &o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

NPoly &NPoly::operator-=(const NPoly &o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

NPoly operator*(const NPoly &a, const NPoly &b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<CoeffPoly> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
  }
  return NPoly(std::move(c));
}

NPoly NPoly::scaled(const CoeffPoly &k) const {
  NPoly r = *this;
  for (auto &c : r.c_) c *= k;
  r.trim();
  return r;
}

NPoly NPoly::pow(unsigned e) const {
  NPoly result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

NPoly NPoly::translate(const CoeffPoly &k) const {
  if (k.is_zero() || c_.size() <= 1) return *this;
  NPoly step(std::vector<CoeffPoly>{k, CoeffPoly(1)});
  NPoly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * step + NPoly(*it);
  return r;
}

NPoly NPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<CoeffPoly> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i].scaled(Rational(static_cast<long>(i)));
  return NPoly(std::move(c));
}

NPoly NPoly::antiderivative() const {
  if (c_.empty()) return {};
  std::vector<CoeffPoly> c(c_.size() + 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    c[i + 1] = c_[i].scaled(Rational(1, static_cast<long>(i + 1)));
  return NPoly(std::move(c));
}

NPoly NPoly::antidifference() const {
  // Peel off the top power: Delta N^{d+1} has leading term (d+1) N^d.
  NPoly rest = *this, F;
  while (!rest.is_zero()) {
    int d = rest.degree();
    std::vector<CoeffPoly> mono(d + 2);
    mono[d + 1] = rest.leading().scaled(Rational(1, d + 1));
    NPoly t(std::move(mono));
    F += t;
    rest -= t.difference();
  }
  return F;
}

CoeffPoly NPoly::eval(const CoeffPoly &at) const {
  CoeffPoly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * at + *it;
  return r;
}

NPoly NPoly::compose(const NPoly &g) const {
  NPoly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * g + NPoly(*it);
  return r;
}

NPoly NPoly::substitute(const std::map<Var, CoeffPoly> &values) const {
  std::vector<CoeffPoly> c;
  c.reserve(c_.size());
  for (const auto &x : c_) c.push_back(x.substitute(values));
  return NPoly(std::move(c));
}

CoeffPoly NPoly::to_coeff_poly() const {
  CoeffPoly r;
  for (std::size_t i = 0; i < c_.size(); ++i)
    r += c_[i].times_monomial(Monomial::of(number_var(), static_cast<int>(i)));
  return r;
}

std::ostream &operator<<(std::ostream &os, const NPoly &p) { return os << p.str(); }

// ------------------------------------------------------------------ NRatFn

NRatFn::NRatFn(const NPoly &num, const NPoly &den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("NRatFn: zero denominator");
  reduce();
}

void NRatFn::reduce() {
  if (num_.is_zero()) {
    den_ = NPoly(1);
    return;
  }
  CoeffPoly n = num_.to_coeff_poly(), d = den_.to_coeff_poly();
  CoeffPoly g = gcd_keeping(n, d, number_var());
  if (!g.is_constant()) {
    n = divide_exact(n, g);
    d = divide_exact(d, g);
  }
  // Move every unit (rational multiple of a parameter monomial) out of den.
  NPoly dp = NPoly::from_coeff_poly(d);
  CoeffPoly unit;
  if (dp.leading().is_monomial()) {
    unit = dp.leading();
  } else {
    unit = unit_part(d);
    unit = CoeffPoly(unit.terms()[0].first.without(number_var()), unit.terms()[0].second);
  }
  num_ = NPoly::from_coeff_poly(n.divided_by_term(unit));
  den_ = NPoly::from_coeff_poly(d.divided_by_term(unit));
}

NPoly NRatFn::as_polynomial() const {
  if (!is_polynomial()) throw std::domain_error("not a polynomial in N: " + str());
  return num_.scaled(CoeffPoly(1).divided_by_term(den_.coeff(0)));
}

NRatFn NRatFn::operator-() const {
  NRatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

NRatFn operator+(const NRatFn &a, const NRatFn &b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return NRatFn(a.num_ + b.num_, a.den_);
  return NRatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

NRatFn operator*(const NRatFn &a, const NRatFn &b) {
  if (a.is_zero() || b.is_zero()) return {};
  return NRatFn(a.num_ * b.num_, a.den_ * b.den_);
}

NRatFn operator/(const NRatFn &a, const NRatFn &b) {
  if (b.is_zero()) throw std::domain_error("NRatFn: division by zero");
  return NRatFn(a.num_ * b.den_, a.den_ * b.num_);
}

NRatFn NRatFn::pow(unsigned e) const {
  NRatFn r(1);
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

bool operator==(const NRatFn &a, const NRatFn &b) { return a.num_ * b.den_ == b.num_ * a.den_; }

NRatFn NRatFn::translate(const CoeffPoly &k) const {
  NRatFn r;
  r.num_ = num_.translate(k);
  r.den_ = den_.translate(k);
  r.reduce();
  return r;
}

NRatFn NRatFn::derivative() const {
  if (is_polynomial()) return NRatFn(num_.derivative(), den_);
  return NRatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

NRatFn NRatFn::substitute(const std::map<Var, CoeffPoly> &values) const {
  NPoly d = den_.substitute(values);
  if (d.is_zero()) throw std::domain_error("NRatFn::substitute: denominator vanishes");
  return NRatFn(num_.substitute(values), d);
}

NRatFn NRatFn::eval(const CoeffPoly &at) const {
  CoeffPoly d = den_.eval(at);
  if (d.is_zero()) throw std::domain_error("NRatFn::eval: pole at N = " + at.str());
  return NRatFn(NPoly(num_.eval(at)), NPoly(d));
}

std::string NRatFn::str() const {
  if (is_polynomial()) return as_polynomial().str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream &operator<<(std::ostream &os, const NRatFn &f) { return os << f.str(); }

}  // namespace polyalg
