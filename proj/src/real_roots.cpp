#include "polyalg/real_roots.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polyalg {

UPoly::UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::from_coeff_poly(const CoeffPoly &p, Var x) {
  std::vector<Rational> c;
  for (const auto &[m, k] : p.terms()) {
    int e = m.exponent(x);
    if (e < 0 || !m.without(x).is_one())
      throw std::invalid_argument("not univariate in " + x.name() + ": " + p.str());
    if (c.size() <= static_cast<std::size_t>(e)) c.resize(e + 1);
    c[e] += k;
  }
  return UPoly(std::move(c));
}

CoeffPoly UPoly::to_coeff_poly(Var x) const {
  std::vector<CoeffPoly::Term> t;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) t.emplace_back(Monomial::of(x, static_cast<int>(i)), c_[i]);
  return CoeffPoly::from_terms(std::move(t));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto &c : r.c_) c = -c;
  return r;
}

UPoly operator+(const UPoly &a, const UPoly &b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly &a, const UPoly &b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly UPoly::scaled(const Rational &k) const {
  if (k.is_zero()) return {};
  UPoly r = *this;
  for (auto &c : r.c_) c *= k;
  return r;
}

void UPoly::divmod(const UPoly &a, const UPoly &b, UPoly &q, UPoly &r) {
  if (b.is_zero()) throw std::domain_error("UPoly::divmod: zero divisor");
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
  for (int i = a.degree(); i >= b.degree(); --i) {
    Rational f = rem[i] / b.leading();
    if (f.is_zero()) continue;
    quo[i - b.degree()] = f;
    for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= f * b.c_[j];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return scaled(Rational(1) / leading());
}

UPoly UPoly::gcd(const UPoly &a0, const UPoly &b0) {
  UPoly a = a0, b = b0, q, r;
  while (!b.is_zero()) {
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UPoly(std::move(c));
}

Rational UPoly::eval(const Rational &x) const {
  Rational r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return {};
  mpz_class den = 1, g = 0;
  for (const auto &c : c_) den = lcm(den, c.den());
  std::vector<Rational> out;
  for (const auto &c : c_) {
    mpz_class v = (c * Rational(den)).num();
    g = ::gcd(g, v);
    out.emplace_back(v);
  }
  if (leading().sign() < 0) g = -g;
  for (auto &c : out) c /= Rational(g);
  return UPoly(std::move(out));
}

std::string UPoly::str(const std::string &var) const { return to_coeff_poly(Var(var)).str(); }

std::vector<UPoly> squarefree_decomposition(const UPoly &p) {
  std::vector<UPoly> out;
  if (p.degree() < 1) return out;
  UPoly d = p.derivative();
  UPoly a = UPoly::gcd(p, d), q, r;
  UPoly::divmod(p, a, q, r);
  UPoly b = q;
  UPoly::divmod(d, a, q, r);
  UPoly c = q - b.derivative();
  while (b.degree() >= 1) {
    UPoly g = UPoly::gcd(b, c);
    out.push_back(g);
    UPoly::divmod(b, g, q, r);
    b = q;
    UPoly::divmod(c, g, q, r);
    c = q - b.derivative();
  }
  return out;
}

std::vector<UPoly> sturm_sequence(const UPoly &p) {
  std::vector<UPoly> s{p, p.derivative()};
  while (!s.back().is_zero()) {
    UPoly q, r;
    UPoly::divmod(s[s.size() - 2], s.back(), q, r);
    s.push_back(-r);
  }
  s.pop_back();
  return s;
}

namespace {

int variations(const std::vector<UPoly> &s, const Rational &x) {
  int v = 0, last = 0;
  for (const auto &f : s) {
    int sg = f.sign_at(x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

Rational cauchy_bound(const UPoly &p) {
  Rational m;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, (p.coeffs()[i] / p.leading()).abs());
  return m + Rational(1);
}

}  // namespace

int sturm_count(const std::vector<UPoly> &s, const Rational &a, const Rational &b) {
  return variations(s, a) - variations(s, b);
}

Rational default_precision() { return Rational(mpz_class(1), mpz_class("1000000000000")); }

Rational simplest_rational(const Rational &lo0, const Rational &hi0) {
  // Continued-fraction descent (Stern-Brocot) on [lo, hi].
  Rational lo = lo0, hi = hi0;
  if (lo > hi) std::swap(lo, hi);
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_rational(-hi, -lo);
  mpz_class fl = floor(lo);
  if (Rational(fl) == lo) return lo;
  if (Rational(mpz_class(fl + 1)) <= hi) return Rational(mpz_class(fl + 1));
  // lo, hi share the integer part; recurse on reciprocals of the fractional parts.
  Rational a = lo - Rational(fl), b = hi - Rational(fl);
  return Rational(fl) + Rational(1) / simplest_rational(Rational(1) / b, Rational(1) / a);
}

namespace {

// Isolates the roots of the square-free integer polynomial f.
void isolate(const UPoly &f, int multiplicity, const Rational &precision, std::vector<RealRoot> &out) {
  auto seq = sturm_sequence(f);
  Rational B = cauchy_bound(f);
  mpz_class lc = abs(f.leading().num());
  Rational rational_window = Rational(mpz_class(1), lc * lc + 1);

  struct Job {
    Rational lo, hi;
  };
  std::vector<Job> stack{{-B, B}};
  std::vector<RealRoot> found;
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    int n = sturm_count(seq, j.lo, j.hi);
    if (n == 0) continue;
    if (n == 1 && f.sign_at(j.hi) == 0) {
      found.push_back({j.hi, j.hi, true, multiplicity, 0, 0});
      continue;
    }
    if (n == 1 && j.hi - j.lo < rational_window) {
      RealRoot r;
      r.multiplicity = multiplicity;
      Rational cand = simplest_rational(j.lo, j.hi);
      if (f.sign_at(cand) == 0) {
        r.lo = r.hi = cand;
        r.exact = true;
      } else {
        Rational lo = j.lo, hi = j.hi;
        // hi is never a root here; lo may be one belonging to the left neighbour.
        int shi = f.sign_at(hi);
        while (hi - lo > precision) {
          Rational mid = (lo + hi) / Rational(2);
          if (f.sign_at(mid) == shi) hi = mid; else lo = mid;
        }
        r.lo = lo;
        r.hi = hi;
        r.sign_lo = f.sign_at(lo);
        r.sign_hi = f.sign_at(hi);
      }
      found.push_back(r);
      continue;
    }
    Rational mid = (j.lo + j.hi) / Rational(2);
    stack.push_back({mid, j.hi});
    stack.push_back({j.lo, mid});
  }
  out.insert(out.end(), found.begin(), found.end());
}

}  // namespace

std::vector<RealRoot> real_roots(const UPoly &p, const Rational &precision) {
  if (p.is_zero()) throw std::invalid_argument("real_roots: zero polynomial");
  if (precision.sign() <= 0) throw std::invalid_argument("real_roots: precision must be positive");
  std::vector<RealRoot> out;
  auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].degree() >= 1) isolate(parts[i].primitive(), static_cast<int>(i + 1), precision, out);
  std::sort(out.begin(), out.end(), [](const RealRoot &a, const RealRoot &b) { return a.midpoint() < b.midpoint(); });
  return out;
}

}  // namespace polyalg
