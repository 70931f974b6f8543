#include "polyalg/poly_gcd.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>
#include <stdexcept>

namespace polyalg {

namespace {

// Strips the monomial content so every variable has minimum exponent 0.
CoeffPoly strip_monomial(const CoeffPoly &p) {
  Monomial m = p.min_monomial();
  if (m.is_one()) return p;
  return p.times_monomial(m.pow(-1));
}

// Polynomial division with remainder check on non-negative exponent inputs.
std::optional<CoeffPoly> poly_exact_divide(const CoeffPoly &a, const CoeffPoly &b) {
  if (b.is_constant()) return a.scaled(Rational(1) / b.constant_value());
  const auto &[lm_b, lc_b] = b.leading_term();
  std::vector<CoeffPoly::Term> quotient;
  CoeffPoly r = a;
  while (!r.is_zero()) {
    const auto &[lm_r, lc_r] = r.leading_term();
    if (!lm_r.divisible_by(lm_b)) return std::nullopt;
    Monomial m = lm_r / lm_b;
    Rational c = lc_r / lc_b;
    quotient.emplace_back(m, c);
    r -= b.times_monomial(m).scaled(c);
  }
  return CoeffPoly::from_terms(std::move(quotient));
}

CoeffPoly normalized(const CoeffPoly &p) {
  if (p.is_zero()) return p;
  CoeffPoly s = strip_monomial(p);
  return s.scaled(Rational(1) / s.leading_term().second);
}

// Dense coefficient vector of p in x (exponents >= 0 assumed).
std::vector<CoeffPoly> coeffs_in(const CoeffPoly &p, Var x) {
  auto parts = p.collect(x);
  int deg = parts.empty() ? 0 : parts.rbegin()->first;
  std::vector<CoeffPoly> out(static_cast<std::size_t>(deg + 1));
  for (auto &[e, c] : parts) {
    if (e < 0) throw std::logic_error("coeffs_in: negative exponent");
    out[static_cast<std::size_t>(e)] = std::move(c);
  }
  return out;
}

CoeffPoly from_coeffs(const std::vector<CoeffPoly> &c, Var x) {
  CoeffPoly out;
  for (std::size_t e = 0; e < c.size(); ++e)
    if (!c[e].is_zero()) out += c[e].times_monomial(Monomial::of(x, static_cast<int>(e)));
  return out;
}

void trim(std::vector<CoeffPoly> &c) {
  while (c.size() > 1 && c.back().is_zero()) c.pop_back();
}

CoeffPoly gcd_poly(const CoeffPoly &a, const CoeffPoly &b);

CoeffPoly content_in(const CoeffPoly &p, Var x) {
  CoeffPoly g;
  for (const auto &[e, c] : p.collect(x)) {
    g = g.is_zero() ? normalized(c) : gcd_poly(g, c);
    if (g.is_constant()) return CoeffPoly(1);
  }
  return g;
}

std::vector<CoeffPoly> prem_coeffs(std::vector<CoeffPoly> r, const std::vector<CoeffPoly> &q) {
  const std::size_t dq = q.size() - 1;
  const CoeffPoly &lq = q.back();
  while (r.size() - 1 >= dq && !(r.size() == 1 && r[0].is_zero())) {
    CoeffPoly lr = r.back();
    std::size_t shift = r.size() - 1 - dq;
    for (auto &c : r) c *= lq;
    for (std::size_t i = 0; i <= dq; ++i) r[i + shift] -= lr * q[i];
    r.pop_back();
    if (r.empty()) r.emplace_back();
    trim(r);
    if (dq == 0) {
      // Division by a constant in x leaves a zero remainder.
      return {CoeffPoly()};
    }
  }
  return r;
}

Var pick_var(const CoeffPoly &a, const CoeffPoly &b) {
  // Prefer a variable present in both; lowest combined degree keeps the PRS short.
  auto va = a.vars(), vb = b.vars();
  std::optional<Var> best;
  int best_deg = 0;
  for (Var v : va) {
    if (!vb.count(v)) continue;
    int d = a.degree(v) + b.degree(v);
    if (!best || d < best_deg) best = v, best_deg = d;
  }
  if (best) return *best;
  return va.empty() ? *vb.begin() : *va.begin();
}

// gcd of non-negative-exponent polynomials without monomial content.
CoeffPoly gcd_poly(const CoeffPoly &a0, const CoeffPoly &b0) {
  if (a0.is_zero()) return normalized(b0);
  if (b0.is_zero()) return normalized(a0);
  CoeffPoly a = normalized(a0), b = normalized(b0);
  if (a.is_constant() || b.is_constant()) return CoeffPoly(1);
  if (a == b) return a;
  if (a.size() <= b.size() ? poly_exact_divide(b, a).has_value() : false) return a;
  if (b.size() <= a.size() ? poly_exact_divide(a, b).has_value() : false) return b;

  Var x = pick_var(a, b);
  if (!a.contains(x)) return gcd_poly(a, content_in(b, x));
  if (!b.contains(x)) return gcd_poly(content_in(a, x), b);

  CoeffPoly ca = content_in(a, x), cb = content_in(b, x);
  CoeffPoly c = gcd_poly(ca, cb);
  auto pa = coeffs_in(*poly_exact_divide(a, ca), x);
  auto pb = coeffs_in(*poly_exact_divide(b, cb), x);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (true) {
    auto r = prem_coeffs(pa, pb);
    pa = std::move(pb);
    if (r.size() == 1 && r[0].is_zero()) break;
    if (r.size() == 1) return c;  // nonzero constant in x: primitive parts coprime
    CoeffPoly rp = from_coeffs(r, x);
    pb = coeffs_in(normalized(*poly_exact_divide(rp, content_in(rp, x))), x);
  }
  CoeffPoly g = from_coeffs(pa, x);
  g = *poly_exact_divide(g, content_in(g, x));
  return normalized(c * g);
}

}  // namespace

std::optional<CoeffPoly> exact_divide(const CoeffPoly &a, const CoeffPoly &b) {
  if (b.is_zero()) throw std::domain_error("exact_divide: division by zero");
  if (a.is_zero()) return CoeffPoly();
  if (b.size() == 1) return a.divided_by_term(b);
  Monomial ma = a.min_monomial(), mb = b.min_monomial();
  auto q = poly_exact_divide(a.times_monomial(ma.pow(-1)), b.times_monomial(mb.pow(-1)));
  if (!q) return std::nullopt;
  return q->times_monomial(ma / mb);
}

CoeffPoly divide_exact(const CoeffPoly &a, const CoeffPoly &b) {
  auto q = exact_divide(a, b);
  if (!q) throw std::logic_error("divide_exact: " + b.str() + " does not divide " + a.str());
  return *q;
}

namespace {

// Any common divisor of a and small only involves the variables of small,
// so it also divides each coefficient of a viewed as a polynomial in the
// remaining variables. Those coefficients are usually much smaller than a.
std::optional<CoeffPoly> gcd_by_pieces(const CoeffPoly &a, const CoeffPoly &small) {
  const std::set<Var> keep = small.vars();
  std::map<Monomial, std::vector<CoeffPoly::Term>> pieces;
  for (const auto &[m, c] : a.terms()) {
    Monomial rest = m;
    for (Var v : keep) rest = rest.without(v);
    pieces[rest].emplace_back(m / rest, c);
  }
  if (pieces.size() < 2) return std::nullopt;
  CoeffPoly g = strip_monomial(small);
  // cheapest pieces first
  std::vector<CoeffPoly> ps;
  for (auto &[rest, terms] : pieces) ps.push_back(strip_monomial(CoeffPoly::from_terms(std::move(terms))));
  std::sort(ps.begin(), ps.end(), [](const CoeffPoly &x, const CoeffPoly &y) { return x.size() < y.size(); });
  for (const auto &p : ps) {
    g = gcd_poly(g, p);
    if (g.is_constant()) return CoeffPoly(1);
  }
  return g;
}

}  // namespace

CoeffPoly gcd(const CoeffPoly &a, const CoeffPoly &b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero() || b.is_zero()) return gcd_poly(strip_monomial(a), strip_monomial(b));
  const bool a_small = a.vars().size() < b.vars().size() || (a.vars().size() == b.vars().size() && a.size() <= b.size());
  if (auto g = a_small ? gcd_by_pieces(b, a) : gcd_by_pieces(a, b)) return *g;
  return gcd_poly(strip_monomial(a), strip_monomial(b));
}

CoeffPoly gcd_keeping(const CoeffPoly &a, const CoeffPoly &b, Var polynomial_var) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return normalized(b).times_monomial(Monomial::of(polynomial_var, b.min_degree(polynomial_var)));
  if (b.is_zero()) return normalized(a).times_monomial(Monomial::of(polynomial_var, a.min_degree(polynomial_var)));
  int k = std::max(0, std::min(a.min_degree(polynomial_var), b.min_degree(polynomial_var)));
  return gcd(a, b).times_monomial(Monomial::of(polynomial_var, k));
}

CoeffPoly unit_part(const CoeffPoly &p) {
  if (p.is_zero()) return CoeffPoly(1);
  return CoeffPoly(p.min_monomial(), p.leading_term().second);
}

CoeffPoly pseudo_remainder(const CoeffPoly &p, const CoeffPoly &q, Var x) {
  if (q.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
  auto r = prem_coeffs(coeffs_in(p, x), coeffs_in(q, x));
  return from_coeffs(r, x);
}

}  // namespace polyalg
