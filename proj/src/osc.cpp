#include "polyalg/osc.hpp"

#include <cstdlib>

namespace polyalg {

OscElement::OscElement(std::shared_ptr<const OscContext> ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("oscillator element without context");
}

OscElement::OscElement(std::shared_ptr<const OscContext> ctx, const NRatFn &f, int k) : OscElement(std::move(ctx)) {
  add(k, f);
}

void OscElement::add(int k, const NRatFn &f) {
  if (f.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(k, f);
  if (fresh) return;
  it->second += f;
  if (it->second.is_zero()) t_.erase(it);
}

void OscElement::check_same(const OscElement &o) const {
  if (ctx_->mode != o.ctx_->mode) throw ModeMismatch("quantum and classical oscillator elements mixed");
  if (ctx_ != o.ctx_ && !(ctx_->phi == o.ctx_->phi))
    throw ModeMismatch("oscillator elements over different structure functions");
}

NRatFn OscElement::coeff(int k) const {
  auto it = t_.find(k);
  return it == t_.end() ? NRatFn() : it->second;
}

OscElement OscElement::operator-() const {
  OscElement r(ctx_);
  for (const auto &[k, f] : t_) r.t_.emplace(k, -f);
  return r;
}

OscElement &OscElement::operator+=(const OscElement &o) {
  check_same(o);
  for (const auto &[k, f] : o.t_) add(k, f);
  return *this;
}

OscElement &OscElement::operator-=(const OscElement &o) {
  check_same(o);
  for (const auto &[k, f] : o.t_) add(k, -f);
  return *this;
}

OscElement OscElement::scaled(const NRatFn &g) const {
  OscElement r(ctx_);
  for (const auto &[k, f] : t_) r.add(k, g * f);
  return r;
}

bool operator==(const OscElement &a, const OscElement &b) {
  if (a.ctx_->mode != b.ctx_->mode || a.t_.size() != b.t_.size()) return false;
  auto it = b.t_.begin();
  for (const auto &[k, f] : a.t_) {
    if (k != it->first || !(f == it->second)) return false;
    ++it;
  }
  return true;
}

std::string OscElement::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto &[k, f] : t_) {
    if (!s.empty()) s += " + ";
    s += f.str();
    if (k > 0) s += "*bdag" + (k > 1 ? "^" + std::to_string(k) : "");
    if (k < 0) s += "*b" + (k < -1 ? "^" + std::to_string(-k) : "");
  }
  return s;
}

namespace {

// prod_{i=from}^{to} phi(N + i)
NRatFn phi_product(const NRatFn &phi, int from, int to) {
  NRatFn r(1);
  for (int i = from; i <= to; ++i) r *= phi.shift(i);
  return r;
}

// L_p L_q = lambda(N) L_{p+q}
NRatFn ladder_product(const OscContext &ctx, int p, int q) {
  if ((p >= 0 && q >= 0) || (p <= 0 && q <= 0)) return NRatFn(1);
  if (ctx.mode == OscMode::Classical) return ctx.phi.pow(static_cast<unsigned>(std::min(std::abs(p), std::abs(q))));
  if (p > 0) {
    const int a = -q;
    // (b^dag)^a b^a = phi(N) phi(N-1) ... phi(N-a+1)
    if (p >= a) return phi_product(ctx.phi, -(p - a) - a + 1, -(p - a));
    return phi_product(ctx.phi, -p + 1, 0);
  }
  const int a = -p;
  // b^c (b^dag)^c = phi(N+1) ... phi(N+c)
  if (a >= q) return phi_product(ctx.phi, (a - q) + 1, (a - q) + q);
  return phi_product(ctx.phi, 1, a);
}

}  // namespace

OscElement operator*(const OscElement &x, const OscElement &y) {
  x.check_same(y);
  OscElement r(x.ctx_);
  const bool quantum = x.ctx_->mode == OscMode::Quantum;
  for (const auto &[p, f] : x.t_)
    for (const auto &[q, g] : y.t_) {
      // L_p g(N) = g(N - p) L_p in the quantum algebra
      NRatFn c = f * (quantum ? g.shift(-p) : g) * ladder_product(*x.ctx_, p, q);
      r.add(p + q, c);
    }
  return r;
}

OscElement osc_multiply(const OscElement &x, const OscElement &y) { return x * y; }

OscElement osc_commutator(const OscElement &x, const OscElement &y) {
  if (x.mode() != OscMode::Quantum) throw ModeMismatch("commutator needs quantum elements; use osc_poisson");
  return x * y - y * x;
}

OscElement osc_poisson(const OscElement &x, const OscElement &y) {
  if (x.mode() != OscMode::Classical || y.mode() != OscMode::Classical)
    throw ModeMismatch("Poisson bracket needs classical elements");
  const auto &ctx = x.context();
  const NRatFn dphi = ctx->phi.derivative();
  OscElement r(ctx);
  for (const auto &[p, f] : x.terms())
    for (const auto &[q, g] : y.terms()) {
      // {f L_p, g L_q} = (q f' g - p f g') L_p L_q + f g {L_p, L_q}
      NRatFn c = NRatFn(q) * f.derivative() * g - NRatFn(p) * f * g.derivative();
      r += OscElement(ctx, c, 0) * OscElement(ctx, NRatFn(1), p) * OscElement(ctx, NRatFn(1), q);
      if ((p < 0 && q > 0) || (p > 0 && q < 0)) {
        // {b^a, (b^+)^c} = a c phi' b^{a-1} (b^+)^{c-1}
        const int sgn = p < 0 ? 1 : -1;
        const int pp = p - (p > 0 ? 1 : -1), qq = q - (q > 0 ? 1 : -1);
        NRatFn k = NRatFn(sgn * std::abs(p) * std::abs(q)) * f * g * dphi;
        r += OscElement(ctx, k, 0) * OscElement(ctx, NRatFn(1), pp) * OscElement(ctx, NRatFn(1), qq);
      }
    }
  return r;
}

OscElement osc_pow(const OscElement &x, unsigned e) {
  OscElement r(x.context(), NRatFn(1));
  for (unsigned i = 0; i < e; ++i) r = r * x;
  return r;
}

OscElement osc_evaluate(const NCElement &x, const OscElement &A, const OscElement &B, const OscElement &C) {
  const auto &ctx = A.context();
  std::map<int, OscElement> pa, pb, pc;
  auto power = [](std::map<int, OscElement> &cache, const OscElement &g, int e) -> const OscElement & {
    if (cache.empty()) cache.emplace(0, OscElement(g.context(), NRatFn(1)));
    for (int i = static_cast<int>(cache.size()); i <= e; ++i) cache.emplace(i, cache.at(i - 1) * g);
    return cache.at(e);
  };
  OscElement out(ctx);
  for (const auto &[m, c] : x.terms()) {
    OscElement t = power(pa, A, m[0]) * power(pb, B, m[1]) * power(pc, C, m[2]);
    out += t.scaled(NRatFn(c));
  }
  return out;
}

}  // namespace polyalg
