#include "polyalg/rewrite.hpp"

#include <mutex>
#include <stdexcept>

namespace polyalg {

namespace {
enum Gen { GA = 0, GB = 1, GC = 2 };
}

struct RewriteSystem::Cache {
  std::shared_mutex mu;
  std::map<std::pair<NCMono, int>, NCElement> right, left;
  std::map<std::pair<NCMono, NCMono>, NCElement> right_prod, left_prod;

  template <class K>
  std::optional<NCElement> find(std::map<K, NCElement> &m, const K &k) {
    std::shared_lock lock(mu);
    auto it = m.find(k);
    if (it == m.end()) return std::nullopt;
    return it->second;
  }
  template <class K>
  void put(std::map<K, NCElement> &m, const K &k, const NCElement &v) {
    std::unique_lock lock(mu);
    m.emplace(k, v);
  }
};

RewriteSystem::RewriteSystem() : cache_(std::make_unique<Cache>()) {}

RewriteSystem::RewriteSystem(NCElement rhs_ac, NCElement rhs_bc)
    : r2_(std::move(rhs_ac)), r3_(std::move(rhs_bc)), have_r2_(true), have_r3_(true),
      cache_(std::make_unique<Cache>()) {}

RewriteSystem::RewriteSystem(const AlgebraSpec &spec) : RewriteSystem(polyalg::rhs_ac(spec), polyalg::rhs_bc(spec)) {}

RewriteSystem::~RewriteSystem() = default;

NCElement rhs_ac(const AlgebraSpec &spec) {
  spec.validate();
  RewriteSystem bare;
  NCElement r;
  for (int i = 1; i <= spec.L() + 1; ++i) r += NCElement::A(i).scaled(spec.a(i));
  r += NCElement::B().scaled(spec.delta);
  r += NCElement(spec.epsilon);
  r += anticommutator(NCElement::A(), NCElement::B(), bare).scaled(spec.beta);
  return r;
}

NCElement rhs_bc(const AlgebraSpec &spec) {
  spec.validate();
  RewriteSystem half;
  half.r2_ = rhs_ac(spec);
  half.have_r2_ = true;
  NCElement r;
  for (int i = 1; i <= spec.M; ++i) r += NCElement::A(i).scaled(spec.l(i));
  r -= NCElement::B(2).scaled(spec.beta);
  r += NCElement::B().scaled(spec.eta);
  for (int i = 1; i <= spec.L(); ++i)
    r += anticommutator(NCElement::A(i), NCElement::B(), half).scaled(spec.w(i));
  r += NCElement(spec.zeta);
  return r;
}

// ------------------------------------------------------------- right fold

NCElement RewriteSystem::rmul(const NCElement &x, int gen) const {
  NCElement out;
  for (const auto &[m, c] : x.terms()) out += rmul(m, gen).scaled(c);
  return out;
}

NCElement RewriteSystem::rmul(const NCMono &m, int gen) const {
  const auto [a, b, c] = m;
  if (gen == GC) return NCElement::mono(a, b, c + 1);
  if (gen == GB && c == 0) return NCElement::mono(a, b + 1, 0);
  if (gen == GA && c == 0 && b == 0) return NCElement::mono(a + 1, 0, 0);

  auto key = std::make_pair(m, gen);
  if (auto hit = cache_->find(cache_->right, key)) return *hit;

  NCElement r;
  if (c > 0) {
    // m' C g -> m' (g C - R) for g in {A, B}
    const NCMono mp{a, b, c - 1};
    const bool is_a = gen == GA;
    if (is_a ? !have_r2_ : !have_r3_) throw std::logic_error("rewrite rule for C*" + std::string(is_a ? "A" : "B") + " not available");
    r = rmul(rmul(mp, gen), GC) - mono_times(mp, is_a ? r2_ : r3_);
  } else {
    // m'' B A -> m'' (A B - C)
    const NCMono mpp{a, b - 1, 0};
    r = rmul(rmul(mpp, GA), GB) - NCElement::mono(a, b - 1, 1);
  }
  cache_->put(cache_->right, key, r);
  return r;
}

NCElement RewriteSystem::mono_times(const NCMono &m, const NCElement &y) const {
  NCElement out;
  for (const auto &[n, coef] : y.terms()) {
    auto key = std::make_pair(m, n);
    std::optional<NCElement> p = cache_->find(cache_->right_prod, key);
    if (!p) {
      NCElement e = NCElement::mono(m[0], m[1], m[2]);
      for (int g = 0; g < 3; ++g)
        for (int t = 0; t < n[g]; ++t) e = rmul(e, g);
      cache_->put(cache_->right_prod, key, e);
      p = std::move(e);
    }
    out += p->scaled(coef);
  }
  return out;
}

// -------------------------------------------------------------- left fold

NCElement RewriteSystem::lmul(int gen, const NCElement &x) const {
  NCElement out;
  for (const auto &[m, c] : x.terms()) out += lmul(gen, m).scaled(c);
  return out;
}

NCElement RewriteSystem::lmul(int gen, const NCMono &m) const {
  const auto [a, b, c] = m;
  if (gen == GA) return NCElement::mono(a + 1, b, c);
  if (gen == GB && a == 0) return NCElement::mono(0, b + 1, c);
  if (gen == GC && a == 0 && b == 0) return NCElement::mono(0, 0, c + 1);

  auto key = std::make_pair(m, gen);
  if (auto hit = cache_->find(cache_->left, key)) return *hit;

  NCElement r;
  if (gen == GB) {
    // B A m' -> (A B - C) m'
    const NCMono mp{a - 1, b, c};
    r = lmul(GA, lmul(GB, mp)) - lmul(GC, mp);
  } else if (a > 0) {
    // C A m' -> (A C - R2) m'
    if (!have_r2_) throw std::logic_error("rewrite rule for C*A not available");
    const NCMono mp{a - 1, b, c};
    r = lmul(GA, lmul(GC, mp)) - times_mono(r2_, mp);
  } else {
    // C B m'' -> (B C - R3) m''
    if (!have_r3_) throw std::logic_error("rewrite rule for C*B not available");
    const NCMono mpp{0, b - 1, c};
    r = lmul(GB, lmul(GC, mpp)) - times_mono(r3_, mpp);
  }
  cache_->put(cache_->left, key, r);
  return r;
}

NCElement RewriteSystem::times_mono(const NCElement &x, const NCMono &m) const {
  NCElement out;
  for (const auto &[n, coef] : x.terms()) {
    auto key = std::make_pair(n, m);
    std::optional<NCElement> p = cache_->find(cache_->left_prod, key);
    if (!p) {
      NCElement e = NCElement::mono(m[0], m[1], m[2]);
      for (int g = 2; g >= 0; --g)
        for (int t = 0; t < n[g]; ++t) e = lmul(g, e);
      cache_->put(cache_->left_prod, key, e);
      p = std::move(e);
    }
    out += p->scaled(coef);
  }
  return out;
}

// ---------------------------------------------------------------- public

NCElement RewriteSystem::multiply(const NCElement &x, const NCElement &y, Strategy s) const {
  NCElement out;
  if (s == Strategy::RightFold) {
    for (const auto &[m, c] : x.terms()) out += mono_times(m, y).scaled(c);
  } else {
    for (const auto &[m, c] : y.terms()) out += times_mono(x, m).scaled(c);
  }
  return out;
}

NCElement RewriteSystem::word(std::string_view w, Strategy s) const {
  auto gen_of = [](char ch) {
    switch (ch) {
      case 'A': return static_cast<int>(GA);
      case 'B': return static_cast<int>(GB);
      case 'C': return static_cast<int>(GC);
    }
    throw std::invalid_argument(std::string("unknown generator '") + ch + "'");
  };
  NCElement e(1);
  if (s == Strategy::RightFold) {
    for (char ch : w) e = rmul(e, gen_of(ch));
  } else {
    for (auto it = w.rbegin(); it != w.rend(); ++it) e = lmul(gen_of(*it), e);
  }
  return e;
}

NCElement RewriteSystem::power(const NCElement &x, unsigned e) const {
  NCElement r(1);
  for (unsigned i = 0; i < e; ++i) r = multiply(r, x);
  return r;
}

NCElement normal_order(std::string_view word, const RewriteSystem &rw, Strategy s) { return rw.word(word, s); }

NCElement normal_order(const NCWordSum &sum, const RewriteSystem &rw, Strategy s) {
  NCElement out;
  for (const auto &[c, w] : sum.terms) out += rw.word(w, s).scaled(c);
  return out;
}

NCElement commutator(const NCElement &x, const NCElement &y, const RewriteSystem &rw) {
  return rw.multiply(x, y) - rw.multiply(y, x);
}

NCElement anticommutator(const NCElement &x, const NCElement &y, const RewriteSystem &rw) {
  return rw.multiply(x, y) + rw.multiply(y, x);
}

NCElement jacobi_residual(const RewriteSystem &rw) {
  return commutator(NCElement::A(), rw.rhs_bc(), rw) - commutator(NCElement::B(), rw.rhs_ac(), rw);
}

}  // namespace polyalg
