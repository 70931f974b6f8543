#include "polyalg/coeff_poly.hpp"

#include "polyalg/expr_parser.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace polyalg {

namespace {

const std::string *intern(std::string_view name) {
  static std::mutex mu;
  static std::set<std::string, std::less<>> names;
  std::lock_guard lock(mu);
  auto it = names.find(name);
  if (it == names.end()) it = names.emplace(name).first;
  return &*it;
}

}  // namespace

Var::Var(std::string_view name) : p_(intern(name)) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) : f_(std::move(factors)) {
  std::sort(f_.begin(), f_.end(), [](const Factor &a, const Factor &b) { return a.first < b.first; });
  std::vector<Factor> out;
  for (const auto &f : f_) {
    if (!out.empty() && out.back().first == f.first)
      out.back().second += f.second;
    else
      out.push_back(f);
    if (out.back().second == 0) out.pop_back();
  }
  f_ = std::move(out);
}

Monomial Monomial::of(Var v, int e) {
  Monomial m;
  if (e != 0) m.f_.emplace_back(v, e);
  return m;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto &f : f_) d += f.second;
  return d;
}

int Monomial::exponent(Var v) const {
  for (const auto &f : f_)
    if (f.first == v) return f.second;
  return 0;
}

bool Monomial::nonnegative() const {
  return std::all_of(f_.begin(), f_.end(), [](const Factor &f) { return f.second > 0; });
}

namespace {

// Merges two sorted factor lists, combining exponents with `op`.
template <class Op>
std::vector<Monomial::Factor> merge(const std::vector<Monomial::Factor> &a,
                                    const std::vector<Monomial::Factor> &b, Op op) {
  std::vector<Monomial::Factor> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      int e = op(a[i].second, 0);
      if (e) out.emplace_back(a[i].first, e);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      int e = op(0, b[j].second);
      if (e) out.emplace_back(b[j].first, e);
      ++j;
    } else {
      int e = op(a[i].second, b[j].second);
      if (e) out.emplace_back(a[i].first, e);
      ++i, ++j;
    }
  }
  return out;
}

}  // namespace

Monomial Monomial::operator*(const Monomial &o) const {
  Monomial m;
  m.f_ = merge(f_, o.f_, [](int x, int y) { return x + y; });
  return m;
}

Monomial Monomial::operator/(const Monomial &o) const {
  Monomial m;
  m.f_ = merge(f_, o.f_, [](int x, int y) { return x - y; });
  return m;
}

Monomial Monomial::pow(int e) const {
  Monomial m;
  if (e == 0) return m;
  m.f_ = f_;
  for (auto &f : m.f_) f.second *= e;
  return m;
}

Monomial Monomial::gcd(const Monomial &a, const Monomial &b) {
  Monomial m;
  m.f_ = merge(a.f_, b.f_, [](int x, int y) { return std::min(x, y); });
  return m;
}

bool Monomial::divisible_by(const Monomial &o) const {
  auto q = merge(f_, o.f_, [](int x, int y) { return x - y; });
  return std::all_of(q.begin(), q.end(), [](const Factor &f) { return f.second >= 0; });
}

Monomial Monomial::without(Var v) const {
  Monomial m;
  for (const auto &f : f_)
    if (!(f.first == v)) m.f_.push_back(f);
  return m;
}

std::strong_ordering operator<=>(const Monomial &a, const Monomial &b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da <=> db;
  std::size_t i = 0, j = 0;
  while (i < a.f_.size() || j < b.f_.size()) {
    int ea, eb;
    if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first)) {
      ea = a.f_[i].second, eb = 0, ++i;
    } else if (i == a.f_.size() || b.f_[j].first < a.f_[i].first) {
      ea = 0, eb = b.f_[j].second, ++j;
    } else {
      ea = a.f_[i].second, eb = b.f_[j].second, ++i, ++j;
    }
    if (ea != eb) return ea <=> eb;
  }
  return std::strong_ordering::equal;
}

std::string Monomial::str() const {
  std::string s;
  for (const auto &[v, e] : f_) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

// ---------------------------------------------------------------- CoeffPoly

CoeffPoly::CoeffPoly(const Rational &c) {
  if (!c.is_zero()) t_.emplace_back(Monomial(), c);
}

CoeffPoly::CoeffPoly(const Monomial &m, const Rational &c) {
  if (!c.is_zero()) t_.emplace_back(m, c);
}

CoeffPoly CoeffPoly::var(std::string_view name, int e) {
  return CoeffPoly(Monomial::of(Var(name), e), Rational(1));
}

CoeffPoly CoeffPoly::from_terms(std::vector<Term> terms) {
  CoeffPoly p;
  p.t_ = std::move(terms);
  p.normalize();
  return p;
}

CoeffPoly CoeffPoly::parse(std::string_view text) { return parse_coeff_poly(text); }

void CoeffPoly::normalize() {
  std::sort(t_.begin(), t_.end(), [](const Term &a, const Term &b) { return a.first > b.first; });
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto &t : t_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term &t) { return t.second.is_zero(); });
  t_ = std::move(out);
}

Rational CoeffPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("CoeffPoly::constant_value: not constant: " + str());
  return t_.empty() ? Rational(0) : t_[0].second;
}

Rational CoeffPoly::constant_term() const {
  // The monomial 1 has total degree 0 and is minimal among degree-0 terms
  // only when no Laurent terms are present, so scan.
  for (const auto &t : t_)
    if (t.first.is_one()) return t.second;
  return Rational(0);
}

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly r = *this;
  for (auto &t : r.t_) t.second = -t.second;
  return r;
}

namespace {

template <bool Subtract>
std::vector<CoeffPoly::Term> merge_terms(const std::vector<CoeffPoly::Term> &a,
                                         const std::vector<CoeffPoly::Term> &b) {
  std::vector<CoeffPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.emplace_back(b[j].first, Subtract ? -b[j].second : b[j].second);
      ++j;
      continue;
    }
    auto c = a[i].first <=> b[j].first;
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.emplace_back(b[j].first, Subtract ? -b[j].second : b[j].second);
      ++j;
    } else {
      Rational s = Subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i, ++j;
    }
  }
  return out;
}

}  // namespace

CoeffPoly &CoeffPoly::operator+=(const CoeffPoly &o) {
  if (o.t_.empty()) return *this;
  t_ = merge_terms<false>(t_, o.t_);
  return *this;
}

CoeffPoly &CoeffPoly::operator-=(const CoeffPoly &o) {
  if (o.t_.empty()) return *this;
  t_ = merge_terms<true>(t_, o.t_);
  return *this;
}

CoeffPoly operator*(const CoeffPoly &a, const CoeffPoly &b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a.scaled(b.t_[0].second);
  if (a.is_constant()) return b.scaled(a.t_[0].second);
  std::map<Monomial, Rational> acc;
  for (const auto &[ma, ca] : a.t_)
    for (const auto &[mb, cb] : b.t_) {
      auto [it, fresh] = acc.try_emplace(ma * mb, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  CoeffPoly r;
  r.t_.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (!it->second.is_zero()) r.t_.emplace_back(it->first, it->second);
  return r;
}

CoeffPoly &CoeffPoly::operator*=(const CoeffPoly &o) { return *this = *this * o; }

CoeffPoly CoeffPoly::scaled(const Rational &c) const {
  if (c.is_zero()) return {};
  CoeffPoly r = *this;
  for (auto &t : r.t_) t.second *= c;
  return r;
}

CoeffPoly CoeffPoly::times_monomial(const Monomial &m) const {
  CoeffPoly r = *this;
  for (auto &t : r.t_) t.first = t.first * m;
  return r;  // multiplication by a monomial preserves the order
}

CoeffPoly CoeffPoly::pow(unsigned e) const {
  CoeffPoly result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

CoeffPoly CoeffPoly::divided_by_term(const CoeffPoly &d) const {
  if (d.t_.size() != 1) throw std::domain_error("divided_by_term: divisor is not a single term: " + d.str());
  CoeffPoly r = *this;
  Rational inv = Rational(1) / d.t_[0].second;
  for (auto &t : r.t_) {
    t.first = t.first / d.t_[0].first;
    t.second *= inv;
  }
  return r;
}

std::set<Var> CoeffPoly::vars() const {
  std::set<Var> out;
  for (const auto &t : t_)
    for (const auto &f : t.first.factors()) out.insert(f.first);
  return out;
}

bool CoeffPoly::contains(Var v) const {
  return std::any_of(t_.begin(), t_.end(), [&](const Term &t) { return t.first.exponent(v) != 0; });
}

int CoeffPoly::degree(Var v) const {
  int d = 0;
  bool first = true;
  for (const auto &t : t_) {
    int e = t.first.exponent(v);
    if (first || e > d) d = e;
    first = false;
  }
  return d;
}

int CoeffPoly::min_degree(Var v) const {
  int d = 0;
  bool first = true;
  for (const auto &t : t_) {
    int e = t.first.exponent(v);
    if (first || e < d) d = e;
    first = false;
  }
  return d;
}

int CoeffPoly::total_degree() const {
  int d = 0;
  for (const auto &t : t_) d = std::max(d, t.first.total_degree());
  return d;
}

std::map<int, CoeffPoly> CoeffPoly::collect(Var v) const {
  std::map<int, std::vector<Term>> parts;
  for (const auto &t : t_) parts[t.first.exponent(v)].emplace_back(t.first.without(v), t.second);
  std::map<int, CoeffPoly> out;
  for (auto &[e, terms] : parts) out.emplace(e, from_terms(std::move(terms)));
  return out;
}

CoeffPoly CoeffPoly::substitute(const std::map<Var, CoeffPoly> &values) const {
  if (values.empty()) return *this;
  // Cache powers per variable.
  std::map<std::pair<Var, int>, CoeffPoly> powers;
  auto power = [&](Var v, const CoeffPoly &val, int e) -> const CoeffPoly & {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    CoeffPoly p;
    if (e >= 0) {
      p = val.pow(static_cast<unsigned>(e));
    } else {
      if (val.size() != 1)
        throw std::domain_error("substitute: negative power of non-monomial value for " + v.name());
      p = CoeffPoly(1).divided_by_term(val).pow(static_cast<unsigned>(-e));
    }
    return powers.emplace(key, std::move(p)).first->second;
  };
  CoeffPoly out;
  std::vector<Term> untouched;
  for (const auto &[m, c] : t_) {
    std::vector<Monomial::Factor> keep;
    CoeffPoly factor(c);
    bool touched = false;
    for (const auto &[v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) {
        keep.emplace_back(v, e);
      } else {
        factor *= power(v, it->second, e);
        touched = true;
      }
    }
    if (!touched) {
      untouched.emplace_back(m, c);
      continue;
    }
    out += factor.times_monomial(Monomial(std::move(keep)));
  }
  return out + from_terms(std::move(untouched));
}

CoeffPoly CoeffPoly::substitute(Var v, const CoeffPoly &value) const {
  return substitute(std::map<Var, CoeffPoly>{{v, value}});
}

Rational CoeffPoly::evaluate(const std::map<Var, Rational> &values) const {
  Rational sum;
  for (const auto &[m, c] : t_) {
    Rational term = c;
    for (const auto &[v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) throw std::domain_error("evaluate: unassigned variable " + v.name());
      term *= it->second.ipow(e);
    }
    sum += term;
  }
  return sum;
}

CoeffPoly CoeffPoly::derivative(Var v) const {
  std::vector<Term> out;
  for (const auto &[m, c] : t_) {
    int e = m.exponent(v);
    if (e == 0) continue;
    out.emplace_back(m / Monomial::of(v, 1), c * Rational(e));
  }
  return from_terms(std::move(out));
}

Monomial CoeffPoly::min_monomial() const {
  if (t_.empty()) return {};
  // Variables absent from a term count as exponent 0.
  Monomial g = t_[0].first;
  for (std::size_t i = 1; i < t_.size(); ++i) g = Monomial::gcd(g, t_[i].first);
  return g;
}

std::string CoeffPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : t_) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << a.str();
    } else if (a.is_one()) {
      os << m.str();
    } else {
      os << a.str() << '*' << m.str();
    }
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const CoeffPoly &p) { return os << p.str(); }

}  // namespace polyalg
