#include "polyalg/nc_element.hpp"

namespace polyalg {

NCElement::NCElement(const CoeffPoly &c) {
  if (!c.is_zero()) t_.emplace(NCMono{0, 0, 0}, c);
}

NCElement NCElement::mono(int i, int j, int k, const CoeffPoly &c) {
  NCElement e;
  e.add_term(NCMono{i, j, k}, c);
  return e;
}

CoeffPoly NCElement::coeff(int i, int j, int k) const {
  auto it = t_.find(NCMono{i, j, k});
  return it == t_.end() ? CoeffPoly() : it->second;
}

void NCElement::add_term(const NCMono &m, const CoeffPoly &c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

NCElement NCElement::operator-() const {
  NCElement r = *this;
  for (auto &[m, c] : r.t_) c = -c;
  return r;
}

NCElement &NCElement::operator+=(const NCElement &o) {
  for (const auto &[m, c] : o.t_) add_term(m, c);
  return *this;
}

NCElement &NCElement::operator-=(const NCElement &o) {
  for (const auto &[m, c] : o.t_) add_term(m, -c);
  return *this;
}

NCElement NCElement::scaled(const CoeffPoly &k) const {
  if (k.is_zero()) return {};
  NCElement r;
  for (const auto &[m, c] : t_) r.add_term(m, c * k);
  return r;
}

NCElement NCElement::substitute(const std::map<Var, CoeffPoly> &values) const {
  NCElement r;
  for (const auto &[m, c] : t_) r.add_term(m, c.substitute(values));
  return r;
}

std::string mono_str(const NCMono &m) {
  static const char gens[3] = {'A', 'B', 'C'};
  std::string s;
  for (int g = 0; g < 3; ++g) {
    if (m[g] == 0) continue;
    if (!s.empty()) s += '*';
    s += gens[g];
    if (m[g] != 1) s += "^" + std::to_string(m[g]);
  }
  return s.empty() ? "1" : s;
}

std::string NCElement::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto &[m, c] : t_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + mono_str(m);
  }
  return s;
}

}  // namespace polyalg
