#include "polyalg/structure.hpp"

#include "polyalg/linear_system.hpp"
#include "polyalg/poly_gcd.hpp"
#include "polyalg/rewrite.hpp"

#include <stdexcept>

namespace polyalg {

namespace {
const CoeffPoly kZero;
}

XYTable::XYTable(int jmax, TableKind kind, const CoeffPoly &beta, const CoeffPoly &delta)
    : jmax_(jmax), kind_(kind), x_(jmax + 1), y_(jmax + 1) {
  if (jmax < 1) throw std::invalid_argument("table depth must be >= 1");
  if (kind == TableKind::Quantum) {
    x_[1] = {beta, CoeffPoly(1)};
    y_[1] = {delta, beta.scaled(2)};
  } else {
    x_[1] = {CoeffPoly(1), CoeffPoly()};
    y_[1] = {CoeffPoly(), CoeffPoly(1)};
  }
  const CoeffPoly two_beta = beta.scaled(2);
  for (int j = 2; j <= jmax; ++j) {
    x_[j].resize(j + 1);
    y_[j].resize(j + 1);
    for (int i = 0; i <= j; ++i) {
      x_[j][i] = x(i - 1, j - 1) + beta * x(i, j - 1) + y(i, j - 1);
      y_[j][i] = delta * x(i, j - 1) + two_beta * x(i - 1, j - 1) + y(i - 1, j - 1);
    }
  }
}

const CoeffPoly &XYTable::x(int i, int j) const {
  if (j < 1 || j > jmax_ || i < 0 || i > j) return kZero;
  const auto &row = x_[j];
  return i < static_cast<int>(row.size()) ? row[i] : kZero;
}

const CoeffPoly &XYTable::y(int i, int j) const {
  if (j < 1 || j > jmax_ || i < 0 || i > j) return kZero;
  const auto &row = y_[j];
  return i < static_cast<int>(row.size()) ? row[i] : kZero;
}

RecurrenceTables::RecurrenceTables(const CoeffPoly &beta, const CoeffPoly &delta, int jmax)
    : jmax_(jmax), xy_(jmax, TableKind::Quantum, beta, delta), bar_(jmax, TableKind::Casimir, beta, delta),
      s_(jmax + 1) {
  s_[1] = {CoeffPoly(Rational(1, 2))};
  for (int j = 2; j <= jmax; ++j) {
    std::vector<CoeffPoly> acc(j);
    auto add = [&](const std::vector<CoeffPoly> &t, const Rational &w) {
      for (std::size_t m = 0; m < t.size() && m < acc.size(); ++m) acc[m] += t[m].scaled(w);
    };
    const int n = j / 2;
    for (int i = 1; i <= n; ++i) add(T(j - i, i - 1), Rational(1));
    if (j % 2 == 1) add(T(n, n), Rational(1, 2));
    s_[j] = std::move(acc);
  }
}

const CoeffPoly &RecurrenceTables::s(int j, int k) const {
  if (j < 1 || j > jmax_) {
    if (j < 1) return kZero;
    throw std::out_of_range("s^(" + std::to_string(j) + ") beyond table depth");
  }
  if (k < 0 || k >= j) return kZero;
  return s_[j][k];
}

std::vector<CoeffPoly> RecurrenceTables::T(int mp, int l) const {
  std::vector<CoeffPoly> t(mp + l + 1);
  if (l == 0) {
    t[mp] = CoeffPoly(1);
    return t;
  }
  for (int m = 0; m <= mp + l; ++m) {
    CoeffPoly v;
    if (m - mp >= 0 && m - mp <= l) v = xy_.x(m - mp, l);
    for (int k = 0; k <= l; ++k)
      if (mp + k > m) v -= xy_.y(k, l) * s(mp + k, m);
    t[m] = std::move(v);
  }
  return t;
}

std::vector<CoeffPoly> RecurrenceTables::W(int i, int j) const {
  if (i < 1 || j < 1) throw std::invalid_argument("W^{i,j} needs i, j >= 1");
  if (i + j > jmax_) throw std::out_of_range("W^{i,j} needs tables of depth i + j");
  std::vector<CoeffPoly> w(i + j);
  for (int k = 0; k < i + j; ++k) {
    CoeffPoly v;
    for (int m = 0; m <= j; ++m)
      if (i + m > k) v += bar_.y(m, j) * s(i + m, k);
    if (k >= i) v -= bar_.x(k - i, j);
    w[k] = std::move(v);
  }
  return w;
}

// ----------------------------------------------------------------- closure

Closure close_algebra(const AlgebraSpec &spec) {
  spec.validate();
  const int L = spec.L();
  RecurrenceTables tab(spec.beta, spec.delta, L + 1);
  std::vector<CoeffPoly> w(L + 1);
  for (int i = 0; i <= L; ++i)
    for (int k = i + 1; k <= L + 1; ++k) w[i] -= spec.a(k) * tab.s(k, i);
  Closure c;
  c.eta = w[0].scaled(2);
  c.omega.assign(w.begin() + 1, w.end());
  return c;
}

AlgebraSpec closed(const AlgebraSpec &spec) {
  Closure c = close_algebra(spec);
  AlgebraSpec s = spec;
  s.eta = c.eta;
  s.omega = c.omega;
  return s;
}

ClassicalClosure classical_close(const AlgebraSpec &spec) {
  spec.validate();
  ClassicalClosure c;
  c.eta = -spec.a(1);
  c.rho = -spec.beta;
  for (int i = 1; i <= spec.L(); ++i) c.omega.push_back(spec.a(i + 1).scaled(Rational(-(i + 1), 2)));
  return c;
}

AlgebraSpec classical_closed(const AlgebraSpec &spec) {
  ClassicalClosure c = classical_close(spec);
  AlgebraSpec s = spec;
  s.eta = c.eta;
  s.rho = c.rho;
  s.omega = c.omega;
  return s;
}

// ----------------------------------------------------------------- Casimir

CasimirCoeffs quantum_casimir(const AlgebraSpec &spec, const CasimirOptions &opt) {
  spec.validate();
  const int M = spec.M, L = spec.L();
  RecurrenceTables tab(spec.beta, spec.delta, M + 1);

  CasimirCoeffs cas;
  cas.quantum = true;
  for (int i = 1; i <= L + 1; ++i) cas.m.push_back(spec.a(i).scaled(-2) - (spec.beta * spec.w(i)).scaled(i <= L ? 2 : 0));
  cas.n = spec.beta.scaled(-2);
  cas.l1 = spec.epsilon.scaled(-2) - spec.beta * spec.eta;
  cas.l2 = spec.beta * spec.beta - spec.delta;

  // coefficient of {A^k, C} in [A^i, {A^j, B}]
  std::vector<std::vector<std::vector<CoeffPoly>>> sw(L + 1, std::vector<std::vector<CoeffPoly>>(L + 1));
  for (int i = 1; i <= L; ++i)
    for (int j = 1; j <= L; ++j) {
      auto w = tab.W(i, j);
      for (int k = 0; k < i + j; ++k) w[k] += tab.s(i + j, k);
      sw[i][j] = std::move(w);
    }
  auto zterm = [&](int i, int j, int k) {
    const auto &v = sw[i][j];
    return k < static_cast<int>(v.size()) ? spec.w(i) * spec.w(j) * v[k] : CoeffPoly();
  };

  cas.H.resize(M + 1);
  for (int k = 0; k <= M; ++k) {
    CoeffPoly h = spec.l(k);
    for (int i = k + 1; i <= L; ++i) h += spec.w(i) * spec.eta * tab.s(i, k);
    if (opt.include_G)
      for (int i = k + 1; i <= L + 1; ++i) h += spec.a(i) * tab.s(i, k);
    if (!opt.piecewise_Z) {
      for (int i = 1; i <= L; ++i)
        for (int j = 1; j <= L; ++j) h += zterm(i, j, k);
    } else if (k <= 1) {
      for (int i = 1; i <= L; ++i)
        for (int j = 1; j <= L; ++j) h += zterm(i, j, k);
    } else if (k <= L) {
      for (int i = k; i <= L; ++i)
        for (int j = 1; j <= L; ++j) h += zterm(i, j, k);
      for (int i = 1; i <= k - 1; ++i)
        for (int j = k - i + 1; j <= L; ++j) h += zterm(i, j, k);
    } else if (k <= 2 * L - 1) {
      for (int i = k - L + 1; i <= L; ++i)
        for (int j = k - i + 1; j <= L; ++j) h += zterm(i, j, k);
    }
    cas.H[k] = std::move(h);
  }

  // H_k = sum_{i>k} k_i s^(i)_k is triangular; solve from the top.
  cas.k.assign(M + 1, CoeffPoly());
  for (int k = M; k >= 0; --k) {
    CoeffPoly rhs = cas.H[k];
    for (int i = k + 2; i <= M + 1; ++i) rhs -= cas.k[i - 1] * tab.s(i, k);
    auto q = exact_divide(rhs, tab.s(k + 1, k));
    if (!q) throw InconsistentSystem("Casimir system: s^(" + std::to_string(k + 1) + ") has a non-invertible diagonal");
    cas.k[k] = std::move(*q);
  }
  return cas;
}

CasimirCoeffs classical_casimir(const AlgebraSpec &spec) {
  spec.validate();
  CasimirCoeffs cas;
  cas.quantum = false;
  for (int i = 1; i <= spec.L() + 1; ++i) cas.m.push_back(spec.a(i).scaled(-2));
  cas.n = spec.beta.scaled(-2);
  cas.l1 = spec.epsilon.scaled(-2);
  cas.l2 = -spec.delta;
  cas.k.push_back(spec.zeta.scaled(2));
  for (int i = 1; i <= spec.M; ++i) cas.k.push_back(spec.l(i).scaled(Rational(2, i + 1)));
  return cas;
}

NCElement casimir_element(const CasimirCoeffs &cas, const RewriteSystem &rw) {
  NCElement K = NCElement::C(2);
  const NCElement B = NCElement::B();
  for (std::size_t i = 1; i <= cas.m.size(); ++i) {
    const NCElement Ai = NCElement::A(static_cast<int>(i));
    if (cas.quantum)
      K += anticommutator(Ai, B, rw).scaled(cas.m[i - 1].scaled(Rational(1, 2)));
    else
      K += NCElement::mono(static_cast<int>(i), 1, 0, cas.m[i - 1]);
  }
  if (cas.quantum)
    K += anticommutator(NCElement::A(), NCElement::B(2), rw).scaled(cas.n.scaled(Rational(1, 2)));
  else
    K += NCElement::mono(1, 2, 0, cas.n);
  for (std::size_t i = 1; i <= cas.k.size(); ++i) K += NCElement::A(static_cast<int>(i)).scaled(cas.k[i - 1]);
  K += B.scaled(cas.l1);
  K += NCElement::B(2).scaled(cas.l2);
  return K;
}

}  // namespace polyalg
