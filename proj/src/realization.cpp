#include "polyalg/realization.hpp"

#include "polyalg/poisson.hpp"
#include "polyalg/poly_gcd.hpp"
#include "polyalg/rewrite.hpp"

namespace polyalg {

namespace {

std::optional<mpz_class> isqrt_exact(const mpz_class &v) {
  if (v < 0) return std::nullopt;
  mpz_class r = sqrt(v);
  if (r * r != v) return std::nullopt;
  return r;
}

// A(N)^i, i = 0..n
std::vector<NRatFn> powers(const NRatFn &a, int n) {
  std::vector<NRatFn> p{NRatFn(1)};
  for (int i = 1; i <= n; ++i) p.push_back(p.back() * a);
  return p;
}

NRatFn R(const CoeffPoly &c) { return NRatFn(c); }

}  // namespace

Branch branch_of(const CoeffPoly &beta) { return beta.is_zero() ? Branch::BetaZero : Branch::BetaNonzero; }

CoeffPoly sqrt_exact(const CoeffPoly &p) {
  if (p.is_zero()) return {};
  if (p.is_monomial()) {
    const auto &[m, c] = p.leading_term();
    auto n = isqrt_exact(c.num()), d = isqrt_exact(c.den());
    bool even = true;
    std::vector<Monomial::Factor> half;
    for (const auto &[v, e] : m.factors()) {
      if (e % 2) even = false;
      half.emplace_back(v, e / 2);
    }
    if (n && d && even) return CoeffPoly(Monomial(half), Rational(*n, *d));
  }
  throw std::invalid_argument("no exact square root of " + p.str() + "; write delta as d^2");
}

NPoly build_AN(const CoeffPoly &beta, const CoeffPoly &delta, const CoeffPoly &c1, OscMode mode) {
  const NPoly N = NPoly::N();
  if (branch_of(beta) == Branch::BetaZero) return N.scaled(sqrt_exact(delta)) + NPoly(c1);
  auto inv = exact_divide(CoeffPoly(1), beta);
  if (!inv) throw std::invalid_argument("beta must be a monomial to divide by it: " + beta.str());
  const NPoly t = N + NPoly(c1);
  NPoly A = (t * t).scaled(beta.scaled(Rational(1, 2))) - NPoly((delta * *inv).scaled(Rational(1, 2)));
  if (mode == OscMode::Quantum) A -= NPoly(beta.scaled(Rational(1, 8)));
  return A;
}

NRatFn build_bN(const AlgebraSpec &spec, const NPoly &A) {
  const NRatFn a(A);
  const NRatFn den = R(spec.delta) + a * R(spec.beta.scaled(2));
  if (den.is_zero()) throw ZeroDenominator("delta + 2 beta A(N) vanishes identically");
  NRatFn num = R(spec.epsilon);
  auto p = powers(a, spec.L() + 1);
  for (int i = 1; i <= spec.L() + 1; ++i) num += R(spec.a(i)) * p[i];
  return -num / den;
}

NRatFn jacobi_residual_realized(const AlgebraSpec &spec, const NPoly &A) {
  const NRatFn a0(A), a1(A.shift(1)), da = a1 - a0;
  auto p0 = powers(a0, spec.L() + 1), p1 = powers(a1, spec.L() + 1);
  NRatFn r = R(spec.eta) * da;
  for (int i = 1; i <= spec.L(); ++i) r += R(spec.w(i)) * da * (p0[i] + p1[i]);
  for (int i = 1; i <= spec.L() + 1; ++i) r += R(spec.a(i)) * (p1[i] - p0[i]);
  return r;
}

std::vector<std::pair<std::string, NRatFn>> quantum_constraint_residuals(const AlgebraSpec &spec, const NPoly &A,
                                                                          const NRatFn &b) {
  const NRatFn beta = R(spec.beta), delta = R(spec.delta), eta = R(spec.eta), eps = R(spec.epsilon);
  const NRatFn a0(A), a1(A.shift(1)), a2(A.shift(2));
  const NRatFn da0 = a1 - a0, da1 = a2 - a1;
  const NRatFn b0 = b, b1 = b.shift(1);
  const int L = spec.L();
  auto p0 = powers(a0, L + 1), p1 = powers(a1, L + 1);

  std::vector<std::pair<std::string, NRatFn>> out;
  out.emplace_back("qsolcAB1", da0 * da0 - delta - beta * (a0 + a1));
  NRatFn c2 = delta * b0 + eps + NRatFn(2) * beta * a0 * b0;
  for (int i = 1; i <= L + 1; ++i) c2 += R(spec.a(i)) * p0[i];
  out.emplace_back("qsolcAB2", c2);
  out.emplace_back("jacobireal", jacobi_residual_realized(spec, A));
  out.emplace_back("qeq3c1", da0 - da1 + beta);

  NRatFn e2 = da0 * (b1 - b0) + beta * (b1 + b0) - eta;
  for (int i = 1; i <= L; ++i) e2 -= R(spec.w(i)) * (p1[i] + p0[i]);
  out.emplace_back("qeq3c2", e2);

  out.emplace_back("qcasimirc1", da1 * da0 - beta * (a2 + a0) + beta * beta - delta);

  NRatFn k2 = -beta * (a1 + a0) * (b1 + b0) - NRatFn(2) * eps - beta * eta + (beta * beta - delta) * (b1 + b0);
  for (int i = 1; i <= L + 1; ++i) k2 -= R(spec.a(i)) * (p1[i] + p0[i]);
  for (int i = 1; i <= L; ++i) k2 -= beta * R(spec.w(i)) * (p1[i] + p0[i]);
  out.emplace_back("qcasimirc2", k2);
  return out;
}

PsiSystem psi_system(const AlgebraSpec &spec, const CasimirCoeffs &cas, const NPoly &A, const NRatFn &b) {
  const NRatFn beta = R(spec.beta);
  const NRatFn am(A.shift(-1)), a0(A), a1(A.shift(1));
  const NRatFn dam = a0 - am, da0 = a1 - a0;
  auto p0 = powers(a0, std::max<int>(spec.M, static_cast<int>(cas.k.size())));

  PsiSystem s;
  // [B,C] degree 0: -2 DA(N-1) Psi(N) + 2 DA(N) Psi(N+1)
  //   = zeta + sum lambda_i A^i - beta (b^2 + Psi(N) + Psi(N+1)) + eta b + sum 2 omega_j A^j b
  s.a11 = NRatFn(-2) * dam + beta;
  s.a12 = NRatFn(2) * da0 + beta;
  s.r1 = R(spec.zeta) - beta * b * b + R(spec.eta) * b;
  for (int i = 1; i <= spec.M; ++i) s.r1 += R(spec.l(i)) * p0[i];
  for (int j = 1; j <= spec.L(); ++j) s.r1 += NRatFn(2) * R(spec.w(j)) * p0[j] * b;

  // K degree 0: -DA(N-1)^2 Psi(N) - DA(N)^2 Psi(N+1) + (n A + l2)(b^2 + Psi(N) + Psi(N+1))
  //   + sum m_i A^i b + sum k_i A^i + l1 b
  const NRatFn nA_l2 = R(cas.n) * a0 + R(cas.l2);
  s.a21 = -dam * dam + nA_l2;
  s.a22 = -da0 * da0 + nA_l2;
  s.r2 = nA_l2 * b * b + R(cas.l1) * b;
  for (std::size_t i = 1; i <= cas.m.size(); ++i) s.r2 += R(cas.m[i - 1]) * p0[i] * b;
  for (std::size_t i = 1; i <= cas.k.size(); ++i) s.r2 += R(cas.k[i - 1]) * p0[i];
  return s;
}

StructureSolution solve_structure_function(const AlgebraSpec &spec, const CasimirCoeffs &cas, const NPoly &A,
                                           const NRatFn &b, const NRatFn &rho2, const CoeffPoly &u) {
  const PsiSystem s = psi_system(spec, cas, A, b);
  const NRatFn det = s.a11 * s.a22 - s.a12 * s.a21;
  if (det.is_zero()) throw SingularSystem("the Psi system is singular for this A(N)");
  const NRatFn r2 = R(u) - s.r2;
  StructureSolution out;
  out.psi = (s.r1 * s.a22 - s.a12 * r2) / det;
  out.psi_next = (s.a11 * r2 - s.a21 * s.r1) / det;
  out.shift_residual = out.psi_next - out.psi.shift(1);
  out.shift_consistent = out.shift_residual.is_zero();
  out.phi = out.psi / rho2.shift(-1);
  return out;
}

NRatFn telescope_structure_function(const AlgebraSpec &spec, const NPoly &A, const NRatFn &b, const CoeffPoly &psi0) {
  if (branch_of(spec.beta) != Branch::BetaZero) throw std::invalid_argument("telescoping needs beta = 0");
  const NRatFn da = NRatFn(A.shift(1)) - NRatFn(A);
  if (!da.is_constant()) throw std::invalid_argument("telescoping needs a constant Delta A");
  // with beta = 0: 2 DA (Psi(N+1) - Psi(N)) = r1(N)
  AlgebraSpec s = spec;
  CasimirCoeffs none;
  const NRatFn step = psi_system(s, none, A, b).r1 / (NRatFn(2) * da);
  if (!step.is_polynomial()) throw NonIntegrable("difference equation with a non-polynomial right side");
  return NRatFn(step.as_polynomial().antidifference()) + R(psi0);
}

NRatFn polynomialize(const NRatFn &psi) {
  // rho(N-1)^2 = 1/den(N)  <=>  rho(N)^2 = 1/den(N+1)
  return NRatFn(NPoly(1), psi.den().shift(1));
}

NRatFn integrate(const NRatFn &f) {
  if (f.is_zero()) return {};
  if (f.is_polynomial()) return NRatFn(f.as_polynomial().antiderivative());
  const NPoly &den = f.den();
  const int k = den.degree();
  const CoeffPoly &lc = den.leading();
  auto c = exact_divide(den.coeff(k - 1), lc.scaled(Rational(k)));
  if (!c) throw NonIntegrable("denominator " + den.str() + " is not a power of a linear factor");
  const NPoly t = NPoly::N() + NPoly(*c);
  if (!(t.pow(k).scaled(lc) == den)) throw NonIntegrable("denominator " + den.str() + " is not a power of a linear factor");
  auto inv = exact_divide(CoeffPoly(1), lc);
  if (!inv) throw NonIntegrable("leading coefficient " + lc.str() + " is not invertible");
  // f = Q(t) / (lc t^k); integrate termwise in t
  const NPoly Q = f.num().translate(-*c);
  std::vector<CoeffPoly> out(Q.degree() + 2);
  for (int j = 0; j <= Q.degree(); ++j) {
    if (Q.coeff(j).is_zero()) continue;
    const int e = j - k + 1;
    if (e == 0) throw NonIntegrable("antiderivative has a logarithm");
    out[j + 1] = (Q.coeff(j) * *inv).scaled(Rational(1, e));
  }
  // result = sum out[j+1] t^{j+1-k} = (sum out[i] t^i) / t^k
  NPoly num(out);
  return NRatFn(num.translate(*c), t.pow(k));
}

NRatFn classical_G(const AlgebraSpec &spec, const NPoly &A, const NRatFn &b, const NRatFn &rho2, const CoeffPoly &g0) {
  const NRatFn a0(A), ap(A.derivative());
  if (ap.is_zero()) throw std::invalid_argument("A'(N) vanishes identically");
  NRatFn rhs = R(spec.zeta) + ap * b.derivative() * b + R(spec.beta) * b * b;
  auto p = powers(a0, spec.M);
  for (int i = 1; i <= spec.M; ++i) rhs += R(spec.l(i)) * p[i];
  const NRatFn H = (integrate(ap * rhs) + R(g0)) / (ap * ap);
  return H / (NRatFn(2) * rho2);
}

QuantumRealization realize_quantum(const AlgebraSpec &spec, const CasimirCoeffs &cas, const RealizeOptions &opt) {
  QuantumRealization r;
  r.c1 = opt.c1;
  r.u = opt.u;
  r.branch = branch_of(spec.beta);
  r.A = build_AN(spec.beta, spec.delta, opt.c1, OscMode::Quantum);
  r.b = build_bN(spec, r.A);
  r.solution = solve_structure_function(spec, cas, r.A, r.b, opt.rho2, opt.u);
  r.psi = r.solution.psi;
  r.rho2 = opt.polynomialize ? polynomialize(r.psi) : opt.rho2;
  r.phi = r.psi / r.rho2.shift(-1);
  r.solution.phi = r.phi;
  return r;
}

ClassicalRealization realize_classical(const AlgebraSpec &spec, const RealizeOptions &opt) {
  ClassicalRealization r;
  r.c1 = opt.c1;
  r.g0 = opt.g0;
  r.branch = branch_of(spec.beta);
  r.A = build_AN(spec.beta, spec.delta, opt.c1, OscMode::Classical);
  r.b = build_bN(spec, r.A);
  r.rho2 = opt.rho2;
  r.G = classical_G(spec, r.A, r.b, r.rho2, opt.g0);
  r.phi = r.G.derivative();
  return r;
}

// ------------------------------------------------------------ verification

bool VerificationReport::all_passed() const {
  for (const auto &c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

const Check *VerificationReport::find(const std::string &name) const {
  for (const auto &c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

void add_check(VerificationReport &rep, std::string name, const OscElement &residual) {
  rep.checks.push_back({std::move(name), residual.is_zero(), residual.str()});
}

void add_check(VerificationReport &rep, std::string name, const NRatFn &residual) {
  rep.checks.push_back({std::move(name), residual.is_zero(), residual.str()});
}

// K must be a constant: no ladder terms and no N
void check_scalar(VerificationReport &rep, const OscElement &K, const CoeffPoly *expected) {
  OscElement ladders = K;
  ladders -= OscElement(K.context(), K.coeff(0));
  add_check(rep, "K has no ladder terms", ladders);
  const NRatFn k0 = K.coeff(0);
  add_check(rep, "K is N-free", k0.derivative());
  if (k0.is_constant()) rep.casimir_value = k0.str();
  if (expected) add_check(rep, "K = u", k0 - NRatFn(*expected));
}

NCElement from_commutative(const CoeffPoly &p) {
  NCElement out;
  const Var a = PoissonAlgebra::A(), b = PoissonAlgebra::B(), c = PoissonAlgebra::C();
  for (const auto &[m, coef] : p.terms()) {
    NCMono mono{m.exponent(a), m.exponent(b), m.exponent(c)};
    out.add_term(mono, CoeffPoly(m.without(a).without(b).without(c), coef));
  }
  return out;
}

}  // namespace

std::vector<OscElement> quantum_generators(const QuantumRealization &r) {
  auto ctx = std::make_shared<const OscContext>(OscContext{OscMode::Quantum, r.psi});
  const OscElement A(ctx, NRatFn(r.A));
  const OscElement B = OscElement(ctx, r.b) + OscElement::raise(ctx) + OscElement::lower(ctx);
  const OscElement dA(ctx, NRatFn(r.A.difference()));
  const OscElement C = OscElement::raise(ctx) * dA - dA * OscElement::lower(ctx);
  return {A, B, C};
}

std::vector<OscElement> classical_generators(const ClassicalRealization &r) {
  // gauge b~ = rho b: b~ b~^+ = rho^2 G
  auto ctx = std::make_shared<const OscContext>(OscContext{OscMode::Classical, r.rho2 * r.G});
  const OscElement A(ctx, NRatFn(r.A));
  const OscElement B = OscElement(ctx, r.b) + OscElement::raise(ctx) + OscElement::lower(ctx);
  const NRatFn ap(r.A.derivative());
  const OscElement C = OscElement(ctx, ap, 1) - OscElement(ctx, ap, -1);
  return {A, B, C};
}

VerificationReport verify_realization(const QuantumRealization &r, const AlgebraSpec &spec, const CasimirCoeffs &cas) {
  VerificationReport rep;
  auto g = quantum_generators(r);
  const OscElement &A = g[0], &B = g[1], &C = g[2];
  RewriteSystem rw(spec);

  add_check(rep, "[A,B] = C", osc_commutator(A, B) - C);
  add_check(rep, "[A,C] = rhs_ac", osc_commutator(A, C) - osc_evaluate(rw.rhs_ac(), A, B, C));
  add_check(rep, "[B,C] = rhs_bc", osc_commutator(B, C) - osc_evaluate(rw.rhs_bc(), A, B, C));
  check_scalar(rep, osc_evaluate(casimir_element(cas, rw), A, B, C), &r.u);

  for (const auto &[name, res] : quantum_constraint_residuals(spec, r.A, r.b)) add_check(rep, name, res);
  const PsiSystem s = psi_system(spec, cas, r.A, r.b);
  const NRatFn psi1 = r.psi.shift(1);
  add_check(rep, "qeq3c3", s.a11 * r.psi + s.a12 * psi1 - s.r1);
  add_check(rep, "qcasimirc3", s.a21 * r.psi + s.a22 * psi1 + s.r2 - NRatFn(r.u));
  add_check(rep, "Psi shift consistency", r.solution.shift_residual);
  add_check(rep, "Phi rho(N-1)^2 = Psi", r.phi * r.rho2.shift(-1) - r.psi);
  return rep;
}

VerificationReport verify_realization(const ClassicalRealization &r, const AlgebraSpec &spec,
                                      const CasimirCoeffs &cas) {
  VerificationReport rep;
  auto g = classical_generators(r);
  const OscElement &A = g[0], &B = g[1], &C = g[2];
  PoissonAlgebra pa(spec);

  add_check(rep, "{A,B} = C", osc_poisson(A, B) - C);
  add_check(rep, "{A,C} = rhs_ac", osc_poisson(A, C) - osc_evaluate(from_commutative(pa.ac()), A, B, C));
  add_check(rep, "{B,C} = rhs_bc", osc_poisson(B, C) - osc_evaluate(from_commutative(pa.bc()), A, B, C));
  check_scalar(rep, osc_evaluate(from_commutative(casimir_poly(cas)), A, B, C), nullptr);

  const NRatFn ap(r.A.derivative());
  add_check(rep, "solcAB1", ap * ap - NRatFn(spec.delta) - NRatFn(spec.beta.scaled(2)) * NRatFn(r.A));
  NRatFn c2 = NRatFn(spec.delta) * r.b + NRatFn(spec.epsilon) + NRatFn(spec.beta.scaled(2)) * NRatFn(r.A) * r.b;
  auto p = powers(NRatFn(r.A), spec.L() + 1);
  for (int i = 1; i <= spec.L() + 1; ++i) c2 += NRatFn(spec.a(i)) * p[i];
  add_check(rep, "solcAB2", c2);
  add_check(rep, "Phi = G'", r.phi - r.G.derivative());
  return rep;
}

}  // namespace polyalg
