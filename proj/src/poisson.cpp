#include "polyalg/poisson.hpp"

namespace polyalg {

Var PoissonAlgebra::A() { static const Var v("A"); return v; }
Var PoissonAlgebra::B() { static const Var v("B"); return v; }
Var PoissonAlgebra::C() { static const Var v("C"); return v; }

namespace {
CoeffPoly pv(Var v, int e = 1) { return CoeffPoly::var(v.name(), e); }
}  // namespace

PoissonAlgebra::PoissonAlgebra(const AlgebraSpec &spec) {
  spec.validate();
  const Var a = A(), b = B();
  ab_ = pv(C());
  ac_ = spec.delta * pv(b) + spec.epsilon + (spec.beta * pv(a) * pv(b)).scaled(2);
  for (int i = 1; i <= spec.L() + 1; ++i) ac_ += spec.a(i) * pv(a, i);
  bc_ = spec.rho * pv(b, 2) + spec.eta * pv(b) + spec.zeta;
  for (int i = 1; i <= spec.M; ++i) bc_ += spec.l(i) * pv(a, i);
  for (int i = 1; i <= spec.L(); ++i) bc_ += (spec.w(i) * pv(a, i) * pv(b)).scaled(2);
}

CoeffPoly PoissonAlgebra::bracket(const CoeffPoly &f, const CoeffPoly &g) const {
  const Var a = A(), b = B(), c = C();
  const CoeffPoly fa = f.derivative(a), fb = f.derivative(b), fc = f.derivative(c);
  const CoeffPoly ga = g.derivative(a), gb = g.derivative(b), gc = g.derivative(c);
  return (fa * gb - fb * ga) * ab_ + (fa * gc - fc * ga) * ac_ + (fb * gc - fc * gb) * bc_;
}

CoeffPoly PoissonAlgebra::jacobi_residual() const {
  const CoeffPoly a = pv(A()), b = pv(B()), c = pv(C());
  return bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
}

CoeffPoly casimir_poly(const CasimirCoeffs &cas) {
  const CoeffPoly a = pv(PoissonAlgebra::A()), b = pv(PoissonAlgebra::B()), c = pv(PoissonAlgebra::C());
  CoeffPoly K = c * c + cas.n * a * b * b + cas.l1 * b + cas.l2 * b * b;
  for (std::size_t i = 1; i <= cas.m.size(); ++i) K += cas.m[i - 1] * a.pow(i) * b;
  for (std::size_t i = 1; i <= cas.k.size(); ++i) K += cas.k[i - 1] * a.pow(i);
  return K;
}

}  // namespace polyalg
