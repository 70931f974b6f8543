#include "polyalg/spectrum.hpp"

#include "polyalg/poly_gcd.hpp"
#include "polyalg/resultant.hpp"

#include <algorithm>
#include <functional>

namespace polyalg {

// ------------------------------------------------------------ intervals

std::optional<int> Interval::sign() const {
  if (lo.sign() > 0) return 1;
  if (hi.sign() < 0) return -1;
  if (lo.is_zero() && hi.is_zero()) return 0;
  return std::nullopt;
}

Interval operator+(const Interval &a, const Interval &b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval &a, const Interval &b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval &a, const Interval &b) {
  if (a.exact() && b.exact()) return Interval(a.lo * b.lo);
  const Rational c[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(std::begin(c), std::end(c)), *std::max_element(std::begin(c), std::end(c))};
}

Interval Interval::pow(int e) const {
  if (e < 0) {
    if (!sign() || *sign() == 0) throw UndecidedSign("inverse of an interval containing 0");
    return Interval(Rational(1) / hi, Rational(1) / lo).pow(-e);
  }
  if (exact()) return Interval(lo.pow(static_cast<unsigned>(e)));
  Rational a = lo.pow(static_cast<unsigned>(e)), b = hi.pow(static_cast<unsigned>(e));
  if (e % 2 == 1) return {a, b};
  if (lo.sign() >= 0) return {a, b};
  if (hi.sign() <= 0) return {b, a};
  return {Rational(0), std::max(a, b)};
}

Interval eval_interval(const CoeffPoly &p, const std::map<Var, Interval> &box) {
  Interval out(Rational(0));
  for (const auto &[m, c] : p.terms()) {
    Interval t(c);
    for (const auto &[v, e] : m.factors()) {
      auto it = box.find(v);
      if (it == box.end()) throw std::invalid_argument("no value for parameter " + v.name());
      t = t * it->second.pow(e);
    }
    out = out + t;
  }
  return out;
}

std::string to_string(const Interval &x) {
  if (x.exact()) return x.lo.str();
  return "[" + x.lo.str() + ", " + x.hi.str() + "]";
}

namespace {

Interval divide(const Interval &a, const Interval &b) { return a * b.pow(-1); }

// A real root of a square-free polynomial, refinable by bisection.
struct Root {
  Interval iv;
  UPoly f;

  void refine() {
    if (iv.exact()) return;
    const Rational mid = iv.midpoint();
    const int s = f.sign_at(mid);
    if (s == 0) {
      iv = Interval(mid);
    } else if (s == f.sign_at(iv.lo)) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
};

std::vector<std::pair<Root, int>> roots_of(const UPoly &p, const Rational &precision) {
  std::vector<std::pair<Root, int>> out;
  if (p.degree() < 1) return out;
  const UPoly sqf = p.monic();
  UPoly q, r;
  UPoly::divmod(sqf, UPoly::gcd(sqf, sqf.derivative()), q, r);
  for (const RealRoot &rr : real_roots(p, precision)) {
    Root root{rr.exact ? Interval(rr.lo) : Interval(rr.lo, rr.hi), q};
    out.emplace_back(root, rr.multiplicity);
  }
  return out;
}

int real_multiplicity(const std::vector<std::pair<Root, int>> &rs) {
  int n = 0;
  for (const auto &r : rs) n += r.second;
  return n;
}

// One algebraic solution of the two cutoff conditions.
struct Candidate {
  std::optional<Root> E;
  std::optional<Root> u;                        // u isolated directly
  std::optional<std::pair<CoeffPoly, CoeffPoly>> u_ratio;  // u = num(E) / den(E)
  int multiplicity = 1;
  bool has_u = false;

  std::map<Var, Interval> box(Var ev, Var uv) const {
    std::map<Var, Interval> b;
    if (E) b.emplace(ev, E->iv);
    if (u) b.emplace(uv, u->iv);
    if (u_ratio) b.emplace(uv, divide(eval_interval(u_ratio->first, b), eval_interval(u_ratio->second, b)));
    return b;
  }

  void refine() {
    if (E) E->refine();
    if (u) u->refine();
  }

  bool exact() const { return (!E || E->iv.exact()) && (!u || u->iv.exact()) && (!u_ratio || !E || E->iv.exact()); }
};

// Clears negative parameter powers: the result vanishes exactly where p does,
// away from poles.
CoeffPoly clear_laurent(const CoeffPoly &p) {
  if (p.is_zero()) return p;
  std::vector<Monomial::Factor> f;
  const Monomial low = p.min_monomial();
  for (const auto &[v, e] : low.factors())
    if (e < 0) f.emplace_back(v, -e);
  return f.empty() ? p : p.times_monomial(Monomial(std::move(f)));
}

CoeffPoly condition(const NRatFn &phi, int n) {
  return clear_laurent(phi.num().eval(CoeffPoly(n)));
}

UPoly upoly(const CoeffPoly &p, Var x) { return UPoly::from_coeff_poly(p, x); }

// Sign of Phi(n) over the candidate box; refines the candidate when the
// interval enclosure is not decisive. nullopt for a pole.
std::optional<int> sign_at(const NRatFn &phi, int n, Candidate &c, Var ev, Var uv) {
  const CoeffPoly num = phi.num().eval(CoeffPoly(n)), den = phi.den().eval(CoeffPoly(n));
  for (int iter = 0; iter < 400; ++iter) {
    try {
      const auto b = c.box(ev, uv);
      auto sd = eval_interval(den, b).sign();
      if (sd && *sd == 0) return std::nullopt;
      auto sn = eval_interval(num, b).sign();
      if (sd && sn) return *sn * *sd;
      if (c.exact()) {
        // exact zero through a Laurent power: a pole
        return std::nullopt;
      }
    } catch (const UndecidedSign &) {
      if (c.exact()) return std::nullopt;
    }
    c.refine();
  }
  throw UndecidedSign("cannot certify the sign of Phi(" + std::to_string(n) + ")");
}

// Turns a candidate into a solution, or nullopt when it hits a pole.
std::optional<RepSolution> finish(const ConstraintProblem &prob, int p, Candidate c, bool has_e) {
  for (int iter = 0; iter < 4000; ++iter) {
    const auto b = c.box(prob.energy, prob.casimir);
    bool wide = false;
    for (const auto &[v, iv] : b) wide = wide || iv.width() > prob.precision;
    if (!wide) break;
    c.refine();
  }
  RepSolution s;
  s.p = p;
  s.multiplicity = c.multiplicity;
  // a cutoff point may not sit on a pole of Phi
  for (int n : {0, p + 1}) {
    const CoeffPoly den = prob.phi.den().eval(CoeffPoly(n));
    std::optional<int> sd;
    for (int iter = 0; iter < 400 && !sd; ++iter) {
      sd = eval_interval(den, c.box(prob.energy, prob.casimir)).sign();
      if (!sd && c.exact()) sd = 0;
      if (!sd) c.refine();
    }
    if (!sd) throw UndecidedSign("cannot separate Phi(" + std::to_string(n) + ") from a pole");
    if (*sd == 0) return std::nullopt;
  }
  s.physical = true;
  for (int n = 1; n <= p; ++n) {
    auto sg = sign_at(prob.phi, n, c, prob.energy, prob.casimir);
    if (!sg) return std::nullopt;
    s.certificate.push_back(*sg);
    s.physical = s.physical && *sg > 0;
  }
  const auto b = c.box(prob.energy, prob.casimir);
  if (has_e) s.E = b.at(prob.energy);
  if (c.has_u) s.u = b.at(prob.casimir);
  return s;
}

bool involves(const NRatFn &f, Var v) {
  for (const auto &c : f.num().coeffs())
    if (c.contains(v)) return true;
  for (const auto &c : f.den().coeffs())
    if (c.contains(v)) return true;
  return false;
}

void check_parameters(const ConstraintProblem &prob) {
  auto ok = [&](const CoeffPoly &c) {
    for (Var v : c.vars())
      if (!(v == prob.energy) && !(v == prob.casimir))
        throw std::invalid_argument("Phi has the free parameter " + v.name() + "; assign it a rational value");
  };
  for (const auto &c : prob.phi.num().coeffs()) ok(c);
  for (const auto &c : prob.phi.den().coeffs()) ok(c);
}

// Roots of the univariate conditions f0 = f1 = 0 in x (either may be 0).
std::vector<std::pair<Root, int>> common_roots(const CoeffPoly &f0, const CoeffPoly &f1, Var x,
                                               const Rational &precision, BranchReport &rep) {
  UPoly g;
  if (f0.is_zero()) {
    g = upoly(f1, x);
  } else if (f1.is_zero()) {
    g = upoly(f0, x);
  } else {
    g = UPoly::gcd(upoly(f0, x), upoly(f1, x));
  }
  rep.eliminant = g.to_coeff_poly(x);
  auto rs = roots_of(g, precision);
  rep.real_roots = real_multiplicity(rs);
  rep.nonreal_roots = std::max(0, g.degree()) - rep.real_roots;
  return rs;
}

std::vector<Candidate> candidates(const ConstraintProblem &prob, int p, bool has_e, bool has_u, BranchReport &rep) {
  const Var ev = prob.energy, uv = prob.casimir;
  const CoeffPoly f0 = condition(prob.phi, 0), f1 = condition(prob.phi, p + 1);
  std::vector<Candidate> out;

  if (f0.is_zero() && f1.is_zero()) {
    if (has_e || has_u) throw EliminationDegenerate("both cutoff conditions vanish identically", CoeffPoly());
    out.emplace_back();
    return out;
  }
  if (!has_e && !has_u) return out;  // a nonzero number

  if (!has_u || !has_e) {
    const Var x = has_e ? ev : uv;
    for (auto &[r, mult] : common_roots(f0, f1, x, prob.precision, rep)) {
      Candidate c;
      (has_e ? c.E : c.u) = r;
      c.has_u = has_u;
      c.multiplicity = mult;
      out.push_back(c);
    }
    return out;
  }

  // both E and u
  const int d0 = f0.degree(uv), d1 = f1.degree(uv);
  if (f0.is_zero() || f1.is_zero() || (d0 == 0 && d1 == 0)) {
    const CoeffPoly rest = f0.is_zero() ? f1 : f1.is_zero() ? f0 : gcd(f0, f1);
    throw EliminationDegenerate("the cutoff conditions do not determine u", rest);
  }
  CoeffPoly R;
  if (d0 == 0) {
    R = f0;
  } else if (d1 == 0) {
    R = f1;
  } else {
    try {
      R = eliminate(f0, f1, uv);
    } catch (const ZeroResultant &) {
      throw EliminationDegenerate("the cutoff conditions share a factor", gcd(f0, f1));
    }
  }
  rep.eliminant = R;
  const UPoly RE = upoly(R, ev);
  auto rs = roots_of(RE, prob.precision);
  rep.real_roots = real_multiplicity(rs);
  rep.nonreal_roots = std::max(0, RE.degree()) - rep.real_roots;

  for (auto &[r, mult] : rs) {
    if (r.iv.exact()) {
      const std::map<Var, CoeffPoly> at{{ev, CoeffPoly(r.iv.lo)}};
      BranchReport scratch;
      const CoeffPoly g0 = clear_laurent(f0.substitute(at)), g1 = clear_laurent(f1.substitute(at));
      if (g0.is_zero() && g1.is_zero())
        throw EliminationDegenerate("u is free at E = " + r.iv.lo.str(), CoeffPoly(Monomial::of(ev), Rational(1)) - CoeffPoly(r.iv.lo));
      for (auto &[ru, mu] : common_roots(g0, g1, uv, prob.precision, scratch)) {
        Candidate c;
        c.E = r;
        c.u = ru;
        c.has_u = true;
        c.multiplicity = mult;
        out.push_back(c);
      }
      continue;
    }
    // irrational E: u from a linear condition or the first subresultant
    std::pair<CoeffPoly, CoeffPoly> ratio;
    const CoeffPoly &lin = d0 == 1 ? f0 : f1;
    if (d0 == 1 || d1 == 1) {
      auto parts = lin.collect(uv);
      ratio = {-parts[0], parts[1]};
    } else if (d0 == 0 || d1 == 0) {
      throw UndecidedSign("u is a root of a nonlinear polynomial over an irrational E");
    } else {
      auto [s1, s0] = first_subresultant(f0, f1, uv);
      ratio = {-s0, s1};
    }
    // the denominator must be nonzero at the root
    const UPoly den = upoly(clear_laurent(ratio.second), ev);
    if (den.is_zero() || UPoly::gcd(den, r.f).degree() > 0) {
      const UPoly g = den.is_zero() ? r.f : UPoly::gcd(den, r.f);
      if (g.sign_at(r.iv.lo) != g.sign_at(r.iv.hi) || g.sign_at(r.iv.lo) == 0)
        throw EliminationDegenerate("u is not determined by a linear relation at an irrational E", ratio.second);
    }
    Candidate c;
    c.E = r;
    c.u_ratio = ratio;
    c.has_u = true;
    c.multiplicity = mult;
    for (int iter = 0; iter < 400; ++iter) {
      if (eval_interval(ratio.second, {{ev, c.E->iv}}).sign()) break;
      c.E->refine();
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

SpectrumReport solve_reps_report(const ConstraintProblem &prob) {
  if (prob.pmax < 0) throw std::invalid_argument("pmax must be nonnegative");
  if (prob.precision.sign() <= 0) throw std::invalid_argument("precision must be positive");
  check_parameters(prob);
  const bool has_e = involves(prob.phi, prob.energy), has_u = involves(prob.phi, prob.casimir);

  SpectrumReport out;
  for (int p = 0; p <= prob.pmax; ++p) {
    BranchReport rep;
    rep.p = p;
    for (Candidate &c : candidates(prob, p, has_e, has_u, rep)) {
      auto s = finish(prob, p, c, has_e);
      if (s) {
        out.solutions.push_back(*s);
      } else {
        ++rep.poles;
      }
    }
    out.branches.push_back(rep);
  }
  std::stable_sort(out.solutions.begin(), out.solutions.end(), [](const RepSolution &a, const RepSolution &b) {
    if (a.p != b.p) return a.p < b.p;
    if (a.E && b.E && !(a.E->lo == b.E->lo)) return a.E->lo < b.E->lo;
    if (a.u && b.u) return a.u->lo < b.u->lo;
    return false;
  });
  return out;
}

std::vector<RepSolution> solve_reps(const ConstraintProblem &prob) { return solve_reps_report(prob).solutions; }

UnitaryCheck check_unitary(const NRatFn &phi, int p) { return check_unitary(phi, p, {}); }

UnitaryCheck check_unitary(const NRatFn &phi, int p, const std::map<Var, Interval> &box) {
  UnitaryCheck out;
  out.unitary = true;
  for (int n = 1; n <= p; ++n) {
    const CoeffPoly num = phi.num().eval(CoeffPoly(n)), den = phi.den().eval(CoeffPoly(n));
    auto sd = eval_interval(den, box).sign();
    if (sd && *sd == 0) throw std::domain_error("Phi has a pole at N = " + std::to_string(n));
    auto sn = eval_interval(num, box).sign();
    if (!sd || !sn) throw UndecidedSign("sign of Phi(" + std::to_string(n) + ") undecided; refine the intervals");
    out.signs.push_back(*sn * *sd);
    out.unitary = out.unitary && *sn * *sd > 0;
  }
  return out;
}

}  // namespace polyalg
