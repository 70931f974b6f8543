#include "doctest.h"
#include "gen.hpp"
#include "spectrum_oracle.hpp"

#include "polyalg/realization.hpp"
#include "polyalg/spectrum.hpp"

using namespace polyalg;

namespace {

NRatFn F(const char *s) { return NRatFn(NPoly::parse(s)); }
CoeffPoly P(const char *s) { return CoeffPoly::parse(s); }

ConstraintProblem problem(const NRatFn &phi, int pmax) {
  ConstraintProblem c;
  c.phi = phi;
  c.pmax = pmax;
  return c;
}

// Psi of the Cartesian M=1 realization with the given numeric instance.
NRatFn cartesian_phi(const char *d, const char *c1, const char *l1, const char *z) {
  AlgebraSpec s = closed(AlgebraSpec::cartesian(1));
  QuantumRealization q = realize_quantum(s, quantum_casimir(s));
  return q.phi.substitute({{Var("d"), P(d)}, {Var("c1"), P(c1)}, {Var("l1"), P(l1)}, {Var("z"), P(z)}});
}

bool all_positive(const RepSolution &s) {
  for (int x : s.certificate)
    if (x != 1) return false;
  return static_cast<int>(s.certificate.size()) == s.p;
}

}  // namespace

TEST_CASE("interval arithmetic") {
  Interval a(Rational(-1), Rational(2)), b(Rational(3), Rational(4));
  CHECK(a * b == Interval(Rational(-4), Rational(8)));
  CHECK(a.pow(2) == Interval(Rational(0), Rational(4)));
  CHECK(Interval(Rational(-3), Rational(-2)).pow(2) == Interval(Rational(4), Rational(9)));
  CHECK(b.pow(-1) == Interval(Rational(1, 4), Rational(1, 3)));
  CHECK_THROWS_AS(a.pow(-1), UndecidedSign);
  CHECK_FALSE(a.sign().has_value());
  CHECK(b.sign() == 1);
  CHECK(Interval(Rational(0)).sign() == 0);

  // enclosures contain every point value
  testgen::Gen g(8);
  for (int t = 0; t < 30; ++t) {
    CoeffPoly p = g.coeff({"E", "u"}, 3, 2);
    Rational e(g.integer(-5, 5), 3), v(g.integer(-5, 5), 2);
    Interval ie(e - Rational(1, 7), e + Rational(1, 5)), iv(v, v + Rational(1, 3));
    Rational val = p.evaluate({{Var("E"), e}, {Var("u"), v}});
    CHECK(eval_interval(p, {{Var("E"), ie}, {Var("u"), iv}}).contains(val));
    CHECK(eval_interval(p, {{Var("E"), Interval(e)}, {Var("u"), Interval(v)}}) == Interval(val));
  }
}

TEST_CASE("check_unitary") {
  auto ok = check_unitary(F("N*(4 - N)"), 3);
  CHECK(ok.unitary);
  CHECK(ok.signs == std::vector<int>{1, 1, 1});
  auto bad = check_unitary(F("N*(2 - N)"), 3);
  CHECK_FALSE(bad.unitary);
  CHECK(bad.signs == std::vector<int>{1, 0, -1});
  CHECK_THROWS_AS(check_unitary(F("N*(E - N)"), 2, {{Var("E"), Interval(Rational(0), Rational(4))}}), UndecidedSign);
  CHECK(check_unitary(F("N*(E - N)"), 2, {{Var("E"), Interval(Rational(3), Rational(4))}}).unitary);
}

TEST_CASE("synthetic N(E - N)") {
  auto sols = solve_reps(problem(F("N*(E - N)"), 5));
  REQUIRE(sols.size() == 6);
  for (int p = 0; p <= 5; ++p) {
    const RepSolution &s = sols[p];
    CHECK(s.p == p);
    CHECK(s.dimension() == p + 1);
    REQUIRE(s.E);
    CHECK(*s.E == Interval(Rational(p + 1)));
    CHECK_FALSE(s.u);
    CHECK(all_positive(s));
    CHECK(s.physical);
  }

  // raising pmax keeps what was found
  auto more = solve_reps(problem(F("N*(E - N)"), 7));
  REQUIRE(more.size() == 8);
  for (int p = 0; p <= 5; ++p) CHECK(*more[p].E == *sols[p].E);
}

TEST_CASE("no parameters") {
  CHECK(solve_reps(problem(F("N*(N - 5/2)"), 6)).empty());
  auto s = solve_reps(problem(F("N*(3 - N)"), 6));
  REQUIRE(s.size() == 1);
  CHECK(s[0].p == 2);
  CHECK_FALSE(s[0].E);
  CHECK(s[0].physical);
  // N(N-3) closes at p = 2 but is negative inside
  auto neg = solve_reps(problem(F("N*(N - 3)"), 6));
  REQUIRE(neg.size() == 1);
  CHECK_FALSE(neg[0].physical);
  CHECK(neg[0].certificate == std::vector<int>{-1, -1});
}

TEST_CASE("irrational energies") {
  auto sols = solve_reps(problem(F("N*(E^2 - N)"), 3));
  REQUIRE(sols.size() == 8);
  for (const auto &s : sols) {
    REQUIRE(s.E);
    CHECK(s.physical);
    CHECK(s.E->width() <= default_precision());
    // E^2 = p + 1 inside the interval
    Interval sq = s.E->pow(2);
    CHECK(sq.contains(Rational(s.p + 1)));
  }
  CHECK(sols[0].E->exact());
  CHECK(sols[0].E->lo == Rational(-1));
  CHECK_FALSE(sols[2].E->exact());
  CHECK(sols[2].E->hi < Rational(0));

  SpectrumReport rep = solve_reps_report(problem(F("N*(E^2 + 1 + N)"), 0));
  CHECK(rep.solutions.empty());
  REQUIRE(rep.branches.size() == 1);
  CHECK(rep.branches[0].nonreal_roots == 2);
}

TEST_CASE("energy and Casimir together") {
  // (N - u)(E^2 - N): Phi(0) = -u E^2
  auto sols = solve_reps(problem(F("(N - u)*(E^2 - N)"), 2));
  for (const auto &s : sols) {
    REQUIRE(s.E);
    REQUIRE(s.u);
    const std::map<Var, Interval> box{{Var("E"), *s.E}, {Var("u"), *s.u}};
    const NRatFn phi = F("(N - u)*(E^2 - N)");
    CHECK(eval_interval(phi.num().eval(CoeffPoly(0)), box).contains(Rational(0)));
    CHECK(eval_interval(phi.num().eval(CoeffPoly(s.p + 1)), box).contains(Rational(0)));
    auto ref = oracle::cutoff_pairs(phi, s.p);
    bool found = false;
    for (const auto &pr : ref) found = found || (oracle::overlaps(pr.E, *s.E) && oracle::overlaps(pr.u, *s.u));
    CHECK(found);
  }
  // E = 0, u = p + 1 and E = +-sqrt(p+1), u = 0 for each p
  CHECK(sols.size() == 9);
}

TEST_CASE("degenerate eliminations") {
  CHECK_THROWS_AS(solve_reps(problem(F("(E - u)*(N + 1)"), 1)), EliminationDegenerate);
  try {
    solve_reps(problem(F("(E - u)*(N + 1)"), 1));
  } catch (const EliminationDegenerate &e) {
    CHECK((e.factor == P("E - u") || e.factor == P("u - E")));
  }
  CHECK_THROWS_AS(solve_reps(problem(F("N*(E + u - N)"), 1)), EliminationDegenerate);
  CHECK_THROWS_AS(solve_reps(problem(F("N*(E - N) + q"), 1)), std::invalid_argument);
}

TEST_CASE("poles are not representations") {
  // for p = 1 the cutoff E = 2 puts N = 2 on the pole of Phi
  NRatFn phi = NRatFn(NPoly::parse("N*(E - N)"), NPoly::parse("N + E - 4"));
  SpectrumReport rep = solve_reps_report(problem(phi, 2));
  for (const auto &s : rep.solutions) CHECK(s.p != 1);
  CHECK(rep.branches[1].poles == 1);
  CHECK(rep.branches[0].poles == 0);
}

TEST_CASE("Cartesian M=1 pipeline against the double elimination") {
  struct Inst {
    const char *d, *c1, *l1, *z;
  };
  const Inst insts[] = {{"1", "1/2", "-1", "E"}, {"2", "1/3", "-1/2", "E^2 - 3"}, {"1", "0", "E", "1"},
                        {"3", "1/4", "-E", "E^2"}};
  int irrational = 0;
  for (const auto &in : insts) {
    const NRatFn phi = cartesian_phi(in.d, in.c1, in.l1, in.z);
    auto sols = solve_reps(problem(phi, 6));
    CHECK_FALSE(sols.empty());
    for (const auto &s : sols) irrational += s.E && !s.E->exact();
    for (int p = 0; p <= 6; ++p) {
      auto ref = oracle::cutoff_pairs(phi, p);
      std::vector<RepSolution> mine;
      for (const auto &s : sols)
        if (s.p == p) mine.push_back(s);
      CHECK_MESSAGE(mine.size() == ref.size(), "z=" << in.z << " p=" << p);
      for (const auto &s : mine) {
        REQUIRE(s.E);
        REQUIRE(s.u);
        bool found = false;
        for (const auto &pr : ref) {
          if (!oracle::overlaps(pr.E, *s.E) || !oracle::overlaps(pr.u, *s.u)) continue;
          found = true;
          if (pr.E.exact() && pr.u.exact()) {
            CHECK(*s.E == pr.E);
            CHECK(*s.u == pr.u);
          }
        }
        CHECK(found);
        // re-certify
        auto again = check_unitary(phi, p, {{Var("E"), *s.E}, {Var("u"), *s.u}});
        CHECK(again.signs == s.certificate);
      }
    }
  }
  CHECK(irrational > 0);
}
