#include "doctest.h"
#include "gen.hpp"

#include "polyalg/expr_parser.hpp"
#include "polyalg/linear_system.hpp"
#include "polyalg/poly_gcd.hpp"
#include "polyalg/real_roots.hpp"
#include "polyalg/resultant.hpp"

#include <cmath>

using namespace polyalg;

namespace {

CoeffPoly P(const char *s) { return CoeffPoly::parse(s); }
NPoly NP(const char *s) { return NPoly::parse(s); }

}  // namespace

TEST_CASE("rational canonical form") {
  Rational a(6, -4);
  CHECK(a.str() == "-3/2");
  CHECK(a.den() == 2);
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
}

TEST_CASE("coefficient polynomials parse and print canonically") {
  CoeffPoly p = P("a3*d^2/2 - a1");
  CHECK(p.str() == "1/2*a3*d^2 - a1");
  CHECK(CoeffPoly::parse(p.str()) == p);
  CHECK(P("b^-1*b") == CoeffPoly(1));
  CHECK(P("(a+b)^2") == P("a^2 + 2*a*b + b^2"));
  CHECK_THROWS_AS(P("1/(a+b)"), ParseError);
}

TEST_CASE("ring axioms on random polynomials") {
  testgen::Gen g(11);
  std::vector<std::string> vars{"a1", "b", "d"};
  for (int it = 0; it < 40; ++it) {
    CoeffPoly f = g.coeff(vars), h = g.coeff(vars), k = g.coeff(vars);
    CHECK((f + h) * k == f * k + h * k);
    CHECK((f * h) * k == f * (h * k));
    CHECK(f - f == CoeffPoly());
    CHECK(CoeffPoly::parse(f.str()) == f);
  }
}

TEST_CASE("gcd and exact division") {
  testgen::Gen g(5);
  std::vector<std::string> vars{"a", "b", "c1"};
  for (int it = 0; it < 25; ++it) {
    CoeffPoly common = g.coeff(vars, 2, 1) + CoeffPoly(1);
    CoeffPoly x = g.coeff(vars, 2, 2), y = g.coeff(vars, 2, 2);
    if (x.is_zero() || y.is_zero() || common.is_zero()) continue;
    CoeffPoly G = gcd(common * x, common * y);
    CHECK(exact_divide(G, gcd(common, common)).has_value());
    CHECK(exact_divide(common * x, G).has_value());
    CHECK(exact_divide(common * y, G).has_value());
    CHECK(divide_exact(common * x, x) == common);
  }
  CHECK(gcd(P("a^2 - b^2"), P("a^2 + 2*a*b + b^2")) == P("a + b"));
  CHECK(gcd(P("d^2*a"), P("d*b")) == CoeffPoly(1));
  CHECK_FALSE(exact_divide(P("a + 1"), P("a - 1")).has_value());
}

TEST_CASE("shift") {
  CHECK(NP("N^2").shift(1) == NP("N^2 + 2*N + 1"));
  testgen::Gen g(3);
  for (int it = 0; it < 20; ++it) {
    NPoly f = g.npoly({"a", "b"}, 3), h = g.npoly({"a"}, 2);
    CHECK(f.shift(0) == f);
    CHECK(f.shift(2).shift(-3) == f.shift(-1));
    CHECK((f * h).shift(1) == f.shift(1) * h.shift(1));
  }
  NPoly A = NP("d*N + c1");
  CHECK(A.shift(1) - A == NP("d"));
}

TEST_CASE("difference") {
  CHECK(NP("N^2").difference() == NP("2*N + 1"));
  CHECK(NP("a*b").difference().is_zero());
  CHECK(NP("b/2*(N + c1)^2").difference() == NP("b*(N + c1) + b/2"));
  testgen::Gen g(8);
  for (int it = 0; it < 20; ++it) {
    NPoly f = g.npoly({"a"}, 3);
    if (f.degree() >= 1) CHECK(f.difference().degree() == f.degree() - 1);
    CHECK(f.antidifference().difference() == f);
  }
}

TEST_CASE("derivative and antiderivative") {
  CHECK(NP("N^3").derivative() == NP("3*N^2"));
  CHECK(NP("N^2").derivative() == NP("2*N"));
  CHECK(NP("2*N + 1").antiderivative() == NP("N^2 + N"));
  CHECK(NPoly().antiderivative().is_zero());
  CHECK(NP("z + l1*(d*N + c1)").antiderivative() == NP("z*N + l1*(d*N^2/2 + c1*N)"));
  testgen::Gen g(9);
  for (int it = 0; it < 20; ++it) {
    NPoly f = g.npoly({"a", "b"}, 3), h = g.npoly({"b"}, 2);
    CHECK((f * h).derivative() == f.derivative() * h + f * h.derivative());
    CHECK(f.antiderivative().derivative() == f);
    NRatFn q(f, h + NPoly(1));
    if (!(h + NPoly(1)).is_zero()) {
      NRatFn dq = q.derivative();
      CHECK(dq * NRatFn((h + NPoly(1)).pow(2)) ==
            NRatFn(f.derivative() * (h + NPoly(1)) - f * h.derivative()));
    }
  }
}

TEST_CASE("rational functions reduce") {
  NRatFn f(NP("N^2 - 1"), NP("2*N + 2"));
  CHECK(f.num() == NP("N/2 - 1/2"));
  CHECK(f.den() == NP("1"));
  CHECK(f.is_polynomial());
  NRatFn g(NP("a*N"), NP("a*b*N^2 + a*N"));
  CHECK(g.den() == NP("N + b^-1"));
  CHECK(g * NRatFn(NP("b*N + 1")) == NRatFn(NP("1")));
  NRatFn h(NP("1"), NP("N^2 - 1/4"));
  CHECK(h.shift(1) == NRatFn(NP("1"), NP("N^2 + 2*N + 3/4")));
  CHECK_THROWS_AS(NRatFn(NP("1"), NPoly()), std::domain_error);
}

TEST_CASE("solve_linear") {
  LinearSystem id{{{1, 0}, {0, 1}}, {NRatFn(P("a")), NRatFn(P("b"))}, {}};
  auto s = solve_linear(id);
  CHECK(s.x[0] == NRatFn(P("a")));
  CHECK(s.x[1] == NRatFn(P("b")));
  CHECK(s.certified);

  LinearSystem bad{{{0}}, {1}, {}};
  CHECK_THROWS_AS(solve_linear(bad), InconsistentSystem);

  LinearSystem under{{{1, 1}}, {NRatFn(P("a"))}, {"s", "t"}};
  auto u = solve_linear(under);
  CHECK(u.rank == 1);
  REQUIRE(u.free_variables == std::vector<std::string>{"t"});
  CHECK(u.x[0] == NRatFn(P("a - t")));

  testgen::Gen g(21);
  for (int it = 0; it < 10; ++it) {
    const int n = 3;
    LinearSystem sys;
    for (int i = 0; i < n; ++i) {
      std::vector<NRatFn> row;
      for (int j = 0; j < n; ++j) row.emplace_back(g.coeff({"a", "b"}, 2, 1) + CoeffPoly(i == j ? 3 : 0));
      sys.A.push_back(row);
      sys.b.emplace_back(g.coeff({"a", "b"}, 2, 1));
    }
    try {
      auto sol = solve_linear(sys);
      CHECK(sol.certified);
      for (const auto &r : sol.residual) CHECK(r.is_zero());
    } catch (const InconsistentSystem &) {
    }
  }
}

TEST_CASE("real_roots") {
  Var x("x");
  auto r = real_roots(UPoly::from_coeff_poly(P("x^2 - 4"), x));
  REQUIRE(r.size() == 2);
  CHECK(r[0].exact);
  CHECK(r[0].lo == Rational(-2));
  CHECK(r[1].lo == Rational(2));

  CHECK(real_roots(UPoly::from_coeff_poly(P("x^2 + 1"), x)).empty());

  auto c = real_roots(UPoly::from_coeff_poly(P("x^3 - 2"), x));
  REQUIRE(c.size() == 1);
  CHECK_FALSE(c[0].exact);
  CHECK(c[0].hi - c[0].lo <= default_precision());
  CHECK(c[0].sign_lo * c[0].sign_hi < 0);
  // Bisection oracle in doubles.
  double lo = 1, hi = 2;
  for (int i = 0; i < 60; ++i) {
    double m = (lo + hi) / 2;
    (m * m * m < 2 ? lo : hi) = m;
  }
  CHECK(c[0].lo.to_double() <= lo + 1e-15);
  CHECK(c[0].hi.to_double() >= lo - 1e-15);

  auto m = real_roots(UPoly::from_coeff_poly(P("(x - 1/3)^2*(x + 5/7)*(x^2 - 2)"), x));
  REQUIRE(m.size() == 4);
  CHECK(m[1].lo == Rational(-5, 7));
  CHECK(m[2].lo == Rational(1, 3));
  CHECK(m[2].multiplicity == 2);
  // A midpoint landing on a root must not confuse the neighbouring interval.
  auto z = real_roots(UPoly::from_coeff_poly(P("x*(x^2 - 2)"), x));
  REQUIRE(z.size() == 3);
  CHECK(z[1].exact);
  CHECK(z[2].lo.to_double() < 1.41422);
  CHECK(z[2].hi.to_double() > 1.41421);
  CHECK_FALSE(m[3].exact);

  testgen::Gen g(4);
  for (int it = 0; it < 20; ++it) {
    CoeffPoly p(1);
    int k = g.integer(1, 4);
    std::vector<Rational> roots;
    for (int i = 0; i < k; ++i) {
      Rational q = g.rational(6);
      roots.push_back(q);
      p *= CoeffPoly::var("x") - CoeffPoly(q);
    }
    p *= P("x^2 + x + 7");
    UPoly u = UPoly::from_coeff_poly(p, x);
    for (const auto &root : real_roots(u)) {
      CHECK(root.exact);
      CHECK(u.eval(root.lo).is_zero());
    }
    auto roots_found = real_roots(u);
    UPoly sq(std::vector<Rational>{1});
    for (const auto &f : squarefree_decomposition(u)) sq = sq * f;
    CHECK(sturm_count(sturm_sequence(sq), Rational(-100), Rational(100)) ==
          static_cast<int>(roots_found.size()));
  }
}

TEST_CASE("simplest rational") {
  CHECK(simplest_rational(Rational(3, 10), Rational(2, 5)) == Rational(1, 3));
  CHECK(simplest_rational(Rational(-7, 3), Rational(-2)) == Rational(-2));
  CHECK(simplest_rational(Rational(-1), Rational(1)) == Rational(0));
}

TEST_CASE("eliminate") {
  Var x("x");
  CHECK(eliminate(P("x - y"), P("x + y"), x) == P("2*y"));
  CHECK(eliminate(P("x^2 - y"), P("x - 1"), x) == P("1 - y"));
  Var u("u");
  for (int p = 0; p <= 3; ++p) {
    CoeffPoly phi0 = P("u");
    CoeffPoly phip = CoeffPoly(p + 1) * (P("E") - CoeffPoly(p + 1)) + P("u");
    CoeffPoly r = eliminate(phi0, phip, u);
    CHECK(r == CoeffPoly(p + 1) * (P("E") - CoeffPoly(p + 1)));
  }
  CHECK_THROWS_AS(eliminate(P("(x - 1)*(x + y)"), P("(x - 1)*y"), x), ZeroResultant);

  // Product-of-differences oracle.
  CoeffPoly f = P("(x - a1)*(x - a2)"), h = P("(x - b1)*(x - b2)*(x - b3)");
  CoeffPoly expect(1);
  for (auto ai : {"a1", "a2"})
    for (auto bj : {"b1", "b2", "b3"}) expect *= CoeffPoly::var(ai) - CoeffPoly::var(bj);
  CHECK(resultant(f, h, x) == expect);
  CHECK(resultant(h, f, x) == expect);  // (-1)^(2*3)

  auto [s1, s0] = first_subresultant(P("(x - y)*(x + 1)"), P("(x - y)*(x - 2)"), x);
  // Shared root x = y.
  CHECK(s0 + s1 * P("y") == CoeffPoly());
}
