#pragma once

// Small random generators for property tests.

#include "polyalg/npoly.hpp"

#include <random>
#include <string>
#include <vector>

namespace testgen {

using namespace polyalg;

struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Rational rational(int range = 5) {
    int num = integer(-range, range);
    int den = integer(1, 3);
    return Rational(num, den);
  }

  Rational nonzero_rational(int range = 5) {
    Rational r;
    while (r.is_zero()) r = rational(range);
    return r;
  }

  CoeffPoly coeff(const std::vector<std::string> &vars, int terms = 3, int maxdeg = 2) {
    CoeffPoly p;
    for (int t = 0; t < terms; ++t) {
      CoeffPoly m(rational());
      for (const auto &v : vars) {
        int e = integer(0, maxdeg);
        if (e) m *= CoeffPoly::var(v, e);
      }
      p += m;
    }
    return p;
  }

  NPoly npoly(const std::vector<std::string> &vars, int deg = 2) {
    std::vector<CoeffPoly> c;
    for (int i = 0; i <= deg; ++i) c.push_back(coeff(vars, 2, 1));
    return NPoly(std::move(c));
  }
};

}  // namespace testgen
