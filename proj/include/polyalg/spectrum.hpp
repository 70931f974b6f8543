#pragma once

#include "polyalg/npoly.hpp"
#include "polyalg/real_roots.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyalg {

struct EliminationDegenerate : std::runtime_error {
  EliminationDegenerate(const std::string &what, CoeffPoly f) : std::runtime_error(what), factor(std::move(f)) {}
  CoeffPoly factor;  // common factor of the two cutoff conditions
};
struct UndecidedSign : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Closed rational interval; lo == hi for an exact value.
struct Interval {
  Rational lo, hi;
  Interval() = default;
  Interval(const Rational &v) : lo(v), hi(v) {}  // NOLINT(implicit)
  Interval(const Rational &l, const Rational &h) : lo(l), hi(h) {}
  bool exact() const { return lo == hi; }
  bool contains(const Rational &x) const { return lo <= x && x <= hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  /// +1 / -1 when the interval excludes 0, 0 for the exact value 0;
  /// nullopt when 0 is strictly inside.
  std::optional<int> sign() const;
  friend Interval operator+(const Interval &a, const Interval &b);
  friend Interval operator-(const Interval &a, const Interval &b);
  friend Interval operator*(const Interval &a, const Interval &b);
  Interval pow(int e) const;  // negative e needs 0 outside
  friend bool operator==(const Interval &a, const Interval &b) = default;
};

/// Range enclosure of p over the box (every variable of p must be assigned).
Interval eval_interval(const CoeffPoly &p, const std::map<Var, Interval> &box);

struct ConstraintProblem {
  NRatFn phi;  // Phi(N; E, u) with every other parameter numeric
  int pmax = 0;
  Rational precision = default_precision();
  Var energy = Var("E");
  Var casimir = Var("u");
};

struct RepSolution {
  int p = 0;                    // representation dimension is p + 1
  std::optional<Interval> E;    // nullopt: Phi does not involve E
  std::optional<Interval> u;    // nullopt: Phi does not involve u
  int multiplicity = 1;         // of E as a root of the eliminant
  std::vector<int> certificate; // sign of Phi(n), n = 1..p
  bool physical = false;        // every certificate entry is +1

  int dimension() const { return p + 1; }
};

/// What happened in one p-branch: the eliminant and its root census.
struct BranchReport {
  int p = 0;
  CoeffPoly eliminant;           // in E (0 when E is absent)
  int real_roots = 0;            // with multiplicity
  int nonreal_roots = 0;         // with multiplicity
  int poles = 0;                 // candidates where the denominator of Phi vanishes
};

struct SpectrumReport {
  std::vector<RepSolution> solutions;  // sorted by (p, E)
  std::vector<BranchReport> branches;
};

/// Imposes Phi(0) = 0 and Phi(p+1) = 0 for p = 0..pmax, eliminates u, isolates
/// E and back-substitutes. Every algebraic solution is returned together with
/// its positivity certificate; nothing is filtered.
SpectrumReport solve_reps_report(const ConstraintProblem &prob);
std::vector<RepSolution> solve_reps(const ConstraintProblem &prob);

struct UnitaryCheck {
  bool unitary = false;
  std::vector<int> signs;  // Phi(n), n = 1..p
};

/// Phi without parameters: exact signs of Phi(1..p).
UnitaryCheck check_unitary(const NRatFn &phi, int p);
/// Phi over E and u given as intervals. Throws UndecidedSign when a value
/// cannot be separated from zero.
UnitaryCheck check_unitary(const NRatFn &phi, int p, const std::map<Var, Interval> &box);

/// "p/q" or "[lo, hi]".
std::string to_string(const Interval &x);

}  // namespace polyalg
