#include "spectrum_oracle.hpp"

#include "polyalg/realization.hpp"
#include "polyalg/rewrite.hpp"
#include "polyalg/spectrum.hpp"
#include "polyalg/structure.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace polyalg;

namespace {

// pinned tolerances
const Rational kIsolation(1, 1000000000000);  // 1e-12, irrational roots
constexpr int kClosureMaxM = 8;
constexpr int kCentralityMaxM = 6;
constexpr int kDegenerationMaxM = 8;
constexpr int kSOracleMaxM = 8;
constexpr int kSpectrumPmax = 6;

CoeffPoly P(const char *s) { return CoeffPoly::parse(s); }

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string &why) {
    if (ok) note = why;
    ok = false;
  }
};

NCElement anti_sum(const std::vector<CoeffPoly> &c, const RewriteSystem &rw) {
  NCElement out;
  for (std::size_t k = 0; k < c.size(); ++k)
    out += anticommutator(NCElement::A(static_cast<int>(k)), NCElement::C(), rw).scaled(c[k]);
  return out;
}

Outcome closure() {
  Outcome o;
  for (int M = 1; M <= kClosureMaxM; ++M)
    if (!is_zero(jacobi_residual(RewriteSystem(closed(AlgebraSpec::symbolic(M))))))
      o.fail("Jacobi residual nonzero at M=" + std::to_string(M));
  return o;
}

Outcome fixtures() {
  Outcome o;
  Closure c2 = close_algebra(AlgebraSpec::symbolic(2));
  if (c2.eta != P("-a1") || c2.omega != std::vector<CoeffPoly>{P("-a2")}) o.fail("M=2 closure");

  for (int M = 1; M <= kClosureMaxM; ++M) {
    AlgebraSpec s = AlgebraSpec::symbolic(M);
    ClassicalClosure c = classical_close(s);
    bool good = c.eta == P("-a1") && c.rho == P("-b");
    for (int i = 1; i <= s.L(); ++i) good = good && c.omega[i - 1].scaled(2) == s.a(i + 1).scaled(-(i + 1));
    if (!good) o.fail("classical closure M=" + std::to_string(M));

    CasimirCoeffs k = classical_casimir(classical_closed(s));
    good = k.l1 == P("-2*e") && k.l2 == P("-d^2") && k.n == P("-2*b") && k.k[0] == P("2*z");
    for (int i = 1; i <= s.L() + 1; ++i) good = good && k.m[i - 1] == s.a(i).scaled(-2);
    for (int i = 1; i <= M; ++i) good = good && k.k[i] == s.l(i).scaled(Rational(2, i + 1));
    if (!good) o.fail("classical Casimir M=" + std::to_string(M));
  }

  CasimirCoeffs polar = quantum_casimir(closed(AlgebraSpec::polar(2)));
  const CoeffPoly k1 = P("2*z - a1*a2"), k2 = P("l1 - a2^2");
  if (polar.k[0] != k1 || polar.k[1] != k2)
    o.fail("polar k1 = " + polar.k[0].str() + ", k2 = " + polar.k[1].str() + " (expected " + k1.str() + ", " +
           k2.str() + ")");
  return o;
}

Outcome centrality() {
  Outcome o;
  for (int M = 1; M <= kCentralityMaxM; ++M) {
    AlgebraSpec s = closed(AlgebraSpec::symbolic(M));
    RewriteSystem rw(s);
    NCElement K = casimir_element(quantum_casimir(s), rw);
    if (!is_zero(commutator(K, NCElement::A(), rw))) o.fail("[K,A] at M=" + std::to_string(M));
    if (!is_zero(commutator(K, NCElement::B(), rw))) o.fail("[K,B] at M=" + std::to_string(M));
  }
  return o;
}

Outcome degeneration() {
  Outcome o;
  for (int M = 1; M <= kDegenerationMaxM; ++M) {
    AlgebraSpec flat = AlgebraSpec::symbolic(M);
    flat.beta = flat.delta = CoeffPoly();
    Closure q = close_algebra(flat);
    ClassicalClosure c = classical_close(AlgebraSpec::symbolic(M));
    if (q.eta != c.eta || q.omega != c.omega) o.fail("M=" + std::to_string(M));
  }
  return o;
}

Outcome s_oracle() {
  Outcome o;
  RecurrenceTables spot(P("b"), P("d^2"), 3);
  if (spot.s(2) != std::vector<CoeffPoly>{CoeffPoly(), CoeffPoly(1)}) o.fail("s(2) = (0, 1)");
  if (spot.s(3) != std::vector<CoeffPoly>{P("-1/4*d^2"), P("-1/2*b"), P("3/2")}) o.fail("s(3) spot values");
  for (int M = 1; M <= kSOracleMaxM; ++M) {
    AlgebraSpec spec = closed(AlgebraSpec::symbolic(M));
    RewriteSystem rw(spec);
    RecurrenceTables t(spec.beta, spec.delta, M + 1);
    for (int j = 1; j <= M + 1; ++j)
      if (commutator(NCElement::A(j), NCElement::B(), rw) != anti_sum(t.s(j), rw))
        o.fail("M=" + std::to_string(M) + " j=" + std::to_string(j));
  }
  return o;
}

struct Realized {
  std::string label;
  AlgebraSpec spec;
  CasimirCoeffs cas;
  QuantumRealization q;
};

std::vector<Realized> realized_cases() {
  std::vector<Realized> out;
  auto add = [&](std::string label, AlgebraSpec s) {
    CasimirCoeffs cas = quantum_casimir(s);
    QuantumRealization q = realize_quantum(s, cas);
    out.push_back({std::move(label), s, cas, q});
  };
  for (int M = 1; M <= 3; ++M) add("cartesian M=" + std::to_string(M), closed(AlgebraSpec::cartesian(M)));
  add("polar M=2", closed(AlgebraSpec::polar(2)));
  return out;
}

Outcome realization(const std::vector<Realized> &cases) {
  const std::vector<std::string> required = {"qeq3c1", "qeq3c2", "qcasimirc1", "qcasimirc2", "K is N-free"};
  Outcome o;
  for (const auto &c : cases) {
    VerificationReport rep = verify_realization(c.q, c.spec, c.cas);
    for (const auto &name : required)
      if (!rep.find(name)) o.fail(c.label + ": no check " + name);
    for (const auto &ch : rep.checks)
      if (!ch.passed) o.fail(c.label + ": " + ch.name + " residual " + ch.residual);
  }
  return o;
}

Outcome structure_consistency(const std::vector<Realized> &cases) {
  Outcome o;
  for (const auto &c : cases)
    if (!c.q.solution.shift_consistent || !c.q.solution.shift_residual.is_zero()) o.fail(c.label + " shift");

  const Realized &m1 = cases.front();
  NRatFn tele = telescope_structure_function(m1.spec, m1.q.A, m1.q.b, CoeffPoly());
  NRatFn diff = m1.q.psi - tele;
  if (!diff.is_constant()) {
    o.fail("solve minus telescope is not constant: " + diff.str());
  } else {
    const CoeffPoly c0 = diff.num().coeff(0);
    NRatFn matched = telescope_structure_function(m1.spec, m1.q.A, m1.q.b, c0);
    if (matched != m1.q.psi) o.fail("telescoped Psi differs");
    if (matched / m1.q.rho2.shift(-1) != m1.q.phi) o.fail("telescoped Phi differs");
  }
  return o;
}

ConstraintProblem problem(const NRatFn &phi, int pmax) {
  ConstraintProblem c;
  c.phi = phi;
  c.pmax = pmax;
  c.precision = kIsolation;
  return c;
}

Outcome spectrum() {
  Outcome o;
  auto syn = solve_reps(problem(NRatFn(NPoly::parse("N*(E - N)")), 5));
  if (syn.size() != 6) o.fail("synthetic: " + std::to_string(syn.size()) + " solutions");
  for (std::size_t p = 0; p < syn.size(); ++p) {
    const RepSolution &s = syn[p];
    bool good = s.p == static_cast<int>(p) && s.E && *s.E == Interval(Rational(s.p + 1)) && s.physical &&
                s.certificate == std::vector<int>(s.p, 1);
    if (!good) o.fail("synthetic p=" + std::to_string(p));
  }

  struct Inst {
    const char *d, *c1, *l1, *z;
  };
  const Inst insts[] = {{"1", "1/2", "-1", "E"}, {"2", "1/3", "-1/2", "E^2 - 3"}, {"1", "0", "E", "1"},
                        {"3", "1/4", "-E", "E^2"}};
  AlgebraSpec s = closed(AlgebraSpec::cartesian(1));
  QuantumRealization q = realize_quantum(s, quantum_casimir(s));
  for (const auto &in : insts) {
    const std::string tag = std::string("z=") + in.z;
    const NRatFn phi =
        q.phi.substitute({{Var("d"), P(in.d)}, {Var("c1"), P(in.c1)}, {Var("l1"), P(in.l1)}, {Var("z"), P(in.z)}});
    auto sols = solve_reps(problem(phi, kSpectrumPmax));
    for (int p = 0; p <= kSpectrumPmax; ++p) {
      auto ref = oracle::cutoff_pairs(phi, p);
      std::size_t mine = 0;
      for (const auto &r : sols) {
        if (r.p != p) continue;
        ++mine;
        if (!r.E || !r.u) {
          o.fail(tag + ": E or u undetermined");
          continue;
        }
        if (r.E->width() > kIsolation || r.u->width() > kIsolation) o.fail(tag + ": isolation wider than 1e-12");
        bool found = false;
        for (const auto &pr : ref) {
          if (!oracle::overlaps(pr.E, *r.E) || !oracle::overlaps(pr.u, *r.u)) continue;
          found = true;
          if (pr.E.exact() && pr.u.exact() && (!(*r.E == pr.E) || !(*r.u == pr.u)))
            o.fail(tag + ": rational root not exact");
        }
        if (!found) o.fail(tag + " p=" + std::to_string(p) + ": solution not in oracle");
      }
      if (mine != ref.size())
        o.fail(tag + " p=" + std::to_string(p) + ": " + std::to_string(mine) + " vs oracle " +
               std::to_string(ref.size()));
    }
  }
  return o;
}

std::string slurp(const std::filesystem::path &p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "polyalg_acceptance";
  fs::create_directories(dir);
  const std::string batch = std::string(FIXTURE_DIR) + "/batch.json";
  std::string outs[2];
  for (int i = 0; i < 2; ++i) {
    const fs::path out = dir / ("run" + std::to_string(i) + ".json");
    const std::string cmd = std::string(POLYALG_CLI) + " --batch " + batch + " --output " + out.string();
    if (std::system(cmd.c_str()) != 0) o.fail("batch run " + std::to_string(i) + " failed");
    outs[i] = slurp(out);
  }
  if (outs[0].empty() || outs[0] != outs[1]) o.fail("outputs differ");
  return o;
}

}  // namespace

int main() {
  std::vector<Realized> cases;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"closure: Jacobi residual zero, M=1..8", closure},
      {"fixtures: M=2 closure, polar k, classical closure and Casimir", fixtures},
      {"centrality: [K,A] = [K,B] = 0, M=1..6", centrality},
      {"degeneration: beta=delta=0 closure equals classical, M=1..8", degeneration},
      {"s oracle: [A^j,B] expansion, M=1..8, spot values", s_oracle},
      {"realization identities: cartesian M=1..3, polar M=2",
       [&] {
         cases = realized_cases();
         return realization(cases);
       }},
      {"structure function: shift consistency, telescope cross-check", [&] { return structure_consistency(cases); }},
      {"spectrum: synthetic N(E-N), cartesian M=1 vs double elimination, p<=6", spectrum},
      {"determinism: batch twice, byte-identical", determinism},
  };

  int failed = 0, n = 0;
  for (const auto &[name, fn] : criteria) {
    ++n;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception &e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %d %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", n, name.c_str(), secs, o.ok ? "" : ": ",
                o.note.c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  std::printf("%d/%d criteria passed\n", n - failed, n);
  return failed ? 1 : 0;
}
