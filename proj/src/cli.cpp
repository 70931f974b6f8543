#include "polyalg/cli.hpp"

#include "polyalg/expr_parser.hpp"
#include "polyalg/linear_system.hpp"
#include "polyalg/poisson.hpp"
#include "polyalg/realization.hpp"
#include "polyalg/rewrite.hpp"
#include "polyalg/spectrum.hpp"

#include <atomic>
#include <cctype>
#include <set>
#include <filesystem>
#include <fstream>
#include <thread>

namespace polyalg::cli {

namespace {

CoeffPoly expr(const std::string &s) { return parse_coeff_poly(s); }

// "(num)/(den)" as printed by NRatFn::str(), or a plain polynomial in N.
NRatFn ratfn(const std::string &s) {
  if (!s.empty() && s.front() == '(') {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')' && --depth == 0) {
        if (i + 1 < s.size() && s[i + 1] == '/' && i + 2 < s.size() && s[i + 2] == '(' && s.back() == ')')
          return NRatFn(NPoly::parse(s.substr(1, i - 1)), NPoly::parse(s.substr(i + 3, s.size() - i - 4)));
        break;
      }
    }
  }
  return NRatFn(NPoly::parse(s));
}

Json strs(const std::vector<CoeffPoly> &v) {
  Json a = Json::array();
  for (const auto &c : v) a.push_back(c.str());
  return a;
}

std::vector<CoeffPoly> polys(const Json &j) {
  std::vector<CoeffPoly> out;
  for (const auto &e : j) out.push_back(expr(e.get<std::string>()));
  return out;
}

std::map<Var, CoeffPoly> substitutions(const JobConfig &c) {
  std::map<Var, CoeffPoly> m;
  for (const auto &[name, value] : c.params) {
    if (name == kNumberSymbol) throw ConfigError("N is reserved for the number operator");
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
      throw ConfigError("bad parameter name '" + name + "'");
    m.emplace(Var(name), expr(value));
  }
  return m;
}

CoeffPoly subst(const CoeffPoly &p, const std::map<Var, CoeffPoly> &m) { return m.empty() ? p : p.substitute(m); }

void subst_all(std::vector<CoeffPoly> &v, const std::map<Var, CoeffPoly> &m) {
  for (auto &c : v) c = subst(c, m);
}

bool classical(const JobConfig &c) {
  if (c.mode == "quantum") return false;
  if (c.mode == "classical") return true;
  throw ConfigError("mode must be quantum or classical");
}

// The AlgebraSpec named by the config: from the input document or from M/family,
// with the parameter assignments applied.
AlgebraSpec build_spec(const JobConfig &c) {
  AlgebraSpec s;
  if (c.input && c.input->contains("spec")) {
    s = spec_from_json(c.input->at("spec"));
  } else if (c.input && c.input->contains("alpha")) {
    s = spec_from_json(*c.input);
  } else {
    if (c.M < 1) throw ConfigError("the order M must be given (--M) and be >= 1");
    s = AlgebraSpec::family_named(c.family, c.M);
  }
  if (c.M > 0 && c.M != s.M) throw ConfigError("--M disagrees with the input spec");
  const auto m = substitutions(c);
  subst_all(s.alpha, m);
  subst_all(s.lambda, m);
  subst_all(s.omega, m);
  for (CoeffPoly *p : {&s.beta, &s.delta, &s.epsilon, &s.zeta, &s.eta, &s.rho}) *p = subst(*p, m);
  if (c.beta == "zero") {
    s.beta = CoeffPoly();
  } else if (c.beta == "nonzero") {
    if (s.beta.is_zero()) throw ConfigError("beta is zero but --beta nonzero was requested");
  } else if (c.beta != "any") {
    throw ConfigError("beta must be any, zero or nonzero");
  }
  s.validate();
  return s;
}

Json header(const JobConfig &c, const AlgebraSpec &s) {
  return {{"command", c.command}, {"M", s.M}, {"family", s.family}, {"mode", c.mode}};
}

Json checks_json(const VerificationReport &r) {
  Json a = Json::array();
  for (const auto &ch : r.checks) a.push_back({{"name", ch.name}, {"passed", ch.passed}, {"residual", ch.residual}});
  return a;
}

Json cmd_close(const JobConfig &c) {
  AlgebraSpec s = build_spec(c);
  Json out = header(c, s);
  if (classical(c)) {
    ClassicalClosure cl = classical_close(s);
    out["eta"] = cl.eta.str();
    out["rho"] = cl.rho.str();
    out["omega"] = strs(cl.omega);
    out["spec"] = spec_to_json(classical_closed(s));
    return out;
  }
  Closure cl = close_algebra(s);
  out["eta"] = cl.eta.str();
  out["omega"] = strs(cl.omega);
  RecurrenceTables t(s.beta, s.delta, s.L() + 1);
  Json st = Json::array();
  for (int j = 1; j <= s.L() + 1; ++j) st.push_back(strs(t.s(j)));
  out["s_table"] = st;
  out["spec"] = spec_to_json(closed(s));
  return out;
}

CasimirCoeffs casimir_of(const JobConfig &c, const AlgebraSpec &closed_spec) {
  if (classical(c)) return classical_casimir(closed_spec);
  CasimirOptions o;
  o.include_G = c.include_G;
  o.piecewise_Z = c.piecewise_Z;
  return quantum_casimir(closed_spec, o);
}

AlgebraSpec closed_spec(const JobConfig &c) {
  AlgebraSpec s = build_spec(c);
  return classical(c) ? classical_closed(s) : closed(s);
}

Json cmd_casimir(const JobConfig &c) {
  AlgebraSpec s = closed_spec(c);
  Json out = header(c, s);
  out.update(casimir_to_json(casimir_of(c, s)));
  return out;
}

NRatFn subst(const NRatFn &f, const std::map<Var, CoeffPoly> &m) { return m.empty() ? f : f.substitute(m); }

Json cmd_realize(const JobConfig &c, NRatFn *phi_out = nullptr) {
  AlgebraSpec s = closed_spec(c);
  CasimirCoeffs cas = casimir_of(c, s);
  RealizeOptions o;
  o.c1 = expr(c.c1);
  o.u = expr(c.u);
  o.g0 = expr(c.g0);
  o.rho2 = ratfn(c.rho2);
  o.polynomialize = c.polynomialize;
  const auto m = substitutions(c);
  Json out = header(c, s);
  VerificationReport rep;
  if (classical(c)) {
    ClassicalRealization r = realize_classical(s, o);
    rep = verify_realization(r, s, cas);
    out["A"] = subst(NRatFn(r.A), m).str();
    out["b"] = subst(r.b, m).str();
    out["rho2"] = subst(r.rho2, m).str();
    out["G"] = subst(r.G, m).str();
    out["phi"] = subst(r.phi, m).str();
    out["g0"] = r.g0.str();
    out["branch"] = r.branch == Branch::BetaZero ? "beta=0" : "beta!=0";
    if (phi_out) *phi_out = subst(r.phi, m);
  } else {
    QuantumRealization r = realize_quantum(s, cas, o);
    rep = verify_realization(r, s, cas);
    out["A"] = subst(NRatFn(r.A), m).str();
    out["b"] = subst(r.b, m).str();
    out["rho2"] = subst(r.rho2, m).str();
    out["psi"] = subst(r.psi, m).str();
    out["phi"] = subst(r.phi, m).str();
    out["u"] = r.u.str();
    out["shift_consistent"] = r.solution.shift_consistent;
    out["branch"] = r.branch == Branch::BetaZero ? "beta=0" : "beta!=0";
    if (phi_out) *phi_out = subst(r.phi, m);
  }
  out["c1"] = o.c1.str();
  out["checks"] = checks_json(rep);
  out["all_passed"] = rep.all_passed();
  out["casimir_value"] = rep.casimir_value;
  return out;
}

Json cmd_verify(const JobConfig &c, int &exit_code) {
  AlgebraSpec s = closed_spec(c);
  CasimirCoeffs cas = casimir_of(c, s);
  Json out = header(c, s);
  std::vector<std::pair<std::string, std::string>> all;
  if (classical(c)) {
    PoissonAlgebra pa(s);
    const CoeffPoly K = casimir_poly(cas);
    const CoeffPoly A(Monomial::of(PoissonAlgebra::A()), Rational(1)), B(Monomial::of(PoissonAlgebra::B()), Rational(1));
    all.emplace_back("jacobi", pa.jacobi_residual().str());
    all.emplace_back("{K,A}", pa.bracket(K, A).str());
    all.emplace_back("{K,B}", pa.bracket(K, B).str());
  } else {
    RewriteSystem rw(s);
    const NCElement K = casimir_element(cas, rw);
    all.emplace_back("jacobi", jacobi_residual(rw).str());
    all.emplace_back("[K,A]", commutator(K, NCElement::A(), rw).str());
    all.emplace_back("[K,B]", commutator(K, NCElement::B(), rw).str());
  }
  Json checks = Json::array(), residuals = Json::object();
  for (const auto &[name, r] : all) {
    checks.push_back({{"name", name}, {"residual", r}, {"passed", r == "0"}});
    if (r != "0") residuals[name] = r;
  }
  out["checks"] = checks;
  out["residuals"] = residuals;
  if (!residuals.empty()) exit_code = kVerificationFailed;
  return out;
}

Json interval_json(const Interval &x) {
  if (x.exact()) return x.lo.str();
  return {{"lo", x.lo.str()}, {"hi", x.hi.str()}};
}

Json cmd_spectrum(const JobConfig &c) {
  NRatFn phi;
  if (!c.phi.empty()) {
    phi = subst(ratfn(c.phi), substitutions(c));
  } else if (c.input && c.input->contains("phi") && !c.input->contains("spec")) {
    phi = subst(ratfn(c.input->at("phi").get<std::string>()), substitutions(c));
  } else {
    cmd_realize(c, &phi);
  }
  ConstraintProblem prob;
  prob.phi = phi;
  prob.pmax = c.pmax;
  prob.precision = Rational::parse(c.precision);
  SpectrumReport rep = solve_reps_report(prob);

  Json sols = Json::array();
  for (const auto &s : rep.solutions) {
    if (c.physical_only && !s.physical) continue;
    Json j = {{"p", s.p}, {"dimension", s.dimension()}, {"multiplicity", s.multiplicity},
              {"certificate", s.certificate}, {"physical", s.physical}};
    j["E"] = s.E ? interval_json(*s.E) : Json(nullptr);
    j["u"] = s.u ? interval_json(*s.u) : Json(nullptr);
    sols.push_back(j);
  }
  Json branches = Json::array();
  for (const auto &b : rep.branches)
    branches.push_back({{"p", b.p},
                        {"eliminant", b.eliminant.str()},
                        {"real_roots", b.real_roots},
                        {"nonreal_roots", b.nonreal_roots},
                        {"poles", b.poles}});
  return {{"command", "spectrum"}, {"phi", phi.str()},        {"pmax", c.pmax},
          {"precision", prob.precision.str()}, {"solutions", sols}, {"branches", branches}};
}

Json cmd_tables(const JobConfig &c) {
  JobConfig cc = c;
  if (cc.M < 1 && !cc.input) cc.M = 3;
  AlgebraSpec s = build_spec(cc);
  const int jmax = c.jmax > 0 ? c.jmax : s.M + 1;
  RecurrenceTables t(s.beta, s.delta, jmax);
  auto tri = [&](const XYTable &tab, bool x) {
    Json a = Json::array();
    for (int j = 1; j <= jmax; ++j) {
      Json row = Json::array();
      for (int i = 0; i <= j; ++i) row.push_back((x ? tab.x(i, j) : tab.y(i, j)).str());
      a.push_back(row);
    }
    return a;
  };
  Json st = Json::array();
  for (int j = 1; j <= jmax; ++j) st.push_back(strs(t.s(j)));
  return {{"command", "tables"}, {"beta", s.beta.str()}, {"delta", s.delta.str()}, {"jmax", jmax},
          {"x", tri(t.xy(), true)}, {"y", tri(t.xy(), false)}, {"xbar", tri(t.xybar(), true)},
          {"ybar", tri(t.xybar(), false)}, {"s", st}};
}

JobResult error(const std::string &type, const std::string &msg, int code, Json extra = Json::object()) {
  Json e = {{"type", type}, {"message", msg}, {"exit_code", code}};
  e.update(extra);
  return {code, {{"error", e}}};
}

}  // namespace

JobResult run(const JobConfig &c) {
  try {
    int code = kOk;
    Json doc;
    if (c.command == "close") {
      doc = cmd_close(c);
    } else if (c.command == "casimir") {
      doc = cmd_casimir(c);
    } else if (c.command == "realize") {
      doc = cmd_realize(c);
    } else if (c.command == "verify") {
      doc = cmd_verify(c, code);
    } else if (c.command == "spectrum") {
      doc = cmd_spectrum(c);
    } else if (c.command == "tables") {
      doc = cmd_tables(c);
    } else {
      throw ConfigError("unknown command '" + c.command + "'");
    }
    return {code, doc};
  } catch (const ConfigError &e) {
    return error("ConfigError", e.what(), kConfig);
  } catch (const ParseError &e) {
    return error("ParseError", e.what(), kParse);
  } catch (const Json::exception &e) {
    return error("ParseError", e.what(), kParse);
  } catch (const InconsistentSystem &e) {
    return error("InconsistentSystem", e.what(), kInconsistent);
  } catch (const ZeroDenominator &e) {
    return error("ZeroDenominator", e.what(), kZeroDenominator);
  } catch (const SingularSystem &e) {
    return error("SingularSystem", e.what(), kSingular);
  } catch (const NonIntegrable &e) {
    return error("NonIntegrable", e.what(), kNonIntegrable);
  } catch (const EliminationDegenerate &e) {
    return error("EliminationDegenerate", e.what(), kEliminationDegenerate, {{"factor", e.factor.str()}});
  } catch (const UndecidedSign &e) {
    return error("UndecidedSign", e.what(), kUndecidedSign);
  } catch (const ModeMismatch &e) {
    return error("ModeMismatch", e.what(), kModeMismatch);
  } catch (const std::invalid_argument &e) {
    return error("ConfigError", e.what(), kConfig);
  } catch (const std::exception &e) {
    return error("InternalError", e.what(), kInternal);
  }
}

JobResult run_batch(const Json &configs, unsigned threads) {
  if (!configs.is_array()) return error("ConfigError", "a batch is a JSON array of job objects", kConfig);
  std::vector<JobResult> results(configs.size());
  std::vector<std::string> names(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < configs.size();) {
      try {
        names[i] = configs[i].value("name", "");
        results[i] = run(config_from_json(configs[i]));
      } catch (const ConfigError &e) {
        results[i] = error("ConfigError", e.what(), kConfig);
      } catch (const std::exception &e) {
        results[i] = error("ConfigError", e.what(), kConfig);
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, configs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto &t : pool) t.join();

  JobResult out;
  out.doc = {{"results", Json::array()}};
  for (std::size_t i = 0; i < results.size(); ++i) {
    out.doc["results"].push_back({{"name", names[i]}, {"exit_code", results[i].exit_code}, {"result", results[i].doc}});
    if (out.exit_code == kOk) out.exit_code = results[i].exit_code;
  }
  return out;
}

// ------------------------------------------------------------ JSON plumbing

JobConfig config_from_json(const Json &j) {
  if (!j.is_object()) throw ConfigError("a job is a JSON object");
  static const std::set<std::string> known = {
      "name",  "command", "M",        "family",    "params",      "mode",          "beta", "rho2",
      "polynomialize", "c1", "u",     "g0",        "include_G",   "piecewise_Z",   "pmax", "precision",
      "physical_only", "phi", "jmax", "input"};
  for (const auto &[k, v] : j.items())
    if (!known.count(k)) throw ConfigError("unknown job key '" + k + "'");
  JobConfig c;
  c.command = j.value("command", "");
  c.M = j.value("M", 0);
  c.family = j.value("family", c.family);
  if (j.contains("params"))
    for (const auto &[k, v] : j.at("params").items()) c.params[k] = v.is_string() ? v.get<std::string>() : v.dump();
  c.mode = j.value("mode", c.mode);
  c.beta = j.value("beta", c.beta);
  c.rho2 = j.value("rho2", c.rho2);
  c.polynomialize = j.value("polynomialize", false);
  c.c1 = j.value("c1", c.c1);
  c.u = j.value("u", c.u);
  c.g0 = j.value("g0", c.g0);
  c.include_G = j.value("include_G", false);
  c.piecewise_Z = j.value("piecewise_Z", false);
  c.pmax = j.value("pmax", c.pmax);
  c.precision = j.value("precision", c.precision);
  c.physical_only = j.value("physical_only", false);
  c.phi = j.value("phi", "");
  c.jmax = j.value("jmax", 0);
  if (j.contains("input")) c.input = j.at("input");
  return c;
}

Json config_to_json(const JobConfig &c) {
  Json j = {{"command", c.command}, {"family", c.family}, {"mode", c.mode}};
  if (c.M > 0) j["M"] = c.M;
  if (!c.params.empty()) j["params"] = c.params;
  const JobConfig d;
  if (c.beta != d.beta) j["beta"] = c.beta;
  if (c.rho2 != d.rho2) j["rho2"] = c.rho2;
  if (c.polynomialize) j["polynomialize"] = true;
  if (c.c1 != d.c1) j["c1"] = c.c1;
  if (c.u != d.u) j["u"] = c.u;
  if (c.g0 != d.g0) j["g0"] = c.g0;
  if (c.include_G) j["include_G"] = true;
  if (c.piecewise_Z) j["piecewise_Z"] = true;
  if (c.command == "spectrum") {
    j["pmax"] = c.pmax;
    j["precision"] = c.precision;
    if (c.physical_only) j["physical_only"] = true;
  }
  if (!c.phi.empty()) j["phi"] = c.phi;
  if (c.jmax > 0) j["jmax"] = c.jmax;
  if (c.input) j["input"] = *c.input;
  return j;
}

Json spec_to_json(const AlgebraSpec &s) {
  return {{"M", s.M},
          {"family", s.family},
          {"alpha", strs(s.alpha)},
          {"beta", s.beta.str()},
          {"delta", s.delta.str()},
          {"epsilon", s.epsilon.str()},
          {"zeta", s.zeta.str()},
          {"lambda", strs(s.lambda)},
          {"eta", s.eta.str()},
          {"omega", strs(s.omega)},
          {"rho", s.rho.str()}};
}

AlgebraSpec spec_from_json(const Json &j) {
  AlgebraSpec s;
  s.M = j.at("M").get<int>();
  s.family = j.value("family", "general");
  s.alpha = polys(j.at("alpha"));
  s.beta = expr(j.at("beta").get<std::string>());
  s.delta = expr(j.at("delta").get<std::string>());
  s.epsilon = expr(j.at("epsilon").get<std::string>());
  s.zeta = expr(j.at("zeta").get<std::string>());
  s.lambda = polys(j.at("lambda"));
  s.eta = expr(j.value("eta", "eta"));
  if (j.contains("omega")) {
    s.omega = polys(j.at("omega"));
  } else {
    for (int i = 1; i <= s.L(); ++i) s.omega.push_back(CoeffPoly::var("w" + std::to_string(i)));
  }
  s.rho = expr(j.value("rho", "rho"));
  s.validate();
  return s;
}

Json casimir_to_json(const CasimirCoeffs &c) {
  Json j = {{"m", strs(c.m)}, {"n", c.n.str()}, {"l1", c.l1.str()}, {"l2", c.l2.str()}, {"k", strs(c.k)}};
  if (c.quantum) j["H"] = strs(c.H);
  return j;
}

std::string dump(const Json &doc) { return doc.dump(2) + "\n"; }

namespace {
void flatten(const Json &j, const std::string &path, std::string &out) {
  if (j.is_object() || j.is_array()) {
    if (j.empty()) out += path + " = " + j.dump() + "\n";
    if (j.is_object()) {
      for (const auto &[k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    }
    return;
  }
  out += path + " = " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
}
}  // namespace

std::string dump_text(const Json &doc) {
  std::string out;
  flatten(doc, "", out);
  return out;
}

std::vector<std::pair<std::string, JobConfig>> fixture_jobs() {
  std::vector<std::pair<std::string, JobConfig>> jobs;
  auto job = [&](const std::string &stem, const std::string &cmd, int M, const std::string &family,
                 const std::string &mode = "quantum") -> JobConfig & {
    JobConfig c;
    c.command = cmd;
    c.M = M;
    c.family = family;
    c.mode = mode;
    jobs.emplace_back(stem, c);
    return jobs.back().second;
  };
  for (int M = 1; M <= 4; ++M) {
    const std::string m = std::to_string(M);
    job("close_general_M" + m, "close", M, "general");
    job("close_general_M" + m + "_classical", "close", M, "general", "classical");
    job("casimir_general_M" + m, "casimir", M, "general");
    job("casimir_general_M" + m + "_classical", "casimir", M, "general", "classical");
    job("verify_general_M" + m, "verify", M, "general");
    job("verify_general_M" + m + "_classical", "verify", M, "general", "classical");
    job("close_cartesian_M" + m, "close", M, "cartesian");
    job("casimir_cartesian_M" + m, "casimir", M, "cartesian");
  }
  for (int M = 1; M <= 3; ++M) {
    const std::string m = std::to_string(M);
    job("realize_cartesian_M" + m, "realize", M, "cartesian");
    job("realize_cartesian_M" + m + "_classical", "realize", M, "cartesian", "classical");
  }
  job("close_polar_M2", "close", 2, "polar");
  job("casimir_polar_M2", "casimir", 2, "polar");
  job("realize_polar_M2", "realize", 2, "polar");
  job("realize_polar_M2_polynomial", "realize", 2, "polar").polynomialize = true;
  job("tables_general_M3", "tables", 3, "general");
  job("tables_flat_M4", "tables", 4, "general").beta = "zero";
  {
    JobConfig &c = job("spectrum_synthetic", "spectrum", 0, "general");
    c.phi = "N*(E - N)";
    c.pmax = 5;
  }
  {
    JobConfig &c = job("spectrum_cartesian_M1", "spectrum", 1, "cartesian");
    c.params = {{"d", "1"}, {"c1", "1/2"}, {"l1", "-1"}, {"z", "E"}};
    c.pmax = 6;
  }
  {
    JobConfig &c = job("spectrum_cartesian_M1_irrational", "spectrum", 1, "cartesian");
    c.params = {{"d", "2"}, {"c1", "1/3"}, {"l1", "-1/2"}, {"z", "E^2 - 3"}};
    c.pmax = 6;
  }
  return jobs;
}

int seed_fixtures(const std::string &dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  Json batch = Json::array();
  const auto jobs = fixture_jobs();
  for (const auto &[stem, cfg] : jobs) {
    Json entry = config_to_json(cfg);
    entry["name"] = stem;
    batch.push_back(entry);
  }
  JobResult all = run_batch(batch);
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    std::ofstream f(fs::path(dir) / (jobs[i].first + ".json"));
    f << dump(all.doc["results"][i]["result"]);
  }
  std::ofstream(fs::path(dir) / "batch.json") << dump(batch);
  return static_cast<int>(jobs.size());
}

}  // namespace polyalg::cli
