#include "polyalg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using polyalg::cli::Json;
using polyalg::cli::JobConfig;
using polyalg::cli::JobResult;

namespace {

// name=value pairs from repeated --param flags
std::map<std::string, std::string> pairs(const std::vector<std::string> &raw) {
  std::map<std::string, std::string> out;
  for (const auto &s : raw) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw polyalg::cli::ConfigError("--param expects name=value, got '" + s + "'");
    out[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return out;
}

Json read_json(const std::string &path) {
  std::ifstream f(path);
  if (!f) throw polyalg::cli::ConfigError("cannot read " + path);
  return Json::parse(f);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Polynomial algebras of superintegrable systems: closure, Casimir, realization, spectra"};
  app.require_subcommand(0, 1);

  JobConfig cfg;
  std::string input, output, format = "json", seed_dir, batch;
  std::vector<std::string> params;
  unsigned threads = 0;

  app.add_option("--input", input, "JSON document from a previous stage (or a spec)");
  app.add_option("--output", output, "write the result here instead of stdout");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed-fixtures", seed_dir, "regenerate the fixture corpus into this directory");
  app.add_option("--batch", batch, "JSON array of job objects");
  app.add_option("--threads", threads, "batch worker threads (0 = all cores)");

  auto common = [&](CLI::App *s) {
    s->add_option("--M", cfg.M, "order of the integral B");
    s->add_option("--family", cfg.family, "general, cartesian or polar");
    s->add_option("--param", params, "name=value assignment, repeatable");
    s->add_option("--mode", cfg.mode, "quantum or classical");
    s->add_option("--beta", cfg.beta, "any, zero or nonzero");
  };
  auto *close = app.add_subcommand("close", "closing structure constants eta, omega");
  auto *casimir = app.add_subcommand("casimir", "Casimir coefficients");
  auto *realize = app.add_subcommand("realize", "deformed oscillator realization");
  auto *verify = app.add_subcommand("verify", "oracle residuals for a closed spec");
  auto *spectrum = app.add_subcommand("spectrum", "finite-dimensional unitary representations");
  auto *tables = app.add_subcommand("tables", "x/y, xbar/ybar and s tables");
  for (auto *s : {close, casimir, realize, verify, spectrum, tables}) {
    common(s);
    s->fallthrough();
  }
  for (auto *s : {casimir, realize, verify, spectrum}) {
    s->add_flag("--include-G", cfg.include_G, "add the G_k term (breaks centrality)");
    s->add_flag("--piecewise-Z", cfg.piecewise_Z, "three-branch Z_k");
  }
  for (auto *s : {realize, spectrum}) {
    s->add_option("--rho2", cfg.rho2, "rho(N)^2");
    s->add_flag("--polynomialize", cfg.polynomialize, "choose rho so that Phi is a polynomial");
    s->add_option("--c1", cfg.c1, "constant in A(N)");
    s->add_option("--u", cfg.u, "Casimir eigenvalue");
    s->add_option("--g0", cfg.g0, "classical integration constant");
  }
  spectrum->add_option("--phi", cfg.phi, "Phi(N; E, u) given directly");
  spectrum->add_option("--pmax", cfg.pmax, "largest p searched");
  spectrum->add_option("--precision", cfg.precision, "isolation width, p/q");
  spectrum->add_flag("--physical-only", cfg.physical_only, "drop solutions failing positivity");
  tables->add_option("--jmax", cfg.jmax, "table depth");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : polyalg::cli::kConfig;
  }

  JobResult res;
  try {
    if (!seed_dir.empty()) {
      const int n = polyalg::cli::seed_fixtures(seed_dir);
      res.doc = {{"seeded", n}, {"directory", seed_dir}};
    } else if (!batch.empty()) {
      res = polyalg::cli::run_batch(read_json(batch), threads);
    } else {
      if (app.get_subcommands().empty()) throw polyalg::cli::ConfigError("no subcommand given; see --help");
      cfg.command = app.get_subcommands().front()->get_name();
      cfg.params = pairs(params);
      if (!input.empty()) cfg.input = read_json(input);
      res = polyalg::cli::run(cfg);
    }
  } catch (const polyalg::cli::ConfigError &e) {
    res = {polyalg::cli::kConfig, {{"error", {{"type", "ConfigError"}, {"message", e.what()}, {"exit_code", 2}}}}};
  } catch (const Json::exception &e) {
    res = {polyalg::cli::kParse, {{"error", {{"type", "ParseError"}, {"message", e.what()}, {"exit_code", 3}}}}};
  }

  const std::string text = format == "text" ? polyalg::cli::dump_text(res.doc) : polyalg::cli::dump(res.doc);
  if (output.empty()) {
    (res.doc.contains("error") ? std::cerr : std::cout) << text;
  } else {
    std::ofstream(output) << text;
  }
  return res.exit_code;
}
