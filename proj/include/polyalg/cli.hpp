#pragma once

#include "polyalg/algebra_spec.hpp"
#include "polyalg/structure.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyalg::cli {

using Json = nlohmann::json;

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Exit status per error type.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kConfig = 2,
  kParse = 3,
  kInconsistent = 4,
  kZeroDenominator = 5,
  kSingular = 6,
  kNonIntegrable = 7,
  kEliminationDegenerate = 8,
  kUndecidedSign = 9,
  kModeMismatch = 10,
  kVerificationFailed = 11,
};

struct JobConfig {
  std::string command;               // close casimir realize verify spectrum tables
  int M = 0;                         // 0: take it from the input document
  std::string family = "general";    // general | cartesian | polar
  std::map<std::string, std::string> params;  // alias -> expression, applied before closing
  std::string mode = "quantum";      // quantum | classical
  std::string beta = "any";          // any | zero | nonzero
  std::string rho2 = "1";
  bool polynomialize = false;
  std::string c1 = "c1", u = "u", g0 = "0";
  bool include_G = false, piecewise_Z = false;
  int pmax = 5;
  std::string precision = "1/1000000000000";
  bool physical_only = false;
  std::string phi;                   // spectrum: explicit Phi(N; E, u)
  int jmax = 0;                      // tables: depth (default M + 1)
  std::optional<Json> input;         // document read from --input
};

/// One job, never throws: errors come back as {"error": {...}} with their exit code.
struct JobResult {
  int exit_code = kOk;
  Json doc;
};
JobResult run(const JobConfig &config);

/// Batch: a JSON array of config objects (same keys as the flags). Jobs run
/// concurrently; results keep the input order.
JobResult run_batch(const Json &configs, unsigned threads = 0);

JobConfig config_from_json(const Json &j);
Json config_to_json(const JobConfig &c);

Json spec_to_json(const AlgebraSpec &s);
AlgebraSpec spec_from_json(const Json &j);
Json casimir_to_json(const CasimirCoeffs &c);

/// Canonical text of a result document: sorted keys, two-space indent, trailing newline.
std::string dump(const Json &doc);
/// Plain "path = value" lines.
std::string dump_text(const Json &doc);

/// Writes the fixture corpus (M <= 4) into dir: one file per job plus
/// batch.json listing every job. Returns the number of jobs.
int seed_fixtures(const std::string &dir);
/// The job list behind seed_fixtures, as (file stem, config).
std::vector<std::pair<std::string, JobConfig>> fixture_jobs();

}  // namespace polyalg::cli
