#pragma once

// The verification suite behind `wpnum verify`.
//
// Checks are grouped; each group returns one or more records and groups run
// in a fixed order. Every random draw comes from Rng(seed, stream, index),
// so a report depends only on the configuration and never on the worker
// count or on scheduling.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wpnum/quad.hpp"

namespace wpnum::cli {

struct VerifyConfig {
  int nr = 64;            // radial nodes of the default disk rule
  int ntheta = 256;       // angular nodes of the default disk rule
  int degree = 32;        // truncation N for projections
  double tol_scale = 1.0; // multiplies every pinned tolerance
  std::uint64_t seed = 42;
  int trials = 1000;      // Wulf trials per (r, t); other ensembles use min(own size, trials)
  int workers = 0;        // 0: default_workers()
  bool timings = false;   // fill runtime_ms (makes the report non-reproducible)
};

/// Throws ParameterError on out-of-range settings.
void validate(const VerifyConfig& cfg);

/// Overlay the keys present in a JSON config file onto `base`.
/// Recognised keys: nr, ntheta, degree, tol_scale, seed, trials.
VerifyConfig apply_config_file(VerifyConfig base, const std::filesystem::path& path);

nlohmann::ordered_json config_echo(const VerifyConfig& cfg);

struct CheckRecord {
  std::string check;
  double value = 0.0;
  std::optional<double> bound;
  std::optional<double> tol;
  bool pass = false;
  std::string anchor;
  std::optional<double> runtime_ms;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
};

struct Report {
  VerifyConfig config;
  std::vector<CheckRecord> checks;

  bool pass() const;
};

/// Group names in execution order.
const std::vector<std::string>& check_groups();

/// Run a single group. Throws ParameterError for an unknown name.
std::vector<CheckRecord> run_group(const std::string& name, const VerifyConfig& cfg);

Report run_verify(const VerifyConfig& cfg);

std::string to_json(const Report& report);

/// One trial of the annulus sup estimate: a random Laurent polynomial with
/// unit coefficient vector, its weighted sup over 1 < |z| <= t, its weighted
/// L^2 norm over 1 < |z| < r and the bound C(r, t) * norm.
struct WulfTrial {
  double sup = 0.0;
  double norm = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
};

/// Random stream used for trial `index` of pair `pair` is (seed, wulf stream + pair, index).
WulfTrial wulf_trial(double r, double t, std::uint64_t seed, int pair, std::uint64_t index);

/// Grid used for the sup in wulf_trial.
SupGrid wulf_grid();

}  // namespace wpnum::cli
