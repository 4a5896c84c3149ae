#pragma once

#include "gpack/leafmatch.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace gpack {

/// Run configuration. Unset optionals fall back to the preset or harness
/// defaults when resolved.
struct RunConfig {
  std::string preset = "desk";  ///< desk | paper
  std::uint64_t seed = 1;
  std::size_t attempts = 100;
  std::size_t stage_budget = 10;  ///< orientation and matching retries per attempt
  std::optional<double> mu;
  std::optional<double> nu;
  std::optional<double> gamma;
  std::optional<double> delta;
  double gamma_prime = 0.5;
  std::optional<double> flip_cap;  ///< fraction of n
  SamplerMode match_mode = SamplerMode::automatic;
  std::size_t exact_cap = 12;
  std::size_t mcmc_budget = 0;  ///< 0: 50 |E| ln |E|
  int diagnostics = 0;          ///< 0 off, 1 leftover, 2 leftover + embedding conditions
  std::size_t diagnostic_level = 2;  ///< subset size for the P1 check
  std::optional<double> tail_fraction;
  std::size_t threads = 1;
  bool check_invariants = false;
  std::string compress = "auto";  ///< auto | on | off
};

nlohmann::json to_json(const RunConfig& config);
/// Overlays the keys present in j onto config. Throws std::invalid_argument
/// on unknown keys or bad values.
void apply_json(RunConfig& config, const nlohmann::json& j);
RunConfig load_config(const std::string& path);

/// Concrete numbers for one run on n vertices.
struct ResolvedParameters {
  double gamma = 0;
  double delta = 0;
  double flip_cap = 0;    ///< fraction of n
  std::size_t reserved = 0;  ///< floor(delta n)
  double min_reservoir_candidates = 0;  ///< see PackingParams
  bool long_paths = false;              ///< see SwitchOptions
  bool prefer_isolated_tail = false;    ///< see PrepOptions
  std::vector<std::string> notes;
};

/// desk: gamma = min(0.1, mu nu / 2.1), delta = max(1/n, 0.05), flip cap 0.5,
/// guests whose tail the reservoir cannot absorb are embedded in full, and
/// orientation repair may reverse paths longer than 2.
/// paper: delta and eta from the constant schedule, flip cap 100 gamma'^3.
/// Explicit config values win in both presets.
ResolvedParameters resolve_parameters(const RunConfig& config, std::size_t n, std::size_t D,
                                      double mu, double nu);

}  // namespace gpack
