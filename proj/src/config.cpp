#include "gpack/config.hpp"

#include "gpack/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace gpack {

namespace {

template <class T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& value) {
  if (value) j[key] = *value;
  else j[key] = nullptr;
}

template <class T>
void get_optional(const nlohmann::json& j, std::optional<T>& out) {
  if (j.is_null()) out.reset();
  else out = j.get<T>();
}

}  // namespace

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json j;
  j["preset"] = c.preset;
  j["seed"] = c.seed;
  j["attempts"] = c.attempts;
  j["stage_budget"] = c.stage_budget;
  put_optional(j, "mu", c.mu);
  put_optional(j, "nu", c.nu);
  put_optional(j, "gamma", c.gamma);
  put_optional(j, "delta", c.delta);
  j["gamma_prime"] = c.gamma_prime;
  put_optional(j, "flip_cap", c.flip_cap);
  j["match_mode"] = to_string(c.match_mode);
  j["exact_cap"] = c.exact_cap;
  j["mcmc_budget"] = c.mcmc_budget;
  j["diagnostics"] = c.diagnostics;
  j["diagnostic_level"] = c.diagnostic_level;
  put_optional(j, "tail_fraction", c.tail_fraction);
  j["check_invariants"] = c.check_invariants;
  j["compress"] = c.compress;
  return j;
}

void apply_json(RunConfig& c, const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "preset") c.preset = value.get<std::string>();
      else if (key == "seed") c.seed = value.get<std::uint64_t>();
      else if (key == "attempts") c.attempts = value.get<std::size_t>();
      else if (key == "stage_budget") c.stage_budget = value.get<std::size_t>();
      else if (key == "mu") get_optional(value, c.mu);
      else if (key == "nu") get_optional(value, c.nu);
      else if (key == "gamma") get_optional(value, c.gamma);
      else if (key == "delta") get_optional(value, c.delta);
      else if (key == "gamma_prime") c.gamma_prime = value.get<double>();
      else if (key == "flip_cap") get_optional(value, c.flip_cap);
      else if (key == "match_mode") c.match_mode = sampler_mode_from_string(value.get<std::string>());
      else if (key == "exact_cap") c.exact_cap = value.get<std::size_t>();
      else if (key == "mcmc_budget") c.mcmc_budget = value.get<std::size_t>();
      else if (key == "diagnostics") c.diagnostics = value.get<int>();
      else if (key == "diagnostic_level") c.diagnostic_level = value.get<std::size_t>();
      else if (key == "tail_fraction") get_optional(value, c.tail_fraction);
      else if (key == "threads") c.threads = value.get<std::size_t>();
      else if (key == "check_invariants") c.check_invariants = value.get<bool>();
      else if (key == "compress") c.compress = value.get<std::string>();
      else throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (c.preset != "desk" && c.preset != "paper")
    throw std::invalid_argument("config: preset must be desk or paper");
  if (c.compress != "auto" && c.compress != "on" && c.compress != "off")
    throw std::invalid_argument("config: compress must be auto, on or off");
  if (c.diagnostics < 0 || c.diagnostics > 2)
    throw std::invalid_argument("config: diagnostics must be 0, 1 or 2");
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config " + path + ": " + e.what());
  }
  RunConfig c;
  apply_json(c, j);
  return c;
}

ResolvedParameters resolve_parameters(const RunConfig& config, std::size_t n, std::size_t D,
                                      double mu, double nu) {
  ResolvedParameters r;
  const double default_gamma = std::min(0.1, mu * nu / 2.1);
  r.gamma = config.gamma.value_or(default_gamma);
  if (config.preset == "paper") {
    const double g = r.gamma > 0 ? r.gamma : 0.1;
    const auto schedule = constant_schedule(std::max<std::size_t>(D, 1), g, std::max<std::size_t>(n, 1));
    r.delta = config.delta.value_or(static_cast<double>(std::exp(schedule.delta.log())));
    r.flip_cap = config.flip_cap.value_or(100.0 * std::pow(config.gamma_prime, 3));
  } else {
    r.delta = config.delta.value_or(std::max(n > 0 ? 1.0 / static_cast<double>(n) : 0.0, 0.05));
    r.flip_cap = config.flip_cap.value_or(0.5);
    r.min_reservoir_candidates = 1.0;
    r.long_paths = true;
    r.prefer_isolated_tail = true;
  }
  r.reserved = static_cast<std::size_t>(std::floor(r.delta * static_cast<double>(n) + 1e-9));
  if (r.reserved == 0)
    r.notes.push_back("floor(delta n) = 0: the reservoir is not used for completion");
  if (config.preset == "paper" && 100.0 * std::pow(config.gamma_prime, 3) * static_cast<double>(n) < 1)
    r.notes.push_back("flip cap 100 gamma'^3 n is below one edge");
  return r;
}

}  // namespace gpack
