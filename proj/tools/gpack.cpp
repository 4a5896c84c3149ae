// Command-line front end: pack, ringel, gyarfas, verify, tree-stats, diagnose.
// Exit codes: 0 success, 2 failure after the attempt budget, 1 fault.

#include "gpack/pipeline.hpp"
#include "gpack/tree.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct RunFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> attempts;
  std::optional<std::size_t> stage_budget;
  std::optional<std::string> preset;
  std::optional<double> mu, nu, gamma, delta;
  std::optional<std::string> match_mode;
  std::optional<std::size_t> mcmc_budget;
  std::optional<int> diagnostics;
  std::optional<std::size_t> threads;
  bool check_invariants = false;
  std::string out;
  std::string diag_out;
};

void add_run_flags(CLI::App* app, RunFlags& f) {
  app->add_option("--config", f.config_path, "JSON run configuration");
  app->add_option("--seed", f.seed, "master seed");
  app->add_option("--attempts", f.attempts, "attempt budget");
  app->add_option("--stage-budget", f.stage_budget, "orientation and matching retries per attempt");
  app->add_option("--preset", f.preset, "desk | paper")->check(CLI::IsMember({"desk", "paper"}));
  app->add_option("--mu", f.mu, "special fraction");
  app->add_option("--nu", f.nu, "omitted leaf fraction");
  app->add_option("--gamma", f.gamma, "reservoir density");
  app->add_option("--delta", f.delta, "completion fraction");
  app->add_option("--match-mode", f.match_mode, "exact | mcmc | auto")
      ->check(CLI::IsMember({"exact", "mcmc", "auto"}));
  app->add_option("--mcmc-budget", f.mcmc_budget, "chain steps per matching (0: default)");
  app->add_option("--diagnostics", f.diagnostics, "0 off, 1 leftover, 2 leftover and embedding")
      ->check(CLI::Range(0, 2));
  app->add_option("--threads", f.threads, "worker threads (0: hardware)");
  app->add_flag("--check-invariants", f.check_invariants, "check orientation invariants every round");
  app->add_option("--out", f.out, "certificate path (default stdout)");
  app->add_option("--diag-out", f.diag_out, "diagnostics JSON path");
}

gpack::RunConfig build_config(const RunFlags& f) {
  gpack::RunConfig c = f.config_path.empty() ? gpack::RunConfig{} : gpack::load_config(f.config_path);
  if (f.seed) c.seed = *f.seed;
  if (f.attempts) c.attempts = *f.attempts;
  if (f.stage_budget) c.stage_budget = *f.stage_budget;
  if (f.preset) c.preset = *f.preset;
  if (f.mu) c.mu = f.mu;
  if (f.nu) c.nu = f.nu;
  if (f.gamma) c.gamma = f.gamma;
  if (f.delta) c.delta = f.delta;
  if (f.match_mode) c.match_mode = gpack::sampler_mode_from_string(*f.match_mode);
  if (f.mcmc_budget) c.mcmc_budget = *f.mcmc_budget;
  if (f.diagnostics) c.diagnostics = *f.diagnostics;
  if (f.threads) c.threads = *f.threads;
  if (f.check_invariants) c.check_invariants = true;
  return c;
}

void write_json(const nlohmann::json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

int report(const gpack::Result<gpack::PipelineOutcome, gpack::PipelineFailure>& result, const RunFlags& f) {
  if (!result) {
    const auto& failure = result.failure();
    std::cerr << "no packing after " << failure.attempts << " attempts\n";
    for (const auto& r : failure.failures)
      std::cerr << "  attempt " << r.attempt << ": " << r.stage << ": " << r.detail << '\n';
    return 2;
  }
  const auto& outcome = result.value();
  const auto& cert = outcome.certificate;
  std::cerr << (cert.perfect ? "perfect packing" : "packing") << " found at attempt " << cert.attempt
            << " (" << cert.attempts_used << " used)\n";
  write_json(gpack::to_json(cert), f.out);
  if (outcome.diagnostics) {
    nlohmann::json d;
    d["leftover"] = gpack::to_json(*outcome.diagnostics);
    d["conditions"] = nlohmann::json::array();
    for (const auto& p : outcome.conditions) d["conditions"].push_back(gpack::to_json(p));
    if (!f.diag_out.empty()) {
      write_json(d, f.diag_out);
    } else {
      for (const auto& m : outcome.diagnostics->properties)
        std::cerr << "  " << m.name << ": worst " << m.worst << " bound " << m.bound
                  << (m.holds ? " holds" : m.degenerate ? " degenerate" : " fails") << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomised perfect packing of degenerate graph sequences"};
  app.require_subcommand(1);

  RunFlags pack_flags, ringel_flags, gyarfas_flags;
  std::string manifest, host_path;
  auto* pack = app.add_subcommand("pack", "pack a guest manifest into a host edge list");
  pack->add_option("manifest", manifest, "guest manifest (JSON)")->required();
  pack->add_option("host", host_path, "host edge list")->required();
  add_run_flags(pack, pack_flags);

  std::size_t ringel_n = 0, gyarfas_n = 0;
  auto* ringel = app.add_subcommand("ringel", "2n-1 copies of a random n-vertex tree into K_{2n-1}");
  ringel->add_option("--n", ringel_n, "tree order")->required()->check(CLI::Range(3, 100000));
  add_run_flags(ringel, ringel_flags);
  auto* gyarfas = app.add_subcommand("gyarfas", "random trees T_2..T_n into K_n");
  gyarfas->add_option("--n", gyarfas_n, "host order")->required()->check(CLI::Range(2, 100000));
  add_run_flags(gyarfas, gyarfas_flags);

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "re-validate a certificate");
  verify->add_option("--cert", verify_path, "certificate path")->required();

  std::size_t stats_n = 0, stats_samples = 0;
  std::uint64_t stats_seed = 1;
  std::string stats_out;
  auto* stats = app.add_subcommand("tree-stats", "leaf count and maximum degree of random trees (CSV)");
  stats->add_option("--n", stats_n, "tree order")->required()->check(CLI::Range(2, 10000000));
  stats->add_option("--samples", stats_samples, "number of trees")->required();
  stats->add_option("--seed", stats_seed, "master seed");
  stats->add_option("--out", stats_out, "CSV path (default stdout)");

  std::string diag_path, diag_out;
  double diag_gamma_prime = -1;
  std::size_t diag_level = 0;
  auto* diagnose = app.add_subcommand("diagnose", "leftover diagnostics from a certificate");
  diagnose->add_option("--cert", diag_path, "certificate path")->required();
  diagnose->add_option("--gamma-prime", diag_gamma_prime, "tolerance base (default: certificate config)");
  diagnose->add_option("--level", diag_level, "subset size for P1 (default: certificate config)");
  diagnose->add_option("--out", diag_out, "JSON path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*pack) {
      const auto seq = gpack::load_manifest(manifest);
      const auto host = gpack::read_edge_list_file(host_path);
      return report(gpack::perfect_packing(seq, host, build_config(pack_flags)), pack_flags);
    }
    if (*ringel) return report(gpack::harness_ringel(ringel_n, build_config(ringel_flags)), ringel_flags);
    if (*gyarfas) return report(gpack::harness_gyarfas(gyarfas_n, build_config(gyarfas_flags)), gyarfas_flags);
    if (*verify) {
      const auto cert = gpack::load_certificate(verify_path);
      const auto r = gpack::verify_certificate(cert);
      const bool agrees = r.perfect == cert.perfect;
      std::cout << (r.valid ? "valid" : "invalid") << ' ' << (r.perfect ? "perfect" : "not-perfect")
                << " used_edges=" << r.used_edges << '/' << cert.host.edge_count();
      if (!r.valid) std::cout << " failed=" << gpack::to_string(r.failed) << " (" << r.message << ')';
      if (!agrees) std::cout << " claim=" << (cert.perfect ? "perfect" : "not-perfect") << " mismatch";
      std::cout << '\n';
      return r.valid && agrees ? 0 : 1;
    }
    if (*stats) {
      std::ofstream file;
      if (!stats_out.empty()) {
        file.open(stats_out);
        if (!file) throw std::runtime_error("cannot write " + stats_out);
      }
      std::ostream& out = stats_out.empty() ? std::cout : file;
      out << "sample,n,leaves,max_degree\n";
      for (std::size_t i = 0; i < stats_samples; ++i) {
        gpack::Rng rng = gpack::Rng::derive(stats_seed, i);
        const auto t = gpack::tree_stats(gpack::random_tree(stats_n, rng));
        out << i << ',' << t.n << ',' << t.leaf_count << ',' << t.max_degree << '\n';
      }
      return 0;
    }
    if (*diagnose) {
      const auto cert = gpack::load_certificate(diag_path);
      gpack::DiagnosticsOptions options;
      options.quasirandom_level = diag_level > 0 ? diag_level : cert.config.diagnostic_level;
      const double gp = diag_gamma_prime > 0 ? diag_gamma_prime : cert.config.gamma_prime;
      write_json(gpack::to_json(gpack::leftover_diagnostics(gpack::diagnostics_input(cert), gp, options)),
                 diag_out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
