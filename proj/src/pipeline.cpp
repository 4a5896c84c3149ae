#include "gpack/pipeline.hpp"

#include "gpack/leafmatch.hpp"
#include "gpack/orient.hpp"
#include "gpack/packer.hpp"
#include "gpack/tree.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace gpack {

namespace {

// ---------------------------------------------------------------------------
// Working sequence: padding, compression, specials last

struct Working {
  GuestSequence seq;
  std::vector<Placement> placement;  ///< input guest -> working guest
  std::vector<std::string> notes;
};

std::vector<Vertex> identity_map(std::size_t n) {
  std::vector<Vertex> map(n);
  std::iota(map.begin(), map.end(), 0);
  return map;
}

Working prepare_working(const GuestSequence& input, const Graph& hhat, const RunConfig& config) {
  input.validate();
  const std::size_t n = input.n;
  if (hhat.order() != n)
    throw std::invalid_argument("perfect_packing: host has " + std::to_string(hhat.order()) +
                                " vertices, sequence expects " + std::to_string(n));
  const std::size_t total = input.total_edges();
  if (total > hhat.edge_count())
    throw std::invalid_argument("perfect_packing: guests have " + std::to_string(total) +
                                " edges, host has " + std::to_string(hhat.edge_count()));

  Working w;
  w.placement.resize(input.guests.size());
  std::vector<Graph> plain;
  std::vector<std::size_t> plain_index;
  for (std::size_t s = 0; s < input.guests.size(); ++s)
    if (!input.special[s]) {
      plain.push_back(input.guests[s]);
      plain_index.push_back(s);
    }
  const std::size_t padding = hhat.edge_count() - total;
  const Edge single[] = {{0, 1}};
  for (std::size_t i = 0; i < padding; ++i) plain.push_back(Graph::from_edges(2, single));
  if (padding > 0) w.notes.push_back("packing mode: added " + std::to_string(padding) + " single-edge guests");

  const bool squeeze = config.compress == "on" ||
                       (config.compress == "auto" && (4 * plain.size() > 7 * n || padding > 0));
  if (squeeze) {
    auto c = compress(plain, n);
    w.notes.push_back("compressed " + std::to_string(plain.size()) + " non-special guests into " +
                      std::to_string(c.graphs.size()));
    for (auto& g : c.graphs) w.seq.guests.push_back(std::move(g));
    for (std::size_t i = 0; i < plain_index.size(); ++i) w.placement[plain_index[i]] = c.placement[i];
  } else {
    for (std::size_t i = 0; i < plain.size(); ++i) {
      if (i < plain_index.size()) w.placement[plain_index[i]] = {w.seq.guests.size(), identity_map(plain[i].order())};
      plain[i].resize(n);
      w.seq.guests.push_back(std::move(plain[i]));
    }
  }
  const std::size_t non_special = w.seq.guests.size();
  for (std::size_t s = 0; s < input.guests.size(); ++s)
    if (input.special[s]) {
      w.placement[s] = {w.seq.guests.size(), identity_map(input.guests[s].order())};
      w.seq.guests.push_back(input.guests[s]);
    }
  w.seq.special.assign(w.seq.guests.size(), false);
  std::fill(w.seq.special.begin() + static_cast<std::ptrdiff_t>(non_special), w.seq.special.end(), true);
  w.seq.n = n;
  w.seq.mu = input.mu;
  w.seq.nu = input.nu;
  w.seq.degeneracy = std::max<std::size_t>(input.degeneracy, 1);
  for (const auto& g : w.seq.guests)
    w.seq.degeneracy = std::max(w.seq.degeneracy, degeneracy_order(g).max_left_degree);
  w.seq.validate();
  return w;
}

// ---------------------------------------------------------------------------
// One attempt

struct AlmostStage {
  PreparedSequence prepared;
  PackingResult packed;
};

Result<AlmostStage, AttemptRecord> almost_stage(const Working& w, const Graph& hhat,
                                                const RunConfig& config, const ResolvedParameters& r,
                                                std::size_t attempt, Rng& rng,
                                                std::vector<ConditionProbe>* probes) {
  PrepOptions prep;
  prep.tail_fraction = config.tail_fraction.value_or(-1);
  prep.min_tail = r.reserved;
  prep.prefer_isolated_tail = r.prefer_isolated_tail;
  auto prepared = build_subgraph_sequence(w.seq, w.seq.omitted_per_special(), prep, rng);

  PackingParams params;
  params.gamma = r.gamma;
  params.delta = r.delta;
  params.min_reservoir_candidates = r.min_reservoir_candidates;
  const std::size_t n = w.seq.n;
  if (probes) {
    params.checkpoint = std::max<std::size_t>(1, n / 10);
    const double beta = config.gamma_prime;
    const std::size_t L = config.diagnostic_level;
    params.probe = [probes, beta, L, n](std::size_t s, std::size_t start, const OrderedGuest& guest,
                                        const Graph& main, const Graph& reservoir,
                                        const PartialEmbedding& psi) {
      std::vector<Vertex> used;
      for (Vertex x : guest.prefix(psi.frontier)) used.push_back(psi.image[x]);
      probes->push_back({s, psi.frontier, diet_check(main, used, beta, L)});
      probes->push_back({s, psi.frontier, codiet_check(main, reservoir, used, beta, L)});
      const double eps = static_cast<double>(psi.frontier - start) / static_cast<double>(n);
      probes->push_back({s, psi.frontier, cover_check(guest, main, psi, start, eps, beta)});
    };
  }
  auto packed = packing_process(prepared, hhat, params, rng);
  if (!packed) {
    const auto& f = packed.failure();
    return AttemptRecord{attempt, f.stage == PackStage::embedding ? "embedding" : "completion", describe(f)};
  }
  return AlmostStage{std::move(prepared), std::move(packed).value()};
}

std::vector<VertexMap> assemble(const PreparedSequence& prepared,
                                std::span<const PartialEmbedding> embeddings,
                                const std::vector<LeafMatchingGraph>& graphs,
                                const LeafMatching& matching) {
  std::vector<VertexMap> maps;
  for (std::size_t s = 0; s < prepared.guests.size(); ++s) {
    const auto& image = embeddings[s].image;
    maps.emplace_back(image.begin(), image.begin() + static_cast<std::ptrdiff_t>(prepared.guests[s].original_order));
  }
  for (const MatchStep& step : matching.steps) {
    const auto& left = graphs[step.r].left;
    for (std::size_t i = 0; i < left.size(); ++i) maps[left[i].guest][left[i].leaf] = step.images[i];
  }
  return maps;
}

struct AttemptSuccess {
  PreparedSequence prepared;
  PackingResult packed;
  std::vector<VertexMap> maps;  ///< on the working guests
  std::vector<ConditionProbe> probes;
};

Result<AttemptSuccess, AttemptRecord> run_attempt(const Working& w, const Graph& hhat,
                                                  const RunConfig& config,
                                                  const ResolvedParameters& r, std::size_t attempt) {
  Rng rng = Rng::derive(config.seed, attempt);
  std::vector<ConditionProbe> probes;
  auto stage = almost_stage(w, hhat, config, r, attempt, rng, config.diagnostics >= 2 ? &probes : nullptr);
  if (!stage) return stage.failure();
  AlmostStage& almost = stage.value();
  const auto& embeddings = almost.packed.embeddings;
  const WeightMap weights = compute_weights(almost.prepared, embeddings);

  SwitchOptions switching{r.flip_cap, config.check_invariants, r.long_paths};
  SamplerOptions sampling{config.match_mode, config.exact_cap, config.mcmc_budget};
  const std::size_t budget = std::max<std::size_t>(1, config.stage_budget);
  AttemptRecord last{attempt, "orientation", ""};
  for (std::size_t o = 0; o < budget; ++o) {
    const OrientedGraph h0 = random_orientation(almost.packed.leftover, rng);
    auto switched = orientation_switch(h0, weights.host, switching, rng);
    if (!switched) {
      last = {attempt, "orientation", describe(switched.failure())};
      continue;
    }
    const auto graphs = build_leaf_graphs(almost.prepared, switched.value().graph, embeddings);
    for (std::size_t m = 0; m < budget; ++m) {
      auto trial = graphs;
      auto matched = match_leaves(trial, sampling, rng);
      if (!matched) {
        last = {attempt, "matching", "no perfect matching in F_" + std::to_string(matched.failure().r)};
        continue;
      }
      auto maps = assemble(almost.prepared, embeddings, trial, matched.value());
      const auto report = validate_packing(hhat, w.seq.guests, maps);
      if (!report.valid || !report.perfect)
        throw std::logic_error("perfect_packing: assembled packing is invalid: " + report.message);
      return AttemptSuccess{std::move(almost.prepared), std::move(almost.packed), std::move(maps),
                            std::move(probes)};
    }
  }
  return last;
}

// ---------------------------------------------------------------------------
// JSON helpers

nlohmann::json graph_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from(const nlohmann::json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  return Graph::from_edges(j.at("n").get<std::size_t>(), edges);
}

std::string hex(std::uint64_t x) {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(x));
  return buffer;
}

}  // namespace

// ---------------------------------------------------------------------------
// Certificates

nlohmann::json to_json(const PackingCertificate& c) {
  nlohmann::json j;
  j["schema"] = certificate_schema;
  auto host = graph_json(c.host);
  host["hash"] = hex(graph_hash(c.host));
  j["host"] = host;
  j["guests"] = nlohmann::json::array();
  for (std::size_t s = 0; s < c.guests.size(); ++s) {
    auto g = graph_json(c.guests[s]);
    g["special"] = static_cast<bool>(c.special[s]);
    j["guests"].push_back(g);
  }
  j["maps"] = c.maps;
  j["seed"] = c.seed;
  j["attempt"] = c.attempt;
  j["attempts_used"] = c.attempts_used;
  j["config"] = to_json(c.config);
  j["perfect"] = c.perfect;
  nlohmann::json stage;
  stage["mu"] = c.mu;
  stage["nu"] = c.nu;
  stage["special_count"] = c.special_count;
  stage["omitted_per_special"] = c.omitted_per_special;
  stage["leftover"] = graph_json(c.leftover);
  stage["specials"] = nlohmann::json::array();
  for (const auto& v : c.specials)
    stage["specials"].push_back({{"guest", v.guest}, {"image", v.image}, {"parent_hosts", v.parent_hosts}});
  j["almost_perfect"] = stage;
  j["notes"] = c.notes;
  return j;
}

PackingCertificate certificate_from_json(const nlohmann::json& j) {
  PackingCertificate c;
  try {
    if (j.at("schema").get<std::string>() != certificate_schema)
      throw std::invalid_argument("certificate: unsupported schema " + j.at("schema").get<std::string>());
    c.host = graph_from(j.at("host"));
    if (j.at("host").at("hash").get<std::string>() != hex(graph_hash(c.host)))
      throw std::invalid_argument("certificate: host hash does not match the host edges");
    for (const auto& g : j.at("guests")) {
      c.guests.push_back(graph_from(g));
      c.special.push_back(g.value("special", false));
    }
    c.maps = j.at("maps").get<std::vector<VertexMap>>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.attempt = j.at("attempt").get<std::size_t>();
    c.attempts_used = j.at("attempts_used").get<std::size_t>();
    apply_json(c.config, j.at("config"));
    c.perfect = j.at("perfect").get<bool>();
    const auto& stage = j.at("almost_perfect");
    c.mu = stage.at("mu").get<double>();
    c.nu = stage.at("nu").get<double>();
    c.special_count = stage.at("special_count").get<std::size_t>();
    c.omitted_per_special = stage.at("omitted_per_special").get<std::size_t>();
    c.leftover = graph_from(stage.at("leftover"));
    for (const auto& v : stage.at("specials"))
      c.specials.push_back({v.at("guest").get<std::size_t>(), v.at("image").get<std::vector<Vertex>>(),
                            v.at("parent_hosts").get<std::vector<Vertex>>()});
    c.notes = j.at("notes").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("certificate: ") + e.what());
  }
  if (c.maps.size() != c.guests.size())
    throw std::invalid_argument("certificate: one map per guest required");
  return c;
}

void save_certificate(const PackingCertificate& certificate, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_json(certificate).dump(2) << '\n';
}

PackingCertificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open certificate " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("certificate " + path + ": " + e.what());
  }
  return certificate_from_json(j);
}

ValidationReport verify_certificate(const PackingCertificate& certificate) {
  return validate_packing(certificate.host, certificate.guests, certificate.maps);
}

DiagnosticsInput diagnostics_input(const PackingCertificate& c) {
  DiagnosticsInput in;
  in.n = c.host.order();
  in.mu = c.mu;
  in.special_count = c.special_count;
  in.omitted_per_special = c.omitted_per_special;
  in.leftover = c.leftover;
  in.specials = c.specials;
  return in;
}

nlohmann::json to_json(const ConditionProbe& p) {
  auto finite = [](double x) -> nlohmann::json {
    if (std::isfinite(x)) return x;
    return x > 0 ? "inf" : "-inf";
  };
  const auto& r = p.report;
  nlohmann::json j{{"guest", p.guest},
                   {"frontier", p.frontier},
                   {"kind", to_string(r.kind)},
                   {"beta", r.beta},
                   {"holds", r.holds},
                   {"degenerate", r.degenerate},
                   {"worst_violation", finite(r.worst_violation)},
                   {"witness", r.witness},
                   {"checked", r.checked}};
  if (r.kind == ConditionKind::cover) {
    j["window"] = r.window;
    j["eps"] = r.eps;
  } else {
    j["L"] = r.L;
  }
  if (r.kind == ConditionKind::codiet) j["witness_r"] = r.witness_r;
  return j;
}

// ---------------------------------------------------------------------------
// Pipeline

Result<PipelineOutcome, PipelineFailure> perfect_packing(const GuestSequence& seq, const Graph& hhat,
                                                         const RunConfig& config) {
  const Working w = prepare_working(seq, hhat, config);
  const ResolvedParameters r =
      resolve_parameters(config, w.seq.n, w.seq.degeneracy, w.seq.mu, w.seq.nu);

  struct Slot {
    std::optional<Result<AttemptSuccess, AttemptRecord>> result;
    std::exception_ptr error;
  };
  const std::size_t attempts = config.attempts;
  std::vector<Slot> slots(attempts);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> stop{attempts};
  auto lower = [&](std::size_t i) {
    std::size_t current = stop.load();
    while (i < current && !stop.compare_exchange_weak(current, i)) {
    }
  };
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= stop.load()) return;
      try {
        slots[i].result.emplace(run_attempt(w, hhat, config, r, i));
        if (slots[i].result->ok()) lower(i);
      } catch (...) {
        slots[i].error = std::current_exception();
        lower(i);
      }
    }
  };
  std::size_t threads = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(attempts, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<AttemptRecord> failures;
  const std::size_t end = stop.load();
  for (std::size_t i = 0; i < end; ++i)
    if (slots[i].result) failures.push_back(slots[i].result->failure());
  if (end == attempts) return PipelineFailure{attempts, std::move(failures)};
  if (slots[end].error) std::rethrow_exception(slots[end].error);
  AttemptSuccess& win = slots[end].result->value();

  PackingCertificate cert;
  cert.host = hhat;
  cert.guests = seq.guests;
  cert.special = seq.special;
  for (std::size_t s = 0; s < seq.guests.size(); ++s) {
    const Placement& p = w.placement[s];
    VertexMap map(seq.guests[s].order());
    for (std::size_t x = 0; x < map.size(); ++x) map[x] = win.maps[p.output][p.map[x]];
    cert.maps.push_back(std::move(map));
  }
  const auto report = validate_packing(hhat, cert.guests, cert.maps);
  if (!report.valid) throw std::logic_error("perfect_packing: certificate fails validation: " + report.message);
  cert.perfect = report.perfect;
  cert.seed = config.seed;
  cert.attempt = end;
  cert.attempts_used = end + 1;
  cert.config = config;
  cert.mu = w.seq.mu;
  cert.nu = w.seq.nu;
  cert.special_count = win.prepared.special_count;
  cert.omitted_per_special = win.prepared.omitted_per_special;
  cert.leftover = win.packed.leftover;
  std::vector<std::size_t> input_of(w.seq.guests.size(), 0);
  for (std::size_t s = 0; s < seq.guests.size(); ++s)
    if (seq.special[s]) input_of[w.placement[s].output] = s;
  cert.specials = diagnostics_input(win.packed.leftover, win.prepared, win.packed.embeddings).specials;
  for (auto& view : cert.specials) view.guest = input_of[view.guest];
  for (const auto& list : {w.notes, r.notes, win.prepared.notes, win.packed.notes})
    cert.notes.insert(cert.notes.end(), list.begin(), list.end());

  PipelineOutcome outcome;
  outcome.certificate = std::move(cert);
  outcome.failures = std::move(failures);
  outcome.conditions = std::move(win.probes);
  if (config.diagnostics >= 1) {
    DiagnosticsOptions options;
    options.quasirandom_level = config.diagnostic_level;
    outcome.diagnostics =
        leftover_diagnostics(diagnostics_input(outcome.certificate), config.gamma_prime, options);
  }
  return outcome;
}

std::optional<AlmostPerfect> almost_perfect_packing(const GuestSequence& seq, const Graph& hhat,
                                                    const RunConfig& config, std::size_t attempt) {
  Working w = prepare_working(seq, hhat, config);
  const ResolvedParameters r =
      resolve_parameters(config, w.seq.n, w.seq.degeneracy, w.seq.mu, w.seq.nu);
  Rng rng = Rng::derive(config.seed, attempt);
  auto stage = almost_stage(w, hhat, config, r, attempt, rng, nullptr);
  if (!stage) return std::nullopt;
  AlmostStage& almost = stage.value();
  return AlmostPerfect{std::move(w.seq), std::move(almost.prepared), std::move(almost.packed.embeddings),
                       std::move(almost.packed.leftover)};
}

// ---------------------------------------------------------------------------
// Harnesses

namespace {

std::size_t leaf_count(const Graph& t) {
  std::size_t leaves = 0;
  for (std::size_t v = 0; v < t.order(); ++v) leaves += t.degree(static_cast<Vertex>(v)) == 1;
  return leaves;
}

// Leaves that can be omitted together: a single edge offers one.
std::size_t independent_leaves(const Graph& t) { return t.order() == 2 ? 1 : leaf_count(t); }

}  // namespace

Graph random_tree_with_leaves(std::size_t n, std::size_t min_leaves, Rng& rng) {
  if (n < 2) throw std::invalid_argument("random_tree_with_leaves: n must be at least 2");
  if (min_leaves > (n == 2 ? 2 : n - 1))
    throw std::invalid_argument("random_tree_with_leaves: no tree on " + std::to_string(n) +
                                " vertices has " + std::to_string(min_leaves) + " leaves");
  constexpr std::size_t max_draws = 100000;
  for (std::size_t draw = 0; draw < max_draws; ++draw) {
    Graph t = random_tree(n, rng);
    if (leaf_count(t) >= min_leaves) return t;
  }
  throw std::runtime_error("random_tree_with_leaves: leaf requirement not met after resampling");
}

// floor(mu N) = n - 2 specials omitting one leaf each.
HarnessDefaults ringel_defaults(std::size_t n) {
  const double N = static_cast<double>(2 * n - 1);
  return {(static_cast<double>(n) - 1.5) / N, 1.5 / N};
}

HarnessDefaults gyarfas_defaults(std::size_t) { return {0.2, 0.12}; }

GuestSequence ringel_sequence(std::size_t n, double mu, double nu, Rng& rng) {
  if (n < 3) throw std::invalid_argument("ringel: n must be at least 3");
  GuestSequence seq;
  seq.n = 2 * n - 1;
  seq.mu = mu;
  seq.nu = nu;
  seq.degeneracy = 1;
  const std::size_t k = seq.special_count();
  const std::size_t ell = seq.omitted_per_special();
  if (k > n - 1)
    throw std::invalid_argument("ringel: floor(mu N) = " + std::to_string(k) +
                                " leaves no room for an n-vertex tree in a special guest");
  const Graph tree = random_tree_with_leaves(n, std::max(k, ell), rng);
  for (std::size_t s = 0; s < seq.n; ++s) {
    Graph g = tree;
    const bool special = s + k >= seq.n;
    g.resize(special ? seq.n - k : seq.n);
    seq.guests.push_back(std::move(g));
    seq.special.push_back(special);
  }
  if (seq.total_edges() != static_cast<std::size_t>(pairs(seq.n)))
    throw std::logic_error("ringel: (2n-1)(n-1) != C(2n-1, 2)");
  return seq;
}

GuestSequence gyarfas_sequence(std::size_t n, double mu, double nu, Rng& rng) {
  if (n < 2) throw std::invalid_argument("gyarfas: n must be at least 2");
  GuestSequence seq;
  seq.n = n;
  seq.mu = mu;
  seq.nu = nu;
  seq.degeneracy = 1;
  const std::size_t k = seq.special_count();
  const std::size_t ell = seq.omitted_per_special();
  std::vector<Graph> trees;
  for (std::size_t i = 2; i <= n; ++i) trees.push_back(random_tree(i, rng));

  // Trees are indexed by size - 2, so ascending index is ascending size.
  std::vector<std::size_t> specials;
  for (std::size_t i = 0; i < trees.size() && specials.size() < k; ++i)
    if (trees[i].order() <= n - k && leaf_count(trees[i]) >= k && independent_leaves(trees[i]) >= ell)
      specials.push_back(i);
  if (specials.size() < k)
    throw std::invalid_argument("gyarfas: only " + std::to_string(specials.size()) +
                                " trees qualify as special, floor(mu n) = " + std::to_string(k));
  std::vector<bool> is_special(trees.size(), false);
  for (std::size_t i : specials) is_special[i] = true;
  for (std::size_t i = trees.size(); i-- > 0;)
    if (!is_special[i]) {
      Graph g = trees[i];
      g.resize(n);
      seq.guests.push_back(std::move(g));
      seq.special.push_back(false);
    }
  for (auto it = specials.rbegin(); it != specials.rend(); ++it) {
    Graph g = trees[*it];
    g.resize(n - k);
    seq.guests.push_back(std::move(g));
    seq.special.push_back(true);
  }
  if (seq.total_edges() != static_cast<std::size_t>(pairs(n)))
    throw std::logic_error("gyarfas: sum of e(T_i) != C(n, 2)");
  return seq;
}

Rng harness_rng(std::uint64_t seed) { return Rng::derive(seed, std::uint64_t{1} << 40); }

Result<PipelineOutcome, PipelineFailure> harness_ringel(std::size_t n, const RunConfig& config) {
  const auto defaults = ringel_defaults(n);
  Rng rng = harness_rng(config.seed);
  const auto seq = ringel_sequence(n, config.mu.value_or(defaults.mu), config.nu.value_or(defaults.nu), rng);
  return perfect_packing(seq, Graph::complete(seq.n), config);
}

Result<PipelineOutcome, PipelineFailure> harness_gyarfas(std::size_t n, const RunConfig& config) {
  const auto defaults = gyarfas_defaults(n);
  Rng rng = harness_rng(config.seed);
  const auto seq = gyarfas_sequence(n, config.mu.value_or(defaults.mu), config.nu.value_or(defaults.nu), rng);
  return perfect_packing(seq, Graph::complete(n), config);
}

}  // namespace gpack
