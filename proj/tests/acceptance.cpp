// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "support.hpp"

#include "gpack/leafmatch.hpp"
#include "gpack/orient.hpp"
#include "gpack/packer.hpp"
#include "gpack/pipeline.hpp"
#include "gpack/schedule.hpp"
#include "gpack/tree.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

using namespace gpack;
using namespace gtest;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(int id, const char* name, double limit_seconds, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = seconds < limit_seconds;
  const bool pass = v.pass && in_time;
  failures += !pass;
  std::printf("%s %d %s: %s (%.2f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", id, name, v.detail.c_str(),
              seconds, limit_seconds, in_time ? "" : ", over time");
  std::fflush(stdout);
}

template <typename... Args>
std::string format(const char* fmt, Args... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, fmt, args...);
  return buffer;
}

// ---------------------------------------------------------------------------
// 1

Verdict prufer_bijection() {
  std::size_t total = 0, bad = 0;
  for (std::size_t n = 2; n <= 7; ++n) {
    const std::size_t len = n - 2;
    std::size_t count = 1;
    for (std::size_t i = 0; i < len; ++i) count *= n;
    std::set<std::set<Edge>> trees;
    PruferSequence seq(len, 0);
    for (std::size_t code = 0; code < count; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < len; ++i, c /= n) seq[i] = static_cast<Vertex>(c % n);
      const Graph t = prufer_decode(seq, n);
      bad += !is_tree(t) || t.order() != n;
      bad += prufer_encode(t) != seq;
      trees.insert(edge_set(t));
    }
    bad += trees.size() != count;
    total += count;
  }
  return {bad == 0, format("%zu sequences over n = 2..7, %zu mismatches", total, bad)};
}

// ---------------------------------------------------------------------------
// 2

Verdict tree_statistics() {
  const std::size_t n = 1000, samples = 1000;
  const double max_degree = 0.5 * static_cast<double>(n) / std::log(static_cast<double>(n));
  const std::size_t min_leaves = n / 100;
  std::size_t violations = 0, fewest = n, largest = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng = Rng::derive(2, i);
    const auto s = tree_stats(random_tree(n, rng));
    fewest = std::min(fewest, s.leaf_count);
    largest = std::max(largest, s.max_degree);
    violations += s.leaf_count < min_leaves || static_cast<double>(s.max_degree) > max_degree;
  }
  return {violations == 0, format("%zu violations; fewest leaves %zu (need %zu), largest degree %zu (cap %.1f)",
                                  violations, fewest, min_leaves, largest, max_degree)};
}

// ---------------------------------------------------------------------------
// 3

std::vector<int> admissible_weights(const Graph& h, Rng& rng) {
  const std::size_t n = h.order();
  std::vector<int> lo(n), hi(n), w(n);
  long total = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const double half = static_cast<double>(h.degree(static_cast<Vertex>(v))) / 2;
    lo[v] = static_cast<int>(std::ceil(0.9 * half));
    hi[v] = static_cast<int>(std::floor(std::min(2 * half, 1.1 * half)));
    const double target = half * (1 + 0.1 * (2 * rng.uniform01() - 1));
    w[v] = std::clamp(static_cast<int>(std::lround(target)), lo[v], hi[v]);
    total += w[v];
  }
  const long edges = static_cast<long>(h.edge_count());
  while (total != edges) {
    const std::size_t v = rng.below(n);
    if (total < edges && w[v] < hi[v]) ++w[v], ++total;
    else if (total > edges && w[v] > lo[v]) --w[v], --total;
  }
  return w;
}

Verdict orientation_lemma() {
  std::size_t successes = 0, exact = 0, invariant_faults = 0, checks = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng = Rng::derive(3, s);
    const Graph h = gnp(200, 0.5, rng);
    const auto w = admissible_weights(h, rng);
    SwitchOptions options;
    options.check_invariants = true;
    try {
      const auto h0 = random_orientation(h, rng);
      auto r = orientation_switch(h0, w, options, rng);
      if (!r) continue;
      ++successes;
      checks += r.value().stats.invariant_checks;
      bool match = true;
      for (std::size_t v = 0; v < 200; ++v)
        match = match && static_cast<int>(r.value().graph.out_degree(static_cast<Vertex>(v))) == w[v];
      exact += match;
    } catch (const std::logic_error&) {
      ++invariant_faults;
    }
  }
  return {successes >= 95 && exact == successes && invariant_faults == 0,
          format("%zu/100 succeeded (need 95), %zu with deg+ = w, %zu invariant faults, %zu invariant checks",
                 successes, exact, invariant_faults, checks)};
}

// ---------------------------------------------------------------------------
// 4

struct Fixture {
  std::size_t m = 0;
  std::vector<int> offsets;
  BipartiteGraph graph;
  std::vector<std::vector<int>> matchings;
};

// Circulant x ~ x + o (mod m); regular on both sides.
BipartiteGraph circulant(std::size_t m, const std::vector<int>& offsets) {
  BipartiteGraph g(m, m);
  for (std::size_t x = 0; x < m; ++x)
    for (int o : offsets) g.add_edge(static_cast<int>(x), static_cast<int>((x + static_cast<std::size_t>(o)) % m));
  return g;
}

std::vector<Fixture> sampler_fixtures(std::size_t wanted, std::size_t max_matchings) {
  std::vector<Fixture> out;
  for (std::size_t m = 2; m <= 8 && out.size() < wanted; ++m)
    for (std::size_t mask = 1; mask < (1u << (m - 1)) && out.size() < wanted; ++mask) {
      std::vector<int> offsets{0};
      for (std::size_t b = 0; b + 1 < m; ++b)
        if (mask >> b & 1) offsets.push_back(static_cast<int>(b + 1));
      if (offsets.size() > 4) continue;
      Fixture f{m, offsets, circulant(m, offsets), {}};
      const std::size_t count = brute_perfect_matchings(f.graph.adjacency, m, &f.matchings);
      if (count < 2 || count > max_matchings) continue;
      const double mu = static_cast<double>(offsets.size()) / static_cast<double>(m);
      const auto pre = check_matching_preconditions(f.graph, f.graph, static_cast<double>(m), 0.25, mu);
      if (!pre.holds()) continue;
      out.push_back(std::move(f));
    }
  return out;
}

double total_variation(const Fixture& f, SamplerMode mode, std::size_t samples, Rng& rng, std::size_t& strays) {
  std::map<std::vector<int>, std::size_t> freq;
  SamplerOptions options;
  options.mode = mode;
  for (std::size_t i = 0; i < samples; ++i) {
    auto r = sample_perfect_matching(f.graph, options, rng);
    if (!r) {
      ++strays;
      continue;
    }
    ++freq[r.value().mate];
  }
  const double uniform = 1.0 / static_cast<double>(f.matchings.size());
  double tv = 0;
  for (const auto& mate : f.matchings) {
    const auto it = freq.find(mate);
    const double p = it == freq.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(samples);
    tv += std::abs(p - uniform);
    if (it != freq.end()) freq.erase(it);
  }
  for (const auto& [mate, c] : freq) {
    strays += c;
    tv += static_cast<double>(c) / static_cast<double>(samples);
  }
  return tv / 2;
}

Verdict matching_sampler() {
  constexpr double exact_tolerance = 0.02, mcmc_tolerance = 0.05;
  constexpr std::size_t exact_samples = 100000, mcmc_samples = 10000;
  const auto fixtures = sampler_fixtures(20, 30);
  if (fixtures.size() < 20) return {false, format("only %zu fixtures", fixtures.size())};
  double worst_exact = 0, worst_mcmc = 0;
  std::size_t strays = 0;
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    Rng rng = Rng::derive(4, i);
    worst_exact = std::max(worst_exact, total_variation(fixtures[i], SamplerMode::exact, exact_samples, rng, strays));
    worst_mcmc = std::max(worst_mcmc, total_variation(fixtures[i], SamplerMode::mcmc, mcmc_samples, rng, strays));
  }
  return {worst_exact <= exact_tolerance && worst_mcmc <= mcmc_tolerance && strays == 0,
          format("20 circulant fixtures, worst TV exact %.4f (<= %.2f over %zu), mcmc %.4f (<= %.2f over %zu), "
                 "%zu strays",
                 worst_exact, exact_tolerance, exact_samples, worst_mcmc, mcmc_tolerance, mcmc_samples, strays)};
}

// ---------------------------------------------------------------------------
// 5

LeafMatchingGraph leaf_graph(Vertex r, std::vector<LeafRef> left, std::vector<Vertex> right,
                             std::vector<std::pair<int, int>> edges) {
  LeafMatchingGraph f;
  f.r = r;
  f.graph = BipartiteGraph(left.size(), right.size());
  for (auto [x, u] : edges) f.graph.add_edge(x, u);
  f.left = std::move(left);
  f.right = std::move(right);
  return f;
}

bool hand_trace() {
  // F_0 forces g0 -> 2, g1 -> 3; B_1 then strips those edges from the
  // complete F_1, forcing g0 -> 3, g1 -> 2.
  std::vector<LeafMatchingGraph> graphs{
      leaf_graph(0, {{0, 5}, {1, 6}}, {2, 3}, {{0, 0}, {1, 1}}),
      leaf_graph(1, {{0, 7}, {1, 8}}, {2, 3}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})};
  SamplerOptions exact;
  exact.mode = SamplerMode::exact;
  Rng rng(123);
  const auto m = match_leaves(graphs, exact, rng);
  if (!m || m.value().steps.size() != 2) return false;
  const auto& steps = m.value().steps;
  const std::vector<RemovedEdge> removed{{1, {0, 7}, 2}, {1, {1, 8}, 3}};
  return steps[0].images == std::vector<Vertex>{2, 3} && steps[0].removed == removed &&
         steps[1].images == std::vector<Vertex>{3, 2} && steps[1].removed.empty();
}

GuestSequence micro_instance(std::uint64_t seed) {
  Rng rng = harness_rng(seed);
  if (seed % 2) {
    const std::size_t n = 3 + seed / 2 % 3;
    const auto d = ringel_defaults(n);
    return ringel_sequence(n, d.mu, d.nu, rng);
  }
  return gyarfas_sequence(6 + seed / 2 % 4, 0.25, 0.25, rng);
}

// Orientation and leaf matching with the pipeline's retry budget; on success
// counts coupling violations into violations.
bool leaf_stage(const GuestSequence& seq, const AlmostPerfect& ap, const RunConfig& config, Rng& rng,
                std::size_t& violations) {
  const std::size_t n = seq.n;
  const auto weights = compute_weights(ap.prepared, ap.embeddings);
  const auto r = resolve_parameters(config, n, 1, seq.mu, seq.nu);
  const SwitchOptions switching{r.flip_cap, true, r.long_paths};
  for (std::size_t o = 0; o < 10; ++o) {
    auto switched = orientation_switch(random_orientation(ap.leftover, rng), weights.host, switching, rng);
    if (!switched) continue;
    const auto graphs = build_leaf_graphs(ap.prepared, switched.value().graph, ap.embeddings);
    for (std::size_t retry = 0; retry < 10; ++retry) {
      auto trial = graphs;
      auto m = match_leaves(trial, {}, rng);
      if (!m) continue;
      std::vector<std::set<Vertex>> leaf_hosts(ap.prepared.guests.size());
      std::set<Edge> used;
      for (const auto& step : m.value().steps)
        for (std::size_t i = 0; i < trial[step.r].left.size(); ++i) {
          const LeafRef x = trial[step.r].left[i];
          const Vertex u = step.images[i];
          const auto own = guest_image(ap.prepared.guests[x.guest], ap.embeddings[x.guest], n);
          violations += own.test(static_cast<std::size_t>(u));
          violations += !leaf_hosts[x.guest].insert(u).second;
          const Vertex root = static_cast<Vertex>(step.r);
          violations += !ap.leftover.has_edge(root, u);
          violations += !used.insert(ordered(root, u)).second;
        }
      violations += used.size() != ap.leftover.edge_count();
      return true;
    }
  }
  return false;
}

Verdict leaf_coupling() {
  const bool trace = hand_trace();
  std::size_t instances = 0, packed = 0, matched = 0, violations = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    GuestSequence seq;
    try {
      seq = micro_instance(seed);
    } catch (const std::invalid_argument&) {
      continue;
    }
    ++instances;
    RunConfig config;
    config.seed = seed;
    Rng rng = Rng::derive(5, seed);
    bool was_packed = false;
    for (std::size_t attempt = 0; attempt < 50; ++attempt) {
      const auto ap = almost_perfect_packing(seq, Graph::complete(seq.n), config, attempt);
      if (!ap) continue;
      was_packed = true;
      if (leaf_stage(seq, *ap, config, rng, violations)) {
        ++matched;
        break;
      }
    }
    packed += was_packed;
  }
  return {trace && matched > 0 && violations == 0,
          format("hand trace %s; %zu instances, %zu packed, %zu matched, %zu violations",
                 trace ? "matches" : "differs", instances, packed, matched, violations)};
}

// ---------------------------------------------------------------------------
// 6

Verdict edge_conservation() {
  std::size_t runs = 0, steps = 0, violations = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const std::size_t n = 8 + seed * 7 % 33;
    Rng rng = Rng::derive(6, seed);
    Graph host;
    GuestSequence seq;
    if (seed % 2 == 0) {
      Rng hr = harness_rng(seed);
      seq = gyarfas_sequence(n, 0.2, 0.12, hr);
      host = Graph::complete(n);
    } else {
      // Packing mode: random trees into a random host, half its edges.
      host = gnp(n, 0.7, rng);
      seq.n = n;
      std::size_t edges = 0;
      while (true) {
        Graph t = random_tree(2 + rng.below(n / 2), rng);
        if (edges + t.edge_count() > host.edge_count() / 2) break;
        edges += t.edge_count();
        t.resize(n);
        seq.guests.push_back(std::move(t));
        seq.special.push_back(false);
      }
    }
    const auto r = resolve_parameters(RunConfig{}, n, 1, seq.mu, seq.nu);
    PrepOptions prep;
    prep.min_tail = r.reserved;
    prep.prefer_isolated_tail = r.prefer_isolated_tail;
    const auto prepared = build_subgraph_sequence(seq, seq.omitted_per_special(), prep, rng);
    PackingParams params;
    params.gamma = r.gamma;
    params.delta = r.delta;
    params.min_reservoir_candidates = r.min_reservoir_candidates;
    std::set<Edge> used;
    const auto host_edges = edge_set(host);
    ++runs;
    auto result = packing_process(prepared, host, params, rng,
                                  [&](const GuestStep& step, const Graph& main, const Graph& reservoir) {
                                    ++steps;
                                    for (const auto& list : {step.from_main, step.from_reservoir})
                                      for (auto [u, v] : list) violations += !used.insert(ordered(u, v)).second;
                                    std::set<Edge> all = used;
                                    std::size_t parts = used.size();
                                    for (const Graph* g : {&main, &reservoir})
                                      for (auto [u, v] : g->edges()) {
                                        all.insert(ordered(u, v));
                                        ++parts;
                                      }
                                    violations += all.size() != parts || all != host_edges;
                                  });
    if (result) {
      std::set<Edge> mapped;
      for (std::size_t s = 0; s < prepared.guests.size(); ++s)
        for (auto [u, v] : prepared.guests[s].graph.edges())
          mapped.insert(ordered(result.value().embeddings[s].image[u], result.value().embeddings[s].image[v]));
      violations += mapped != used;
    }
  }
  return {violations == 0 && steps > 0,
          format("%zu runs, n = 8..40, %zu guest steps checked, %zu violations", runs, steps, violations)};
}

// ---------------------------------------------------------------------------
// 7

std::vector<Vertex> random_map(std::size_t k, std::size_t n, bool injective, Rng& rng) {
  std::vector<Vertex> hosts(n);
  std::iota(hosts.begin(), hosts.end(), 0);
  rng.shuffle(hosts);
  std::vector<Vertex> map(k);
  for (std::size_t i = 0; i < k; ++i) map[i] = injective ? hosts[i] : static_cast<Vertex>(rng.below(n));
  return map;
}

// Existence of a packing by trying every combination of injective maps.
bool exhaustive_packable(const Graph& host, const std::vector<Graph>& guests) {
  std::vector<std::vector<std::vector<Vertex>>> options(guests.size());
  for (std::size_t s = 0; s < guests.size(); ++s) {
    std::vector<Vertex> perm(host.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::vector<Vertex>> maps;
    do maps.insert(std::vector<Vertex>(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(guests[s].order())));
    while (std::next_permutation(perm.begin(), perm.end()));
    options[s].assign(maps.begin(), maps.end());
  }
  std::vector<std::vector<Vertex>> chosen(guests.size());
  std::function<bool(std::size_t)> go = [&](std::size_t s) {
    if (s == guests.size()) return naive_packing_check(host, guests, chosen).valid;
    for (const auto& m : options[s]) {
      chosen[s] = m;
      if (go(s + 1)) return true;
    }
    return false;
  };
  return go(0);
}

Verdict soundness() {
  std::size_t certificates = 0, cert_bad = 0;
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      RunConfig config;
      config.seed = seed;
      for (int kind = 0; kind < 2; ++kind) {
        Result<PipelineOutcome, PipelineFailure> r = PipelineFailure{};
        try {
          r = kind == 0 ? harness_ringel(n, config) : harness_gyarfas(n + 3, config);
        } catch (const std::invalid_argument&) {
          continue;
        }
        if (!r || !r.value().certificate.perfect) continue;
        ++certificates;
        const auto back = certificate_from_json(to_json(r.value().certificate));
        const auto report = verify_certificate(back);
        cert_bad += !report.valid || !report.perfect || !naive_packing_check(back.host, back.guests, back.maps).perfect;
      }
    }

  std::size_t cases = 0, disagreements = 0, searches = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng = Rng::derive(7, seed);
    const std::size_t n = 2 + rng.below(4);
    const Graph host = gnp(n, 0.4 + 0.6 * rng.uniform01(), rng);
    std::vector<Graph> guests(1 + rng.below(3));
    for (auto& g : guests) g = gnp(1 + rng.below(n), 0.6, rng);
    std::vector<VertexMap> maps;
    const int mode = static_cast<int>(rng.below(3));
    const auto search = brute_force_pack(guests, host);
    if (mode == 0 && search.status == SearchStatus::sat) {
      maps = search.maps;
    } else {
      for (const auto& g : guests) maps.push_back(random_map(g.order(), n, mode != 2, rng));
    }
    ++cases;
    const auto report = validate_packing(host, guests, maps);
    const auto naive = naive_packing_check(host, guests, maps);
    disagreements += report.valid != naive.valid || report.perfect != naive.perfect;
    if (search.status == SearchStatus::timeout) {
      ++disagreements;
      continue;
    }
    ++searches;
    const bool sat = search.status == SearchStatus::sat;
    disagreements += sat != exhaustive_packable(host, guests);
    if (sat) disagreements += !naive_packing_check(host, guests, search.maps).valid;
  }
  return {certificates > 0 && cert_bad == 0 && disagreements == 0,
          format("%zu perfect certificates re-validated (%zu bad); %zu fuzz cases with host n <= 5, "
                 "%zu searches, %zu disagreements",
                 certificates, cert_bad, cases, searches, disagreements)};
}

// ---------------------------------------------------------------------------
// 8

Verdict desk_harnesses() {
  RunConfig ringel;
  ringel.seed = 94;
  ringel.attempts = 100;
  RunConfig gyarfas;
  gyarfas.seed = 16;
  gyarfas.attempts = 100;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = harness_ringel(6, ringel);
  const auto t1 = std::chrono::steady_clock::now();
  const auto g = harness_gyarfas(9, gyarfas);
  const auto t2 = std::chrono::steady_clock::now();
  const double tr = std::chrono::duration<double>(t1 - t0).count();
  const double tg = std::chrono::duration<double>(t2 - t1).count();
  auto ok = [](const auto& res) {
    return res && res.value().certificate.perfect && verify_certificate(res.value().certificate).perfect;
  };
  return {ok(r) && ok(g) && tr < 60 && tg < 60,
          format("ringel n = 6 seed 94 %s at attempt %zu (%.2f s); gyarfas n = 9 seed 16 %s at attempt %zu (%.2f s)",
                 ok(r) ? "perfect" : "failed", r ? r.value().certificate.attempt : 0, tr,
                 ok(g) ? "perfect" : "failed", g ? g.value().certificate.attempt : 0, tg)};
}

// ---------------------------------------------------------------------------
// 9

Verdict schedule_identities() {
  constexpr long double tolerance = 1e-12L;
  const std::size_t Ds[] = {1, 2, 3, 4, 5};
  const long double gammas[] = {0.05L, 0.2L, 0.5L, 0.9L};
  const std::size_t ns[] = {10, 100, 1000, 10000};
  std::size_t points = 0, bad = 0;
  long double worst = 0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const std::size_t D = Ds[i], n = ns[(i + j) % 4];
      const long double g = gammas[j];
      const auto s = constant_schedule(D, g, n);
      ++points;
      const long double eta = static_cast<long double>(D) * std::log(g) - std::log(200.0L * static_cast<long double>(D));
      const long double err = std::abs(s.eta.log() - eta) / std::max(1.0L, std::abs(eta));
      worst = std::max(worst, err);
      bad += err > tolerance;
      for (const LogValue& a : {s.alpha(0), s.alpha(static_cast<long double>(n)), LogValue::from_value(0.3L)}) {
        const LogValue b = s.beta(a, 0);
        bad += b < a || a < b;
      }
      const long double nn = static_cast<long double>(n);
      LogValue previous = s.alpha(0);
      for (int step = 1; step <= 8; ++step) {
        const LogValue next = s.alpha(nn * step / 4);
        bad += next < previous;
        previous = next;
      }
      bad += !(s.alpha(0) < s.alpha(2 * nn));
    }
  return {points == 20 && bad == 0,
          format("%zu grid points, worst relative error in log eta %.2Le (<= %.0Le), %zu failed identities", points,
                 worst, tolerance, bad)};
}

// ---------------------------------------------------------------------------
// 10

std::string diagnostics_dump() {
  Rng hr = harness_rng(1);
  const auto seq = gyarfas_sequence(200, 0.2, 0.12, hr);
  RunConfig config;
  config.seed = 1;
  const auto ap = almost_perfect_packing(seq, Graph::complete(200), config, 5);
  if (!ap) return {};
  DiagnosticsOptions options;
  options.quasirandom_level = 2;
  const auto d = leftover_diagnostics(diagnostics_input(ap->leftover, ap->prepared, ap->embeddings), 0.5, options);
  return to_json(d).dump();
}

Verdict diagnostics_determinism() {
  const std::string a = diagnostics_dump();
  const std::string b = diagnostics_dump();
  const bool same = !a.empty() && a == b;
  return {same, format("gyarfas n = 200 seed 1 attempt 5: %zu-byte dumps %s", a.size(),
                       a.empty() ? "missing" : same ? "identical" : "differ")};
}

}  // namespace

int main() {
  run(1, "prufer bijection", 5, prufer_bijection);
  run(2, "random tree statistics", 30, tree_statistics);
  run(3, "orientation switch", 60, orientation_lemma);
  run(4, "matching sampler", 120, matching_sampler);
  run(5, "leaf matching coupling", 60, leaf_coupling);
  run(6, "edge conservation", 60, edge_conservation);
  run(7, "end-to-end soundness", 120, soundness);
  run(8, "desk ringel and gyarfas", 120, desk_harnesses);
  run(9, "constant schedule", 1, schedule_identities);
  run(10, "diagnostics determinism", 60, diagnostics_determinism);
  return failures == 0 ? 0 : 1;
}
