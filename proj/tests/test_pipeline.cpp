#include "doctest.h"
#include "support.hpp"

#include "gpack/pipeline.hpp"
#include "gpack/schedule.hpp"
#include "gpack/tree.hpp"

#include <cmath>

using namespace gpack;
using namespace gtest;

namespace {

RunConfig seeded(std::uint64_t seed, std::size_t attempts = 100) {
  RunConfig c;
  c.seed = seed;
  c.attempts = attempts;
  return c;
}

void check_host_covered_once(const PackingCertificate& cert) {
  std::map<Edge, std::size_t> uses;
  for (std::size_t s = 0; s < cert.guests.size(); ++s)
    for (auto [u, v] : cert.guests[s].edges()) ++uses[ordered(cert.maps[s][u], cert.maps[s][v])];
  CHECK(uses.size() == cert.host.edge_count());
  for (const auto& [e, c] : uses) {
    CHECK(cert.host.has_edge(e.first, e.second));
    CHECK(c == 1);
  }
}

}  // namespace

TEST_CASE("validate_packing: two stars sharing an edge fail at the shared-edge check") {
  const Graph k4 = Graph::complete(4);
  const std::vector<Graph> guests{star(2), star(2)};
  const std::vector<VertexMap> maps{{0, 1, 2}, {0, 1, 3}};
  const auto r = validate_packing(k4, guests, maps);
  CHECK_FALSE(r.valid);
  CHECK(r.failed == PackingCheck::shared_edge);
  CHECK(r.guest == 1);
  CHECK(r.other_guest == 0);
  CHECK(ordered(r.witness.first, r.witness.second) == Edge{0, 1});
  // With naive checks in agreement.
  CHECK_FALSE(naive_packing_check(k4, guests, maps).valid);
}

TEST_CASE("validate_packing: the Walecki decomposition of K5 is perfect") {
  const Graph k5 = Graph::complete(5);
  const std::vector<Graph> guests{cycle(5), cycle(5)};
  const std::vector<VertexMap> maps{{0, 1, 2, 3, 4}, {0, 2, 4, 1, 3}};
  const auto r = validate_packing(k5, guests, maps);
  CHECK(r.valid);
  CHECK(r.perfect);
  CHECK(r.used_edges == 10);
  const std::vector<Graph> one{cycle(5)};
  const std::vector<VertexMap> first{{0, 1, 2, 3, 4}};
  const auto partial = validate_packing(k5, one, first);
  CHECK(partial.valid);
  CHECK_FALSE(partial.perfect);
}

TEST_CASE("validate_packing: non-edges and non-injective maps") {
  const std::vector<Graph> edge{path(2)};
  const std::vector<VertexMap> across{{0, 2}};
  const auto r = validate_packing(path(3), edge, across);
  CHECK(r.failed == PackingCheck::edge_map);
  CHECK(ordered(r.witness.first, r.witness.second) == Edge{0, 2});
  const std::vector<VertexMap> collapse{{1, 1}};
  CHECK(validate_packing(path(3), edge, collapse).failed == PackingCheck::injectivity);
  const std::vector<VertexMap> outside{{0, 7}};
  CHECK(validate_packing(path(3), edge, outside).failed == PackingCheck::injectivity);
  const std::vector<VertexMap> none;
  const auto missing = validate_packing(path(3), edge, none);
  CHECK_FALSE(missing.valid);
  CHECK(missing.failed == PackingCheck::injectivity);
}

TEST_CASE("brute_force_pack on small instances") {
  const Graph k3 = Graph::complete(3);
  const std::vector<Graph> edges{path(2), path(2), path(2)};
  const auto sat = brute_force_pack(edges, k3);
  REQUIRE(sat.status == SearchStatus::sat);
  CHECK(validate_packing(k3, edges, sat.maps).perfect);
  const std::vector<Graph> cherries{path(3), path(3)};
  CHECK(brute_force_pack(cherries, k3).status == SearchStatus::unsat);
  // T_2..T_5 into K5, any trees.
  Rng rng(5);
  std::vector<Graph> trees;
  for (std::size_t i = 2; i <= 5; ++i) trees.push_back(random_tree(i, rng));
  const auto g5 = brute_force_pack(trees, Graph::complete(5));
  REQUIRE(g5.status == SearchStatus::sat);
  CHECK(validate_packing(Graph::complete(5), trees, g5.maps).perfect);
  CHECK(brute_force_pack(trees, Graph::complete(5), 1).status == SearchStatus::timeout);
}

TEST_CASE("run configuration JSON round trip") {
  RunConfig c;
  c.preset = "paper";
  c.seed = 77;
  c.mu = 0.3;
  c.gamma = 0.01;
  c.match_mode = SamplerMode::mcmc;
  c.diagnostics = 2;
  c.compress = "off";
  RunConfig back;
  apply_json(back, to_json(c));
  CHECK(to_json(back) == to_json(c));
  CHECK_THROWS_AS(apply_json(back, nlohmann::json{{"bogus", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(apply_json(back, nlohmann::json{{"preset", "lab"}}), std::invalid_argument);
}

TEST_CASE("desk parameters") {
  RunConfig c;
  const auto r = resolve_parameters(c, 40, 1, 0.2, 0.12);
  CHECK(r.gamma == doctest::Approx(std::min(0.1, 0.2 * 0.12 / 2.1)).epsilon(1e-12));
  CHECK(r.delta == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(r.reserved == 2);
  CHECK(r.flip_cap == doctest::Approx(0.5));
  CHECK(resolve_parameters(c, 10, 1, 0.2, 0.12).delta == doctest::Approx(0.1));
  c.gamma = 0.3;
  CHECK(resolve_parameters(c, 40, 1, 0.2, 0.12).gamma == doctest::Approx(0.3));
}

TEST_CASE("constant schedule at D = 1, gamma = 1/2") {
  const auto s = constant_schedule(1, 0.5L, 100);
  CHECK(static_cast<double>(s.eta.value()) == doctest::Approx(0.0025).epsilon(1e-12));
  // delta = gamma^10 eta / 1e6.
  CHECK(static_cast<double>(s.delta.log()) ==
        doctest::Approx(10 * std::log(0.5) + std::log(0.0025) - std::log(1e6)).epsilon(1e-12));
  const LogValue a = LogValue::from_value(0.125L);
  CHECK(s.beta(a, 0).log() == a.log());
  CHECK(s.beta(a, 1).log() > a.log());
  CHECK_THROWS_AS(constant_schedule(0, 0.5L, 10), std::invalid_argument);
  CHECK_THROWS_AS(constant_schedule(1, 1.0L, 10), std::invalid_argument);
}

TEST_CASE("harness sequences have the right edge count") {
  // The Ringel tree needs n - 2 leaves, so only small n resample quickly.
  for (std::size_t n = 3; n <= 8; ++n) {
    Rng rng = harness_rng(n);
    const auto d = ringel_defaults(n);
    const auto seq = ringel_sequence(n, d.mu, d.nu, rng);
    CHECK(seq.guests.size() == 2 * n - 1);
    CHECK(seq.total_edges() == (2 * n - 1) * (n - 1));
    CHECK(seq.total_edges() == pairs(2 * n - 1));
    CHECK_NOTHROW(seq.validate());
  }
  for (std::size_t n = 8; n <= 20; ++n) {
    Rng rng = harness_rng(n);
    const auto d = gyarfas_defaults(n);
    const auto seq = gyarfas_sequence(n, d.mu, d.nu, rng);
    CHECK(seq.total_edges() == pairs(n));
    CHECK_NOTHROW(seq.validate());
  }
}

TEST_CASE("Ringel n = 3 is packable and the pipeline finds it") {
  Rng rng = harness_rng(1);
  const auto d = ringel_defaults(3);
  const auto seq = ringel_sequence(3, d.mu, d.nu, rng);
  CHECK(brute_force_pack(seq.guests, Graph::complete(5)).status == SearchStatus::sat);
  auto r = harness_ringel(3, seeded(1));
  REQUIRE(r);
  CHECK(r.value().certificate.perfect);
  CHECK(verify_certificate(r.value().certificate).perfect);
}

TEST_CASE("Gyarfas n = 8, seed 6, is perfect and covers each edge once") {
  auto r = harness_gyarfas(8, seeded(6));
  REQUIRE(r);
  const auto& cert = r.value().certificate;
  CHECK(cert.perfect);
  CHECK(cert.attempt == 11);
  check_host_covered_once(cert);
}

TEST_CASE("Gyarfas n = 10, seed 915, is perfect") {
  auto r = harness_gyarfas(10, seeded(915));
  REQUIRE(r);
  CHECK(r.value().certificate.perfect);
  check_host_covered_once(r.value().certificate);
}

TEST_CASE("certificate JSON round trip and tamper detection") {
  auto r = harness_ringel(6, seeded(94));
  REQUIRE(r);
  const auto& cert = r.value().certificate;
  CHECK(cert.perfect);
  const auto j = to_json(cert);
  const auto back = certificate_from_json(j);
  CHECK(to_json(back) == j);
  CHECK(verify_certificate(back).perfect);

  auto hash = j;
  hash["host"]["hash"] = "0000000000000000";
  CHECK_THROWS_AS(certificate_from_json(hash), std::invalid_argument);
  auto schema = j;
  schema["schema"] = "gpack.certificate/0";
  CHECK_THROWS_AS(certificate_from_json(schema), std::invalid_argument);

  auto moved = back;
  std::swap(moved.maps[0][0], moved.maps[1][0]);
  if (moved.maps[0] != back.maps[0]) CHECK_FALSE(verify_certificate(moved).perfect);
  auto collapsed = back;
  collapsed.maps[0][1] = collapsed.maps[0][0];
  CHECK(verify_certificate(collapsed).failed == PackingCheck::injectivity);
}

TEST_CASE("runs are deterministic in the seed and independent of threads") {
  const auto a = harness_ringel(6, seeded(94));
  const auto b = harness_ringel(6, seeded(94));
  REQUIRE(a);
  REQUIRE(b);
  CHECK(to_json(a.value().certificate) == to_json(b.value().certificate));
  RunConfig threaded = seeded(94);
  threaded.threads = 2;
  const auto c = harness_ringel(6, threaded);
  REQUIRE(c);
  CHECK(c.value().certificate.attempt == a.value().certificate.attempt);
  CHECK(c.value().certificate.maps == a.value().certificate.maps);
}

TEST_CASE("perfect_packing with nu = 0 and mu n < 1 runs the packing process alone") {
  GuestSequence seq;
  seq.n = 5;
  seq.degeneracy = 2;
  seq.guests = {cycle(5), cycle(5)};
  seq.special = {false, false};
  auto r = perfect_packing(seq, Graph::complete(5), seeded(3));
  REQUIRE(r);
  const auto& cert = r.value().certificate;
  CHECK(cert.perfect);
  CHECK(cert.special_count == 0);
  CHECK(cert.leftover.edge_count() == 0);
  check_host_covered_once(cert);
}

TEST_CASE("perfect_packing faults on malformed input") {
  GuestSequence seq;
  seq.n = 5;
  seq.guests = {Graph::complete(5), path(2)};
  seq.special = {false, false};
  CHECK_THROWS_AS(perfect_packing(seq, Graph::complete(5), seeded(1)), std::invalid_argument);
  seq.guests = {path(5)};
  seq.special = {false};
  CHECK_THROWS_AS(perfect_packing(seq, Graph::complete(6), seeded(1)), std::invalid_argument);
}

TEST_CASE("leftover diagnostics with nu = 0 report P2 degenerate") {
  DiagnosticsInput in;
  in.n = 6;
  in.mu = 1.0 / 3;
  in.special_count = 2;
  in.omitted_per_special = 0;
  in.leftover = Graph(6);
  const auto d = leftover_diagnostics(in, 0.5);
  REQUIRE(d.properties.size() == 6);
  CHECK(d.properties[1].name == "P2");
  CHECK(d.properties[1].degenerate);
  CHECK_FALSE(d.properties[1].holds);
  CHECK(d.density_matches);
}

TEST_CASE("leftover diagnostics P5 and P6 against a hand recount") {
  // Two specials on six host vertices, one omitted leaf each.
  DiagnosticsInput in;
  in.n = 6;
  in.mu = 1.0 / 3;
  in.special_count = 2;
  in.omitted_per_special = 1;
  in.leftover = graph_of(6, {{1, 5}, {3, 4}});
  in.specials = {{4, {0, 1, 2}, {1}}, {5, {3, 4}, {3}}};
  const double p = 2.0 / 15, expect = in.mu * p * 6 / 2;
  double worst5 = 0;
  for (int v = 0; v < 6; ++v)
    for (int u = 0; u < 6; ++u) {
      if (u == v) continue;
      double sum = 0;
      if (u > 2 && v == 1) sum += 1;
      if ((u < 3 || u == 5) && v == 3) sum += 1;
      worst5 = std::max(worst5, std::abs(sum / expect - 1));
    }
  // P6: the only positive sum is u = 5 outside the first image, whose
  // leftover neighbour 1 carries its weight.
  const double worst6 = 1;
  const auto d = leftover_diagnostics(in, 0.5);
  CHECK(d.p == doctest::Approx(p).epsilon(1e-12));
  CHECK(d.properties[4].worst == doctest::Approx(worst5).epsilon(1e-12));
  CHECK(d.properties[5].worst == doctest::Approx(worst6).epsilon(1e-12));
  CHECK(d.properties[5].bound == doctest::Approx(10 * p * p * 6 / in.mu).epsilon(1e-12));
}
