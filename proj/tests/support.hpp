#pragma once

// Test-side oracles written from the definitions, independent of the library
// code they check.

#include "gpack/graph.hpp"
#include "gpack/random.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace gtest {

using gpack::Edge;
using gpack::Graph;
using gpack::Rng;
using gpack::Vertex;

inline Graph graph_of(std::size_t n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    Vertex a = static_cast<Vertex>(i), b = static_cast<Vertex>((i + 1) % n);
    e.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph::from_edges(n, e);
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, static_cast<Vertex>(i));
  return Graph::from_edges(leaves + 1, e);
}

inline Graph gnp(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph::from_edges(n, e);
}

inline std::set<Edge> edge_set(const Graph& g) {
  std::set<Edge> s;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbours(static_cast<Vertex>(u)))
      if (static_cast<Vertex>(u) < v) s.emplace(static_cast<Vertex>(u), v);
  return s;
}

inline Edge ordered(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

/// Max left degree of an order, by direct adjacency lookups.
inline std::size_t left_degree_of(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<std::size_t> pos(g.order());
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = i;
  std::size_t worst = 0;
  for (std::size_t v = 0; v < g.order(); ++v) {
    std::size_t left = 0;
    for (std::size_t u = 0; u < g.order(); ++u)
      if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)) && pos[u] < pos[v]) ++left;
    worst = std::max(worst, left);
  }
  return worst;
}

/// Degeneracy as the minimum over all n! orders.
inline std::size_t brute_degeneracy(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::size_t best = g.order();
  do best = std::min(best, left_degree_of(g, order));
  while (std::next_permutation(order.begin(), order.end()));
  return best;
}

struct NaiveVerdict {
  bool valid = false;
  bool perfect = false;
};

/// Packing check from the definition: maps total and injective into V(host),
/// guest edges onto host edges, no host edge claimed twice.
inline NaiveVerdict naive_packing_check(const Graph& host, const std::vector<Graph>& guests,
                                        const std::vector<std::vector<Vertex>>& maps) {
  NaiveVerdict out;
  if (maps.size() != guests.size()) return out;
  std::set<Edge> used;
  std::size_t claimed = 0;
  for (std::size_t s = 0; s < guests.size(); ++s) {
    const auto& map = maps[s];
    if (map.size() != guests[s].order()) return out;
    std::set<Vertex> seen;
    for (Vertex v : map) {
      if (v < 0 || static_cast<std::size_t>(v) >= host.order()) return out;
      if (!seen.insert(v).second) return out;
    }
    for (const Edge& e : edge_set(guests[s])) {
      const Edge h = ordered(map[static_cast<std::size_t>(e.first)], map[static_cast<std::size_t>(e.second)]);
      if (!edge_set(host).count(h)) return out;
      if (!used.insert(h).second) return out;
      ++claimed;
    }
  }
  out.valid = true;
  out.perfect = claimed == host.edge_count();
  return out;
}

/// Number of perfect matchings of an m x m biadjacency by trying all m!
/// permutations.
inline std::size_t brute_perfect_matchings(const std::vector<std::vector<int>>& adjacency, std::size_t right,
                                           std::vector<std::vector<int>>* all = nullptr) {
  const std::size_t m = adjacency.size();
  if (m != right) return 0;
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      ok = std::find(adjacency[i].begin(), adjacency[i].end(), perm[i]) != adjacency[i].end();
    if (ok) {
      ++count;
      if (all) all->push_back(perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace gtest
