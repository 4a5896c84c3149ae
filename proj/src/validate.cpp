#include "gpack/validate.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace gpack {

std::string to_string(PackingCheck check) {
  switch (check) {
    case PackingCheck::none: return "none";
    case PackingCheck::injectivity: return "injectivity";
    case PackingCheck::edge_map: return "edge_map";
    case PackingCheck::shared_edge: return "shared_edge";
  }
  return "unknown";
}

ValidationReport validate_packing(const Graph& hhat, std::span<const Graph> guests,
                                  std::span<const VertexMap> maps) {
  ValidationReport report;
  const std::size_t n = hhat.order();
  auto fail = [&](PackingCheck check, std::size_t s, Edge witness, std::string message) {
    report.failed = check;
    report.guest = s;
    report.witness = witness;
    report.message = std::move(message);
    return report;
  };
  if (guests.size() != maps.size())
    return fail(PackingCheck::injectivity, std::min(guests.size(), maps.size()), {-1, -1},
                "expected one map per guest");

  // (a)
  for (std::size_t s = 0; s < guests.size(); ++s) {
    const auto& map = maps[s];
    if (map.size() != guests[s].order())
      return fail(PackingCheck::injectivity, s, {-1, -1},
                  "guest " + std::to_string(s) + ": map has " + std::to_string(map.size()) +
                      " entries for " + std::to_string(guests[s].order()) + " vertices");
    std::vector<Vertex> owner(n, -1);
    for (std::size_t x = 0; x < map.size(); ++x) {
      const Vertex v = map[x];
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        return fail(PackingCheck::injectivity, s, {static_cast<Vertex>(x), -1},
                    "guest " + std::to_string(s) + ": vertex " + std::to_string(x) +
                        " maps outside the host");
      if (owner[v] >= 0)
        return fail(PackingCheck::injectivity, s, {owner[v], static_cast<Vertex>(x)},
                    "guest " + std::to_string(s) + ": vertices " + std::to_string(owner[v]) +
                        " and " + std::to_string(x) + " share host vertex " + std::to_string(v));
      owner[v] = static_cast<Vertex>(x);
    }
  }
  // (b)
  for (std::size_t s = 0; s < guests.size(); ++s)
    for (auto [x, y] : guests[s].edges()) {
      const Vertex a = maps[s][x];
      const Vertex b = maps[s][y];
      if (!hhat.has_edge(a, b))
        return fail(PackingCheck::edge_map, s, {std::min(a, b), std::max(a, b)},
                    "guest " + std::to_string(s) + ": edge " + std::to_string(x) + "-" +
                        std::to_string(y) + " maps to the non-edge " + std::to_string(a) + "-" +
                        std::to_string(b));
    }
  // (c)
  std::map<Edge, std::size_t> user;
  for (std::size_t s = 0; s < guests.size(); ++s)
    for (auto [x, y] : guests[s].edges()) {
      const Vertex a = maps[s][x];
      const Vertex b = maps[s][y];
      const Edge e{std::min(a, b), std::max(a, b)};
      auto [it, fresh] = user.emplace(e, s);
      if (!fresh) {
        report.other_guest = it->second;
        return fail(PackingCheck::shared_edge, s, e,
                    "host edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                        " used by guests " + std::to_string(it->second) + " and " +
                        std::to_string(s));
      }
    }
  report.valid = true;
  report.used_edges = user.size();
  report.perfect = report.used_edges == hhat.edge_count();
  return report;
}

namespace {

struct Search {
  const std::vector<const Graph*>& guests;
  const Graph& host;
  std::size_t limit;
  std::size_t nodes = 0;
  bool timed_out = false;
  std::vector<std::vector<bool>> used;  // host edge in use
  std::vector<std::vector<Vertex>> orders;  // non-isolated vertices, BFS order
  std::vector<VertexMap> maps;

  Search(const std::vector<const Graph*>& g, const Graph& h, std::size_t l)
      : guests(g), host(h), limit(l), used(h.order(), std::vector<bool>(h.order(), false)) {
    for (const Graph* guest : guests) {
      std::vector<Vertex> order;
      std::vector<bool> seen(guest->order(), false);
      std::vector<Vertex> roots;
      for (std::size_t v = 0; v < guest->order(); ++v)
        if (guest->degree(static_cast<Vertex>(v)) > 0) roots.push_back(static_cast<Vertex>(v));
      std::stable_sort(roots.begin(), roots.end(),
                       [&](Vertex a, Vertex b) { return guest->degree(a) > guest->degree(b); });
      for (Vertex root : roots) {
        if (seen[root]) continue;
        std::queue<Vertex> queue;
        queue.push(root);
        seen[root] = true;
        while (!queue.empty()) {
          const Vertex v = queue.front();
          queue.pop();
          order.push_back(v);
          for (Vertex u : guest->neighbours(v))
            if (!seen[u]) {
              seen[u] = true;
              queue.push(u);
            }
        }
      }
      orders.push_back(std::move(order));
      maps.emplace_back(guest->order(), -1);
    }
  }

  bool place_isolated(std::size_t s) {
    std::vector<bool> taken(host.order(), false);
    for (Vertex v : maps[s])
      if (v >= 0) taken[v] = true;
    std::size_t next = 0;
    for (std::size_t x = 0; x < maps[s].size(); ++x) {
      if (maps[s][x] >= 0) continue;
      while (next < host.order() && taken[next]) ++next;
      if (next == host.order()) return false;
      maps[s][x] = static_cast<Vertex>(next);
      taken[next] = true;
    }
    return true;
  }

  void clear_isolated(std::size_t s) {
    const Graph& g = *guests[s];
    for (std::size_t x = 0; x < maps[s].size(); ++x)
      if (g.degree(static_cast<Vertex>(x)) == 0) maps[s][x] = -1;
  }

  bool run(std::size_t s, std::size_t i) {
    if (s == guests.size()) return true;
    const auto& order = orders[s];
    if (i == order.size()) {
      if (!place_isolated(s)) return false;
      if (run(s + 1, 0)) return true;
      clear_isolated(s);
      return false;
    }
    const Graph& g = *guests[s];
    const Vertex x = order[i];
    std::vector<bool> taken(host.order(), false);
    for (std::size_t k = 0; k < i; ++k) taken[maps[s][order[k]]] = true;
    for (std::size_t v = 0; v < host.order(); ++v) {
      if (taken[v]) continue;
      if (++nodes > limit) {
        timed_out = true;
        return false;
      }
      bool fits = true;
      std::vector<Vertex> anchors;
      for (Vertex y : g.neighbours(x)) {
        const Vertex a = maps[s][y];
        if (a < 0) continue;
        if (!host.has_edge(a, static_cast<Vertex>(v)) || used[a][v]) {
          fits = false;
          break;
        }
        anchors.push_back(a);
      }
      if (!fits) continue;
      maps[s][x] = static_cast<Vertex>(v);
      for (Vertex a : anchors) used[a][v] = used[v][a] = true;
      if (run(s, i + 1)) return true;
      for (Vertex a : anchors) used[a][v] = used[v][a] = false;
      maps[s][x] = -1;
      if (timed_out) return false;
    }
    return false;
  }
};

}  // namespace

BruteForceResult brute_force_pack(std::span<const Graph> guests, const Graph& host,
                                  std::size_t node_limit) {
  BruteForceResult result;
  std::size_t total = 0;
  for (const auto& g : guests) {
    if (g.order() > host.order()) return result;  // cannot embed injectively
    total += g.edge_count();
  }
  if (total > host.edge_count()) return result;
  std::vector<const Graph*> pointers;
  for (const auto& g : guests) pointers.push_back(&g);
  Search search(pointers, host, node_limit);
  const bool found = search.run(0, 0);
  result.nodes = search.nodes;
  if (found) {
    result.status = SearchStatus::sat;
    result.maps = std::move(search.maps);
  } else {
    result.status = search.timed_out ? SearchStatus::timeout : SearchStatus::unsat;
  }
  return result;
}

}  // namespace gpack
