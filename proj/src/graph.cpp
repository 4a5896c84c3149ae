#include "gpack/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gpack {

std::size_t Graph::check(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= adjacency_.size())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph on " +
                            std::to_string(adjacency_.size()) + " vertices");
  return static_cast<std::size_t>(v);
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || static_cast<std::size_t>(std::max(u, v)) >= n)
      throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                  " out of range for graph on " + std::to_string(n) + " vertices");
    if (g.has_edge(u, v))
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    g.add_edge(u, v);
  }
  return g;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto& row = g.adjacency_[v];
    row.reserve(n - 1);
    for (std::size_t u = 0; u < n; ++u)
      if (u != v) row.push_back(static_cast<Vertex>(u));
  }
  g.edge_count_ = static_cast<std::size_t>(pairs(n));
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& a = adjacency_[check(u)];
  check(v);
  return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  auto& a = adjacency_[check(u)];
  auto& b = adjacency_[check(v)];
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it != a.end() && *it == v)
    throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  a.insert(it, v);
  b.insert(std::lower_bound(b.begin(), b.end(), u), u);
  ++edge_count_;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  auto& a = adjacency_[check(u)];
  auto& b = adjacency_[check(v)];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it == a.end() || *it != v) return false;
  a.erase(it);
  b.erase(std::lower_bound(b.begin(), b.end(), u));
  --edge_count_;
  return true;
}

void Graph::resize(std::size_t n) {
  if (n < adjacency_.size()) throw std::invalid_argument("Graph::resize cannot drop vertices");
  adjacency_.resize(n);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t v = 0; v < adjacency_.size(); ++v)
    for (Vertex u : adjacency_[v])
      if (static_cast<std::size_t>(u) > v) out.emplace_back(static_cast<Vertex>(v), u);
  return out;
}

Density Graph::density() const {
  const auto total = pairs(order());
  if (total == 0) return Density(0);
  return Density(static_cast<std::int64_t>(edge_count_), total);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& a : adjacency_) best = std::max(best, a.size());
  return best;
}

std::size_t Graph::isolated_count() const {
  return static_cast<std::size_t>(
      std::count_if(adjacency_.begin(), adjacency_.end(), [](const auto& a) { return a.empty(); }));
}

DegeneracyOrder DegeneracyOrder::from_order(const Graph& g, std::vector<Vertex> order) {
  const std::size_t n = g.order();
  if (order.size() != n) throw std::invalid_argument("order is not a permutation of V(G)");
  DegeneracyOrder out;
  out.position.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || out.position[v] != n)
      throw std::invalid_argument("order is not a permutation of V(G)");
    out.position[v] = i;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t left = 0;
    for (Vertex u : g.neighbours(order[i]))
      if (out.position[u] < i) ++left;
    out.max_left_degree = std::max(out.max_left_degree, left);
  }
  out.order = std::move(order);
  return out;
}

DegeneracyOrder degeneracy_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> degree(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = g.degree(static_cast<Vertex>(v));
    queue.emplace(degree[v], static_cast<Vertex>(v));
  }
  std::vector<bool> removed(n, false);
  std::vector<Vertex> removal;
  removal.reserve(n);
  std::size_t worst = 0;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    worst = std::max(worst, d);
    removed[v] = true;
    removal.push_back(v);
    for (Vertex u : g.neighbours(v)) {
      if (removed[u]) continue;
      queue.erase({degree[u], u});
      --degree[u];
      queue.emplace(degree[u], u);
    }
  }
  std::reverse(removal.begin(), removal.end());
  DegeneracyOrder out = DegeneracyOrder::from_order(g, std::move(removal));
  // Left-degree of each vertex equals its degree at removal time.
  out.max_left_degree = worst;
  return out;
}

std::vector<Vertex> left_neighbours(const Graph& g, const DegeneracyOrder& order, Vertex v) {
  std::vector<Vertex> out;
  const std::size_t pos = order.position.at(static_cast<std::size_t>(v));
  for (Vertex u : g.neighbours(v))
    if (order.position[u] < pos) out.push_back(u);
  return out;
}

std::vector<Vertex> common_neighbourhood(const Graph& g, std::span<const Vertex> set) {
  if (set.empty()) {
    std::vector<Vertex> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  // Start from the smallest neighbourhood, filter by the others.
  std::size_t smallest = 0;
  for (std::size_t i = 0; i < set.size(); ++i)
    if (g.degree(set[i]) < g.degree(set[smallest])) smallest = i;
  std::vector<Vertex> out;
  for (Vertex u : g.neighbours(set[smallest])) {
    bool all = true;
    for (std::size_t i = 0; i < set.size() && all; ++i)
      if (i != smallest && !g.has_edge(set[i], u)) all = false;
    if (all) out.push_back(u);
  }
  return out;
}

namespace {

std::size_t component_count(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> seen(n, 0);
  std::vector<Vertex> stack;
  std::size_t count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbours(v))
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
  }
  return count;
}

}  // namespace

bool is_forest(const Graph& g) { return g.edge_count() + component_count(g) == g.order(); }

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() + 1 == g.order() && component_count(g) == 1;
}

Graph read_edge_list(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0)
    throw std::invalid_argument("edge list: expected header \"n m\"");
  Graph g(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(i));
    if (u < 0 || v >= n || u >= v)
      throw std::invalid_argument("edge list: line " + std::to_string(i + 2) +
                                  " must satisfy 0 <= u < v < n");
    if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw std::invalid_argument("edge list: duplicate edge " + std::to_string(u) + " " +
                                  std::to_string(v));
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_edge_list(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

double to_double(const Density& d) {
  return static_cast<double>(d.numerator()) / static_cast<double>(d.denominator());
}

}  // namespace gpack
