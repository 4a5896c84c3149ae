#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gpack {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using Density = boost::rational<std::int64_t>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Mutation keeps the invariants (no loops, no parallel edges, symmetric
/// adjacency); shared instances are treated as immutable.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}

  /// Throws std::invalid_argument on loops, duplicates, or out-of-range ends.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph complete(std::size_t n);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t degree(Vertex v) const { return adjacency_[check(v)].size(); }
  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[check(v)]; }

  bool has_edge(Vertex u, Vertex v) const;
  void add_edge(Vertex u, Vertex v);
  /// Returns false when the edge was absent.
  bool remove_edge(Vertex u, Vertex v);

  /// Adds isolated vertices up to n (n >= order()).
  void resize(std::size_t n);

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// edge_count / C(n,2); zero for n < 2.
  Density density() const;

  std::size_t max_degree() const;
  std::size_t isolated_count() const;

  bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  std::size_t check(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Left-to-right vertex order; max_left_degree is the largest number of
/// earlier neighbours of any vertex.
struct DegeneracyOrder {
  std::vector<Vertex> order;
  std::vector<std::size_t> position;
  std::size_t max_left_degree = 0;

  static DegeneracyOrder from_order(const Graph& g, std::vector<Vertex> order);
};

/// Repeatedly removes a minimum-degree vertex (smallest label on ties) and
/// returns the reversed removal sequence. max_left_degree is the degeneracy.
DegeneracyOrder degeneracy_order(const Graph& g);

/// Earlier neighbours of v under the order.
std::vector<Vertex> left_neighbours(const Graph& g, const DegeneracyOrder& order, Vertex v);

/// {u : us in E for all s in S}; V(g) when S is empty. The result is sorted.
std::vector<Vertex> common_neighbourhood(const Graph& g, std::span<const Vertex> set);

bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

/// Edge-list text format: "n m" then m lines "u v" with 0 <= u < v < n.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

/// FNV-1a over the canonical edge-list text.
std::uint64_t graph_hash(const Graph& g);

double to_double(const Density& d);

/// C(n,2).
inline std::int64_t pairs(std::size_t n) {
  return static_cast<std::int64_t>(n) * (static_cast<std::int64_t>(n) - 1) / 2;
}

}  // namespace gpack
