#pragma once

#include <cstddef>
#include <vector>

namespace gpack {

/// Bipartite graph with left vertices 0..left-1 and right vertices
/// 0..right-1. adjacency[x] lists the right neighbours of x in ascending order.
struct BipartiteGraph {
  std::size_t left = 0;
  std::size_t right = 0;
  std::vector<std::vector<int>> adjacency;

  BipartiteGraph() = default;
  BipartiteGraph(std::size_t l, std::size_t r) : left(l), right(r), adjacency(l) {}

  std::size_t edge_count() const;
  bool has_edge(int x, int u) const;
  void add_edge(int x, int u);
  bool remove_edge(int x, int u);
  std::size_t degree(int x) const { return adjacency[static_cast<std::size_t>(x)].size(); }
  /// Number of left neighbours of right vertex u.
  std::size_t right_degree(int u) const;
  bool operator==(const BipartiteGraph&) const = default;
};

/// Maximum matching by Hopcroft-Karp. Left vertices are scanned in label
/// order and neighbours in adjacency order, so the result is deterministic.
/// Returns mate[x] (the right vertex matched to x, or -1).
std::vector<int> maximum_matching(const BipartiteGraph& g);

inline bool is_perfect(const std::vector<int>& mate, std::size_t right) {
  if (mate.size() != right) return false;
  for (int u : mate)
    if (u < 0) return false;
  return true;
}

}  // namespace gpack
