#include "gpack/tree.hpp"

#include <stdexcept>
#include <string>

namespace gpack {

Graph prufer_decode(const PruferSequence& seq, std::size_t n) {
  if (n < 2) throw std::invalid_argument("prufer_decode: n must be at least 2");
  if (seq.size() != n - 2)
    throw std::invalid_argument("prufer_decode: expected " + std::to_string(n - 2) +
                                " labels, got " + std::to_string(seq.size()));
  std::vector<std::size_t> degree(n, 1);
  for (Vertex a : seq) {
    if (a < 0 || static_cast<std::size_t>(a) >= n)
      throw std::invalid_argument("prufer_decode: label " + std::to_string(a) + " out of range");
    ++degree[a];
  }
  Graph t(n);
  // Linear-time smallest-leaf-first decoding: `ptr` scans upward for the next
  // leaf, while a freshly created leaf below ptr is used immediately.
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (Vertex a : seq) {
    t.add_edge(static_cast<Vertex>(leaf), a);
    --degree[leaf];
    if (--degree[a] == 1 && static_cast<std::size_t>(a) < ptr) {
      leaf = static_cast<std::size_t>(a);
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  // The two remaining degree-1 vertices: `leaf` and n-1.
  t.add_edge(static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1));
  return t;
}

PruferSequence prufer_encode(const Graph& t) {
  const std::size_t n = t.order();
  if (n < 2 || !is_tree(t)) throw std::invalid_argument("prufer_encode: input is not a tree");
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = t.degree(static_cast<Vertex>(v));
  std::vector<bool> removed(n, false);
  PruferSequence seq;
  seq.reserve(n - 2);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  while (seq.size() + 2 < n) {
    Vertex parent = -1;
    for (Vertex u : t.neighbours(static_cast<Vertex>(leaf)))
      if (!removed[u]) parent = u;
    seq.push_back(parent);
    removed[leaf] = true;
    degree[leaf] = 0;
    if (--degree[parent] == 1 && static_cast<std::size_t>(parent) < ptr) {
      leaf = static_cast<std::size_t>(parent);
    } else {
      ++ptr;
      while (degree[ptr] != 1 || removed[ptr]) ++ptr;
      leaf = ptr;
    }
  }
  return seq;
}

Graph random_tree(std::size_t n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("random_tree: n must be at least 2");
  PruferSequence seq(n - 2);
  for (auto& label : seq) label = static_cast<Vertex>(rng.below(n));
  return prufer_decode(seq, n);
}

TreeStats tree_stats(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("tree_stats: input is not a tree");
  TreeStats stats;
  stats.n = t.order();
  for (std::size_t v = 0; v < t.order(); ++v) {
    const std::size_t d = t.degree(static_cast<Vertex>(v));
    if (d == 1) ++stats.leaf_count;
    if (d > stats.max_degree) stats.max_degree = d;
  }
  return stats;
}

}  // namespace gpack
