#pragma once

#include "gpack/graph.hpp"
#include "gpack/random.hpp"

#include <vector>

namespace gpack {

/// Prüfer code of a labelled tree on n >= 2 vertices: n-2 labels in [0, n).
using PruferSequence = std::vector<Vertex>;

struct TreeStats {
  std::size_t n = 0;
  std::size_t leaf_count = 0;
  std::size_t max_degree = 0;
};

/// Smallest-leaf-first decoding. Throws std::invalid_argument on a length
/// mismatch or an out-of-range label.
Graph prufer_decode(const PruferSequence& seq, std::size_t n);

/// Inverse of prufer_decode. Throws std::invalid_argument if t is not a tree
/// on at least 2 vertices.
PruferSequence prufer_encode(const Graph& t);

/// Uniform labelled tree: decodes n-2 independent uniform labels.
Graph random_tree(std::size_t n, Rng& rng);

TreeStats tree_stats(const Graph& t);

}  // namespace gpack
