#pragma once

#include "gpack/embedding.hpp"
#include "gpack/graph.hpp"
#include "gpack/random.hpp"

#include <span>
#include <string>
#include <vector>

namespace gpack {

/// Raw (mu, n)-graph sequence as supplied by a manifest or a harness.
/// The last floor(mu n) guests are the special ones.
struct GuestSequence {
  std::size_t n = 0;
  double mu = 0;
  double nu = 0;
  std::size_t degeneracy = 1;  ///< declared D
  std::vector<Graph> guests;
  std::vector<bool> special;

  std::size_t special_count() const;  ///< floor(mu n)
  std::size_t omitted_per_special() const;  ///< floor(nu n)
  std::size_t total_edges() const;

  /// Throws std::invalid_argument when the special flags or vertex counts
  /// do not describe a (mu, n)-sequence.
  void validate() const;
};

/// Loads a JSON manifest: {"n", "mu", "nu", "degeneracy",
/// "guests": [{"file": "...", "special": bool}, ...]}. Guest files use the
/// edge-list format and are resolved relative to the manifest directory.
GuestSequence load_manifest(const std::string& path);

// ---------------------------------------------------------------------------
// Compression

/// Where an input graph ended up: output index plus vertex map into it.
struct Placement {
  std::size_t output = 0;
  std::vector<Vertex> map;
};

struct Compression {
  std::vector<Graph> graphs;  ///< each on n vertices
  std::vector<Placement> placement;  ///< one per input graph
};

/// Repeatedly packs two graphs that both have at most 2n/3 non-isolated
/// vertices and at most n/3 vertices of degree >= 2 into one graph, via an
/// (A, B, C) split of each. Candidates are taken in ascending order of
/// non-isolated vertex count. Throws if a guest has more than n vertices.
Compression compress(std::span<const Graph> guests, std::size_t n);

bool mergeable(const Graph& g, std::size_t n);

// ---------------------------------------------------------------------------
// Reordering

struct IndependentTail {
  std::size_t degree = 0;
  DegeneracyOrder order;
  std::vector<Vertex> tail;  ///< the last tail.size() vertices of order
};

/// Independent set of common degree d <= 2D, found greedily inside each
/// degree bucket 0..2D, moved to the end of a degeneracy order. Picks the
/// smallest d whose set reaches `required` (default ceil((2D+1)^-3 v(g))),
/// otherwise the largest set found.
IndependentTail uniform_independent_tail(const Graph& g, std::size_t D, std::size_t required = 0);

// ---------------------------------------------------------------------------
// Subgraph sequence

/// Guest prepared for embedding: padded to n vertices, ordered, and (for
/// special guests) with its omitted leaves isolated. Omitted leaves keep
/// their labels and act as the placeholder set I_s; labels
/// original_order..n-1 are the padding set I'_s.
struct OrderedGuest {
  Graph graph;  ///< G''_s on n vertices
  DegeneracyOrder order;
  std::size_t original_order = 0;  ///< v(G_s)
  std::size_t tail_degree = 0;
  std::size_t tail_length = 0;
  bool special = false;
  std::vector<Vertex> omitted;      ///< V_s
  std::vector<Vertex> leaf_parent;  ///< parent in G_s of omitted[i]

  /// Positions 0..t-1 of the order.
  std::span<const Vertex> prefix(std::size_t t) const {
    return std::span<const Vertex>(order.order).first(t);
  }
  std::vector<Vertex> left_neighbours(Vertex x) const {
    return gpack::left_neighbours(graph, order, x);
  }
};

struct PreparedSequence {
  std::size_t n = 0;
  double mu = 0;
  double nu = 0;
  std::size_t special_count = 0;
  std::size_t omitted_per_special = 0;  ///< ell
  std::size_t total_edges = 0;  ///< edges of the original guests
  std::vector<Graph> originals;  ///< G_s as supplied
  std::vector<OrderedGuest> guests;
  std::vector<std::string> notes;  ///< diagnostics raised during preparation
};

struct PrepOptions {
  double tail_fraction = -1;   ///< negative: (2D+1)^-3
  std::size_t min_tail = 0;    ///< tail length the embedder needs (floor(delta n))
  /// Non-special guests with isolated vertices take them as a degree-0
  /// tail even when there are fewer than the wanted number.
  bool prefer_isolated_tail = false;
};

/// Selects V_s (ell independent leaves, random greedy order) for each
/// special guest, isolates them, pads every guest to n vertices with the
/// padding last, and orders each guest so that its tail is independent.
/// Throws std::invalid_argument if a special guest lacks ell independent leaves.
PreparedSequence build_subgraph_sequence(const GuestSequence& seq, std::size_t ell,
                                         const PrepOptions& options, Rng& rng);

// ---------------------------------------------------------------------------
// Weights

struct WeightMap {
  std::vector<std::vector<int>> guest;  ///< w_s(x); empty for non-special s
  std::vector<int> host;                ///< w(v)
};

/// w(v) = sum over special s of w_s(phi'_s^-1(v)). Throws if a special guest
/// is not fully embedded.
WeightMap compute_weights(const PreparedSequence& seq, std::span<const PartialEmbedding> embeddings);

}  // namespace gpack
