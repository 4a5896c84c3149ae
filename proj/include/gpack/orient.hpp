#pragma once

#include "gpack/graph.hpp"
#include "gpack/quasirandom.hpp"
#include "gpack/random.hpp"
#include "gpack/result.hpp"

#include <span>
#include <string>
#include <vector>

namespace gpack {

/// Orientation of an undirected graph as out- and in-neighbourhood bitsets.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  /// Orients every edge uv with u < v as u -> v.
  explicit OrientedGraph(const Graph& base);

  const Graph& base() const noexcept { return base_; }
  std::size_t order() const noexcept { return base_.order(); }
  /// True if uv is an edge oriented u -> v.
  bool directed(Vertex u, Vertex v) const { return out_[check(u)].test(check(v)); }
  /// Reverses the arc u -> v. Throws std::invalid_argument if absent.
  void flip(Vertex u, Vertex v);
  std::size_t out_degree(Vertex v) const { return out_degree_[check(v)]; }
  const VertexBits& out_bits(Vertex v) const { return out_[check(v)]; }
  const VertexBits& in_bits(Vertex v) const { return in_[check(v)]; }
  std::vector<Vertex> out_neighbours(Vertex v) const;
  /// All arcs (u, v) meaning u -> v, sorted.
  std::vector<Edge> arcs() const;

  bool operator==(const OrientedGraph& other) const {
    return base_ == other.base_ && out_ == other.out_;
  }

 private:
  std::size_t check(Vertex v) const;
  Graph base_;
  std::vector<VertexBits> out_;
  std::vector<VertexBits> in_;
  std::vector<std::size_t> out_degree_;
};

/// Each edge oriented by an independent fair bit, edges taken in
/// lexicographic order.
OrientedGraph random_orientation(const Graph& h, Rng& rng);

struct SwitchOptions {
  double flip_cap = 0.5;  ///< halt once a vertex has more than flip_cap * n changed edges
  bool check_invariants = false;
  /// When no pair has a 2-path or a direct arc, reverse a shortest directed
  /// path from the first positive vertex that reaches a negative one.
  bool long_paths = false;
};

struct SwitchStats {
  std::size_t initial_potential = 0;  ///< Phi(H_0)
  std::size_t switches = 0;           ///< 2-path switches
  std::size_t direct_flips = 0;       ///< single-edge flips between the end vertices
  std::size_t path_reversals = 0;     ///< longer paths reversed (long_paths)
  std::size_t invariant_checks = 0;
  std::vector<std::size_t> flips;       ///< edges at v oriented differently from H_0
  std::vector<std::size_t> end_uses;    ///< times v was an end vertex
  std::vector<std::size_t> middle_uses; ///< times v was a middle vertex
};

struct SwitchFailure {
  enum class Reason { flip_cap, no_path } reason = Reason::no_path;
  std::size_t round = 0;
  Vertex vertex = -1;  ///< over the cap (flip_cap), or x (no_path)
};

std::string describe(const SwitchFailure& failure);

struct SwitchOutcome {
  OrientedGraph graph;
  SwitchStats stats;
};

/// Algorithm 4 on phi(v) = deg+(v) - w(v). Each round takes x = argmax phi
/// and y = argmin phi (smallest labels on ties) and reverses x->m, m->y for
/// m uniform in N+(x) ∩ N-(y). If that set is empty the arc x->y is
/// reversed when present; otherwise the next pairs in (phi desc, phi asc)
/// order are tried before reporting no_path (or, with long_paths, before a
/// breadth-first search for a longer directed path).
/// Throws std::invalid_argument when sum w != e(h) or w has the wrong size,
/// and std::logic_error if check_invariants detects a violated invariant.
Result<SwitchOutcome, SwitchFailure> orientation_switch(const OrientedGraph& h0,
                                                        std::span<const int> w,
                                                        const SwitchOptions& options, Rng& rng);

}  // namespace gpack
