#pragma once

#include "gpack/graph.hpp"
#include "gpack/random.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace gpack {

using VertexBits = boost::dynamic_bitset<std::uint64_t>;

/// How vertex subsets are visited: every subset of size 1..k (exact), or a
/// fixed number of random subsets with size uniform in 1..k (sampled).
struct SubsetMode {
  bool sampled = false;
  std::size_t samples = 0;  ///< 0 means 10 * n * k
  std::uint64_t seed = 0;

  static SubsetMode exact() { return {}; }
  static SubsetMode sample(std::size_t count, std::uint64_t seed) { return {true, count, seed}; }
};

/// Calls visit(S) for each subset chosen by mode. Exact subsets arrive in
/// lexicographic order.
void for_each_subset(std::size_t n, std::size_t max_size, const SubsetMode& mode,
                     const std::function<void(std::span<const Vertex>)>& visit);

/// Per-vertex neighbourhood bitsets.
std::vector<VertexBits> neighbourhood_bits(const Graph& g);

struct QuasirandomReport {
  Density density;
  Density density_star;  ///< second graph's density (coquasirandom only)
  std::size_t level = 0;
  double alpha = 0;
  double worst_ratio_error = 0;
  std::vector<Vertex> witness;    ///< S attaining the worst error
  std::vector<Vertex> witness_r;  ///< R within S (coquasirandom only)
  std::size_t sets_checked = 0;
  bool degenerate_density = false;  ///< p == 0: ratios undefined
  bool sampled = false;

  /// (alpha, k)-quasirandom in exact mode iff this holds.
  bool holds() const { return !degenerate_density && worst_ratio_error <= alpha; }
};

/// Worst | |N(S)| / (p^|S| n) - 1 | over subsets of size 1..k.
/// Throws std::invalid_argument when k is 0 or exceeds n.
QuasirandomReport check_quasirandom(const Graph& g, double alpha, std::size_t k,
                                    const SubsetMode& mode = SubsetMode::exact());

/// Worst | |N_F(R) ∩ N_F*(S\R)| / (p^|R| p*^|S\R| n) - 1 | over |S| <= L and
/// R ⊆ S. Terms whose expectation vanishes because a density is zero are
/// skipped (their count is necessarily zero). Throws on shared edges or a
/// vertex-set mismatch.
QuasirandomReport check_coquasirandom(const Graph& f, const Graph& f_star, double alpha,
                                      std::size_t L,
                                      const SubsetMode& mode = SubsetMode::exact());

/// Throws std::invalid_argument if the graphs differ in order or share an edge.
void require_edge_disjoint(const Graph& a, const Graph& b);

}  // namespace gpack
