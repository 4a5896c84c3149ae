#pragma once

#include "gpack/graph.hpp"

#include <span>
#include <string>
#include <vector>

namespace gpack {

using VertexMap = std::vector<Vertex>;

enum class PackingCheck { none, injectivity, edge_map, shared_edge };

std::string to_string(PackingCheck check);

struct ValidationReport {
  bool valid = false;    ///< (a), (b), (c) all pass
  bool perfect = false;  ///< valid, and every host edge is used
  PackingCheck failed = PackingCheck::none;
  std::size_t guest = 0;        ///< guest at fault
  std::size_t other_guest = 0;  ///< earlier user of a shared edge
  Edge witness{-1, -1};         ///< host edge, or guest vertices for (a)
  std::size_t used_edges = 0;
  std::string message;
};

/// Checks in order: (a) each map is injective into V(hhat), (b) every guest
/// edge lands on a host edge, (c) no host edge is used twice, (d) perfect
/// iff sum e(G_s) = e(hhat) and (a)-(c) pass. Stops at the first violation.
ValidationReport validate_packing(const Graph& hhat, std::span<const Graph> guests,
                                  std::span<const VertexMap> maps);

enum class SearchStatus { sat, unsat, timeout };

struct BruteForceResult {
  SearchStatus status = SearchStatus::unsat;
  std::vector<VertexMap> maps;
  std::size_t nodes = 0;
};

/// Exhaustive backtracking for edge-disjoint embeddings of all guests.
/// Isolated guest vertices are placed without branching.
BruteForceResult brute_force_pack(std::span<const Graph> guests, const Graph& host,
                                  std::size_t node_limit = 10'000'000);

}  // namespace gpack
