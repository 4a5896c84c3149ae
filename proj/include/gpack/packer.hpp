#pragma once

#include "gpack/embed.hpp"
#include "gpack/guest.hpp"
#include "gpack/result.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gpack {

struct ReservoirSplit {
  Graph main;       ///< H_0
  Graph reservoir;  ///< H*_0
  std::size_t resamples = 0;
};

/// Puts each edge of hhat into the reservoir independently with probability
/// gamma C(n,2) / e(hhat), resampling while e(H*_0) > 1.1 gamma C(n,2).
/// Throws std::invalid_argument unless 0 <= gamma C(n,2) <= e(hhat).
ReservoirSplit split_reservoir(const Graph& hhat, double gamma, Rng& rng);

/// The reservoir admits no completion of the tail.
struct NoCompletion {
  std::size_t matched = 0;
  std::size_t needed = 0;
};

/// Maps the unembedded positions psi.frontier..n-1 (an independent set whose
/// left-neighbours are all embedded) onto the free host vertices so that
/// each x goes into N_reservoir(psi(N^-(x))), via a maximum bipartite
/// matching. Throws std::invalid_argument when the tail is not independent.
Result<PartialEmbedding, NoCompletion> complete_embedding(const OrderedGuest& guest,
                                                          const PartialEmbedding& psi,
                                                          const Graph& reservoir);

/// Called between embedding chunks with the guest index, the chunk start,
/// the guest, H_{s-1}, H*_{s-1} and the partial map (frontier = chunk end).
using EmbeddingProbe =
    std::function<void(std::size_t guest_index, std::size_t chunk_start, const OrderedGuest& guest,
                       const Graph& main, const Graph& reservoir, const PartialEmbedding& psi)>;

struct PackingParams {
  double gamma = 0.1;
  double delta = 0.05;
  /// When positive, a guest whose tail has degree d >= 1 is embedded in full
  /// (no completion) if floor(delta n) gamma^d falls below this value.
  double min_reservoir_candidates = 0;
  std::size_t checkpoint = 0;  ///< probe every this many positions; 0 disables
  EmbeddingProbe probe;
};

/// floor(delta n), the number of order positions left for completion.
std::size_t completion_length(double delta, std::size_t n);

struct PackingResult {
  std::vector<PartialEmbedding> embeddings;  ///< phi*_s, total on [n]
  Graph main;       ///< H_{s*}
  Graph reservoir;  ///< H*_{s*}
  Graph leftover;   ///< H = H_{s*} + H*_{s*}
  std::size_t initial_reservoir_edges = 0;
  std::vector<std::size_t> t_star;  ///< positions embedded randomly, per guest
  std::vector<std::string> notes;
};

enum class PackStage { embedding, completion };

struct PackFailure {
  std::size_t guest = 0;     ///< 0-based guest index
  std::size_t position = 0;  ///< 1-based stuck position (embedding) or frontier
  PackStage stage = PackStage::embedding;
};

std::string describe(const PackFailure& failure);

/// Edges taken from H_{s-1} and from H*_{s-1} by guest s.
struct GuestStep {
  std::size_t guest = 0;
  std::vector<Edge> from_main;
  std::vector<Edge> from_reservoir;
};

using PackObserver =
    std::function<void(const GuestStep&, const Graph& main, const Graph& reservoir)>;

/// Algorithm 1. The observer, when set, runs after every guest.
/// Throws std::invalid_argument if a guest is not on n vertices or the
/// guests have more edges than hhat.
Result<PackingResult, PackFailure> packing_process(const PreparedSequence& seq, const Graph& hhat,
                                                   const PackingParams& params, Rng& rng,
                                                   const PackObserver& observer = {});

}  // namespace gpack
