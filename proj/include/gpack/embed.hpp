#pragma once

#include "gpack/embedding.hpp"
#include "gpack/guest.hpp"
#include "gpack/quasirandom.hpp"
#include "gpack/result.hpp"

#include <span>
#include <string>
#include <vector>

namespace gpack {

/// RandomEmbedding got stuck: the candidate set of the guest vertex at this
/// 1-based order position had no free host vertex.
struct EmbedFailure {
  std::size_t position = 0;
};

/// N_H(psi(N^-(x))). Throws std::invalid_argument if a left-neighbour of x is
/// not embedded yet. Does not remove used vertices.
std::vector<Vertex> candidate_set(const OrderedGuest& guest, const Graph& host,
                                  const PartialEmbedding& psi, Vertex x);

/// Embeds order positions 1..t_star one at a time, each uniformly into its
/// candidate set minus the used vertices.
Result<PartialEmbedding, EmbedFailure> random_embedding(const OrderedGuest& guest,
                                                        const Graph& host, std::size_t t_star,
                                                        Rng& rng, std::size_t guest_id = 0);

/// Continues an embedding from psi.frontier up to t_star.
Result<PartialEmbedding, EmbedFailure> extend_embedding(const OrderedGuest& guest,
                                                        const Graph& host, PartialEmbedding psi,
                                                        std::size_t t_star, Rng& rng);

/// True if every guest edge inside the embedded part maps to a host edge
/// and the map is injective.
bool is_valid_partial_embedding(const Graph& guest, const Graph& host, const PartialEmbedding& psi);

enum class ConditionKind { diet, codiet, cover };

std::string to_string(ConditionKind kind);

struct ConditionReport {
  ConditionKind kind = ConditionKind::diet;
  double beta = 0;
  std::size_t L = 0;       ///< diet / codiet
  std::size_t window = 0;  ///< cover: start position i (0-based)
  double eps = 0;          ///< cover
  bool holds = false;
  bool degenerate = false;  ///< n - |X| == 0 or zero density
  double worst_violation = 0;
  std::vector<Vertex> witness;    ///< S (diet/codiet) or {v, d} (cover)
  std::vector<Vertex> witness_r;  ///< R (codiet)
  std::size_t checked = 0;
};

/// |N_H(S) \ X| = (1 ± beta) p^|S| (n - |X|) for all 1 <= |S| <= L.
/// worst_violation is the largest relative deviation; holds iff it is <= beta.
ConditionReport diet_check(const Graph& host, std::span<const Vertex> used, double beta,
                           std::size_t L, const SubsetMode& mode = SubsetMode::exact());

/// |(N_H(R) ∩ N_H*(S\R)) \ X| = (1 ± beta) p^|R| p*^|S\R| (n - |X|).
ConditionReport codiet_check(const Graph& host, const Graph& reservoir,
                             std::span<const Vertex> used, double beta, std::size_t L,
                             const SubsetMode& mode = SubsetMode::exact());

/// For each host v and left-degree class d over the window
/// i <= pos < i + eps n: the number of x in X_{i,d} with
/// v in N_H(psi(N^-(x))) equals (1 ± beta) p^d |X_{i,d}| ± eps^2 n.
/// worst_violation = max over (v, d) of (|count - p^d|X|| - eps^2 n) / (p^d|X|).
/// Throws if a left-neighbour of a window vertex is unembedded.
ConditionReport cover_check(const OrderedGuest& guest, const Graph& host,
                            const PartialEmbedding& psi, std::size_t i, double eps, double beta);

}  // namespace gpack
