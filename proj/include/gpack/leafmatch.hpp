#pragma once

#include "gpack/embedding.hpp"
#include "gpack/guest.hpp"
#include "gpack/matching.hpp"
#include "gpack/orient.hpp"
#include "gpack/result.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gpack {

/// An omitted leaf: guest index and its label in that guest.
struct LeafRef {
  std::size_t guest = 0;
  Vertex leaf = -1;
  bool operator==(const LeafRef&) const = default;
};

/// F_r: leaves dangling at r against N+(r). Left slot i is left[i], right
/// slot j is right[j].
struct LeafMatchingGraph {
  Vertex r = -1;
  std::vector<LeafRef> left;
  std::vector<Vertex> right;
  BipartiteGraph graph;
  std::size_t generation = 0;
};

/// Host vertices phi*_s({0..v(G_s)-1}), the image of G'_s, for one guest.
VertexBits guest_image(const OrderedGuest& guest, const PartialEmbedding& phi, std::size_t n);

/// One F_r per host vertex. Leaves are listed by guest, then by label; the
/// right side is N+(r) ascending. Edge (x, u) iff u is outside im phi'_s for
/// the guest s of x. Throws std::logic_error when |L_r| != deg+(r).
std::vector<LeafMatchingGraph> build_leaf_graphs(const PreparedSequence& seq,
                                                 const OrientedGraph& oriented,
                                                 std::span<const PartialEmbedding> embeddings);

struct MatchingPreconditions {
  double m = 0, p = 0, mu = 0;
  bool m1 = false, m2 = false, m3 = false;
  double m1_worst = 0;  ///< max |deg / (mu m) - 1|
  int m1_witness = -1;  ///< left slot, or left + right slot
  std::size_t m2_exceptional = 0;
  double m2_budget = 0;  ///< m^2 / log m unless configured
  double m3_worst = 0;   ///< max deg_F - deg_F'
  double m3_bound = 0;   ///< 100 p m / mu^2
  int m3_witness = -1;
  bool holds() const { return m1 && m2 && m3; }
};

/// M1: deg_F(x) = (1 ± p) mu m on both sides; M2: codeg_F = (1 ± p) mu^2 m
/// for all but m2_budget left pairs; M3: deg_F - deg_F' < 100 p m / mu^2.
/// Right slots are reported as left + j. Throws if F' is not a spanning
/// subgraph of F.
MatchingPreconditions check_matching_preconditions(const BipartiteGraph& f,
                                                   const BipartiteGraph& f_prime, double m,
                                                   double p, double mu,
                                                   std::optional<double> m2_budget = std::nullopt);

struct DegreeCodegreeReport {
  bool degrees = false;     ///< (i)
  bool codegrees = false;   ///< (ii)
  int degree_witness = -1;  ///< first u violating (i)
  std::size_t bad_pairs = 0;
  double allowed_pairs = 0;  ///< 2 eps |U|^2
  bool holds() const { return degrees && codegrees; }
};

/// (i) deg(u) > (d - eps)|W| for all u in U, and (ii) codeg(u, u') <
/// (d + eps)^2 |W| for all but 2 eps |U|^2 pairs. Throws on unequal sides.
DegreeCodegreeReport check_degree_codegree(const BipartiteGraph& f, double eps, double d);

enum class SamplerMode { exact, mcmc, automatic };

std::string to_string(SamplerMode mode);
SamplerMode sampler_mode_from_string(const std::string& name);

struct SamplerOptions {
  SamplerMode mode = SamplerMode::automatic;
  std::size_t exact_cap = 12;  ///< exact sampling allowed up to this side size
  std::size_t budget = 0;      ///< mcmc steps; 0 means 50 |E| ln |E|
};

struct MatchingSample {
  std::vector<int> mate;  ///< left slot -> right slot
  SamplerMode sampler = SamplerMode::exact;
  std::size_t steps = 0;  ///< chain steps taken (mcmc)
};

struct NoMatching {};

/// Default chain length 50 |E| ln |E|, at least 1.
std::size_t default_mcmc_budget(std::size_t edges);

/// Uniform perfect matching (exact: subset counting, then sequential draws
/// proportional to completion counts) or the Broder chain on perfect and
/// near-perfect matchings started from the augmenting-path matching, run for
/// the budget and then until it sits on a perfect matching.
/// Throws std::invalid_argument on unequal sides or exact mode above the cap.
Result<MatchingSample, NoMatching> sample_perfect_matching(const BipartiteGraph& f,
                                                           const SamplerOptions& options, Rng& rng);

/// Number of perfect matchings (exact, side size at most 20).
std::uint64_t count_perfect_matchings(const BipartiteGraph& f);

struct RemovedEdge {
  std::size_t k = 0;  ///< index of the F_k losing the edge
  LeafRef leaf;
  Vertex host = -1;
  bool operator==(const RemovedEdge&) const = default;
};

struct MatchStep {
  std::size_t r = 0;
  std::vector<Vertex> images;  ///< sigma_r(left[i]) as host vertices
  std::vector<RemovedEdge> removed;  ///< the B_k for k > r
  SamplerMode sampler = SamplerMode::exact;
};

struct LeafMatching {
  std::vector<MatchStep> steps;  ///< one per host vertex, in order
};

struct MatchFailure {
  std::size_t r = 0;
};

/// Algorithm 3 over graphs (mutated in place: later graphs lose B_k).
Result<LeafMatching, MatchFailure> match_leaves(std::vector<LeafMatchingGraph>& graphs,
                                                const SamplerOptions& options, Rng& rng);

}  // namespace gpack
