#pragma once

#include "gpack/config.hpp"
#include "gpack/diagnostics.hpp"
#include "gpack/embed.hpp"
#include "gpack/guest.hpp"
#include "gpack/result.hpp"
#include "gpack/validate.hpp"

#include "json.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gpack {

/// Serializable record of a packing, re-checkable from its own contents.
struct PackingCertificate {
  Graph host;
  std::vector<Graph> guests;
  std::vector<bool> special;
  std::vector<VertexMap> maps;
  std::uint64_t seed = 0;
  std::size_t attempt = 0;        ///< index of the successful attempt
  std::size_t attempts_used = 0;
  RunConfig config;
  bool perfect = false;
  // Almost-perfect stage, for diagnostics.
  double mu = 0;
  double nu = 0;
  std::size_t special_count = 0;
  std::size_t omitted_per_special = 0;
  Graph leftover;
  std::vector<SpecialView> specials;
  std::vector<std::string> notes;
};

inline constexpr const char* certificate_schema = "gpack.certificate/1";

nlohmann::json to_json(const PackingCertificate& certificate);
/// Throws std::invalid_argument on a schema mismatch or malformed content.
PackingCertificate certificate_from_json(const nlohmann::json& j);
void save_certificate(const PackingCertificate& certificate, const std::string& path);
PackingCertificate load_certificate(const std::string& path);

/// Re-runs validate_packing on the certificate's host, guests and maps.
ValidationReport verify_certificate(const PackingCertificate& certificate);

DiagnosticsInput diagnostics_input(const PackingCertificate& certificate);

struct AttemptRecord {
  std::size_t attempt = 0;
  std::string stage;  ///< embedding, completion, orientation, matching
  std::string detail;
};

/// Embedding-condition measurement taken at a checkpoint (diagnostics 2).
struct ConditionProbe {
  std::size_t guest = 0;
  std::size_t frontier = 0;
  ConditionReport report;
};

nlohmann::json to_json(const ConditionProbe& probe);

struct PipelineOutcome {
  PackingCertificate certificate;
  std::optional<LeftoverDiagnostics> diagnostics;
  std::vector<ConditionProbe> conditions;  ///< diagnostics 2 only
  std::vector<AttemptRecord> failures;  ///< failed attempts before the success
};

struct PipelineFailure {
  std::size_t attempts = 0;
  std::vector<AttemptRecord> failures;
};

/// Algorithm 5 with the retry policy: attempt i draws from
/// Rng::derive(config.seed, i); orientation and leaf matching retry up to
/// stage_budget times each before the attempt is abandoned. The lowest
/// successful attempt index wins regardless of thread count. If the guests
/// have fewer edges than hhat the sequence is padded with single edges
/// (packing mode). Throws std::invalid_argument on malformed input and
/// std::logic_error if a produced packing fails validation.
Result<PipelineOutcome, PipelineFailure> perfect_packing(const GuestSequence& seq, const Graph& hhat,
                                                         const RunConfig& config);

/// Outcome of the almost-perfect stage alone.
struct AlmostPerfect {
  GuestSequence working;  ///< padded and compressed sequence actually packed
  PreparedSequence prepared;
  std::vector<PartialEmbedding> embeddings;
  Graph leftover;
};

/// Runs leaf omission and packing_process for one attempt. Returns nullopt
/// when packing_process fails.
std::optional<AlmostPerfect> almost_perfect_packing(const GuestSequence& seq, const Graph& hhat,
                                                    const RunConfig& config, std::size_t attempt);

/// Uniform tree on n vertices, cn leaves at least: resamples until it has
/// min_leaves leaves.
Graph random_tree_with_leaves(std::size_t n, std::size_t min_leaves, Rng& rng);

struct HarnessDefaults {
  double mu;
  double nu;
};

/// Defaults used by the harnesses when the config leaves mu or nu unset.
HarnessDefaults ringel_defaults(std::size_t n);
HarnessDefaults gyarfas_defaults(std::size_t n);

/// 2n-1 copies of one random n-vertex tree for K_{2n-1}; the last
/// floor(mu N) copies are special and padded to N - floor(mu N) vertices.
GuestSequence ringel_sequence(std::size_t n, double mu, double nu, Rng& rng);

/// T_2..T_n independent uniform trees for K_n. The floor(mu n) smallest
/// trees with at most n - floor(mu n) vertices, floor(mu n) leaves and
/// floor(nu n) independent leaves are special and go last; every group is in
/// decreasing size. Throws if too few trees are eligible.
GuestSequence gyarfas_sequence(std::size_t n, double mu, double nu, Rng& rng);

/// Instance stream used by the harnesses: Rng::derive(seed, 1 << 40).
Rng harness_rng(std::uint64_t seed);

Result<PipelineOutcome, PipelineFailure> harness_ringel(std::size_t n, const RunConfig& config);
Result<PipelineOutcome, PipelineFailure> harness_gyarfas(std::size_t n, const RunConfig& config);

}  // namespace gpack
