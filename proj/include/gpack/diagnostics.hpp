#pragma once

#include "gpack/embedding.hpp"
#include "gpack/guest.hpp"
#include "gpack/quasirandom.hpp"

#include "json.hpp"

#include <span>
#include <string>
#include <vector>

namespace gpack {

/// What the leftover checks need about one special guest.
struct SpecialView {
  std::size_t guest = 0;
  std::vector<Vertex> image;         ///< phi'_s on V(G'_s)
  std::vector<Vertex> parent_hosts;  ///< phi'_s(parent) per omitted leaf
};

struct DiagnosticsInput {
  std::size_t n = 0;
  double mu = 0;
  std::size_t special_count = 0;
  std::size_t omitted_per_special = 0;
  Graph leftover;
  std::vector<SpecialView> specials;
};

DiagnosticsInput diagnostics_input(const Graph& leftover, const PreparedSequence& seq,
                                   std::span<const PartialEmbedding> embeddings);

struct PropertyMeasure {
  std::string name;
  double worst = 0;  ///< largest relative error (P1-P5) or largest sum (P6)
  double bound = 0;  ///< tolerance the worst value is compared against
  bool holds = false;
  bool degenerate = false;
  std::vector<long long> witness;
  std::size_t checked = 0;
  std::size_t violations = 0;
};

struct LeftoverDiagnostics {
  std::size_t n = 0;
  std::size_t leftover_edges = 0;
  std::size_t expected_edges = 0;  ///< floor(mu n) floor(nu n)
  double p = 0;                    ///< expected_edges / C(n,2)
  bool density_matches = false;
  double gamma_prime = 0;
  std::vector<PropertyMeasure> properties;  ///< P1..P6
};

struct DiagnosticsOptions {
  std::size_t quasirandom_level = 2;
  SubsetMode mode = SubsetMode::exact();
};

/// Measures P1-P6 with tolerance gamma'^3 (bound 10 p^2 n / mu for P6).
LeftoverDiagnostics leftover_diagnostics(const DiagnosticsInput& input, double gamma_prime,
                                         const DiagnosticsOptions& options = {});

LeftoverDiagnostics leftover_diagnostics(const Graph& leftover, const PreparedSequence& seq,
                                         std::span<const PartialEmbedding> embeddings,
                                         double gamma_prime, const DiagnosticsOptions& options = {});

nlohmann::json to_json(const LeftoverDiagnostics& diagnostics);

}  // namespace gpack
