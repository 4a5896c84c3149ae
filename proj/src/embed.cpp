#include "gpack/embed.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace gpack {

std::vector<Vertex> candidate_set(const OrderedGuest& guest, const Graph& host,
                                  const PartialEmbedding& psi, Vertex x) {
  std::vector<Vertex> images;
  for (Vertex y : guest.left_neighbours(x)) {
    if (!psi.mapped(y))
      throw std::invalid_argument("candidate_set: left-neighbour " + std::to_string(y) + " of " +
                                  std::to_string(x) + " is not embedded");
    images.push_back(psi.image[y]);
  }
  return common_neighbourhood(host, images);
}

Result<PartialEmbedding, EmbedFailure> extend_embedding(const OrderedGuest& guest,
                                                        const Graph& host, PartialEmbedding psi,
                                                        std::size_t t_star, Rng& rng) {
  const std::size_t n = host.order();
  if (t_star > guest.graph.order())
    throw std::invalid_argument("random_embedding: t_star exceeds the guest order");
  if (guest.graph.order() > n)
    throw std::invalid_argument("random_embedding: guest larger than host");
  std::size_t free_count = 0;
  for (std::size_t v = 0; v < n; ++v) free_count += !psi.used(static_cast<Vertex>(v));
  std::vector<Vertex> images;
  std::vector<Vertex> free_candidates;
  for (std::size_t t = psi.frontier; t < t_star; ++t) {
    const Vertex x = guest.order.order[t];
    images.clear();
    for (Vertex y : guest.graph.neighbours(x))
      if (guest.order.position[y] < t) images.push_back(psi.image[y]);
    Vertex chosen = -1;
    if (images.empty()) {
      if (free_count == 0) return EmbedFailure{t + 1};
      // Rejection keeps the draw independent of any pool layout, so a run
      // split into chunks consumes the stream identically.
      do chosen = static_cast<Vertex>(rng.below(n));
      while (psi.used(chosen));
    } else {
      free_candidates.clear();
      for (Vertex v : common_neighbourhood(host, images))
        if (!psi.used(v)) free_candidates.push_back(v);
      if (free_candidates.empty()) return EmbedFailure{t + 1};
      chosen = free_candidates[rng.below(free_candidates.size())];
    }
    psi.assign(x, chosen);
    --free_count;
    psi.frontier = t + 1;
  }
  return psi;
}

Result<PartialEmbedding, EmbedFailure> random_embedding(const OrderedGuest& guest,
                                                        const Graph& host, std::size_t t_star,
                                                        Rng& rng, std::size_t guest_id) {
  if (host.order() == 0) throw std::invalid_argument("random_embedding: empty host");
  return extend_embedding(guest, host,
                          PartialEmbedding(guest_id, guest.graph.order(), host.order()), t_star,
                          rng);
}

bool is_valid_partial_embedding(const Graph& guest, const Graph& host, const PartialEmbedding& psi) {
  std::vector<int> hits(host.order(), 0);
  for (std::size_t x = 0; x < guest.order(); ++x) {
    const Vertex v = psi.image[x];
    if (v < 0) continue;
    if (static_cast<std::size_t>(v) >= host.order() || hits[v]++) return false;
  }
  for (auto [x, y] : guest.edges())
    if (psi.mapped(x) && psi.mapped(y) && !host.has_edge(psi.image[x], psi.image[y])) return false;
  return true;
}

std::string to_string(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::diet: return "diet";
    case ConditionKind::codiet: return "codiet";
    case ConditionKind::cover: return "cover";
  }
  return "unknown";
}

namespace {

VertexBits complement_of(std::size_t n, std::span<const Vertex> used) {
  VertexBits keep(n);
  keep.set();
  for (Vertex v : used) keep.reset(static_cast<std::size_t>(v));
  return keep;
}

void record(ConditionReport& report, double error, std::span<const Vertex> set,
            const std::vector<Vertex>& r_part = {}) {
  ++report.checked;
  if (error > report.worst_violation || report.witness.empty()) {
    report.worst_violation = error;
    report.witness.assign(set.begin(), set.end());
    report.witness_r = r_part;
  }
}

}  // namespace

ConditionReport diet_check(const Graph& host, std::span<const Vertex> used, double beta,
                           std::size_t L, const SubsetMode& mode) {
  const std::size_t n = host.order();
  ConditionReport report;
  report.kind = ConditionKind::diet;
  report.beta = beta;
  report.L = L;
  const VertexBits keep = complement_of(n, used);
  const std::size_t remaining = keep.count();
  const double p = to_double(host.density());
  const auto bits = neighbourhood_bits(host);
  if (remaining == 0 || p == 0) {
    report.degenerate = true;
    report.holds = false;
    // Division-free: report the largest count compared against zero.
    for_each_subset(n, L, mode, [&](std::span<const Vertex> set) {
      VertexBits acc = keep;
      for (Vertex s : set) acc &= bits[s];
      record(report, static_cast<double>(acc.count()), set);
    });
    return report;
  }
  VertexBits acc(n);
  for_each_subset(n, L, mode, [&](std::span<const Vertex> set) {
    acc = keep;
    for (Vertex s : set) acc &= bits[s];
    const double expected =
        std::pow(p, static_cast<double>(set.size())) * static_cast<double>(remaining);
    record(report, std::abs(static_cast<double>(acc.count()) / expected - 1.0), set);
  });
  report.holds = report.worst_violation <= beta;
  return report;
}

ConditionReport codiet_check(const Graph& host, const Graph& reservoir,
                             std::span<const Vertex> used, double beta, std::size_t L,
                             const SubsetMode& mode) {
  require_edge_disjoint(host, reservoir);
  const std::size_t n = host.order();
  ConditionReport report;
  report.kind = ConditionKind::codiet;
  report.beta = beta;
  report.L = L;
  const VertexBits keep = complement_of(n, used);
  const std::size_t remaining = keep.count();
  const double p = to_double(host.density());
  const double p_star = to_double(reservoir.density());
  if (remaining == 0 || (p == 0 && p_star == 0)) {
    report.degenerate = true;
    report.holds = false;
    return report;
  }
  const auto bits = neighbourhood_bits(host);
  const auto bits_star = neighbourhood_bits(reservoir);
  VertexBits acc(n);
  std::vector<Vertex> r_part;
  for_each_subset(n, L, mode, [&](std::span<const Vertex> set) {
    const std::size_t s = set.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
      const auto r_size = static_cast<std::size_t>(__builtin_popcountll(mask));
      if ((r_size > 0 && p == 0) || (s - r_size > 0 && p_star == 0)) continue;
      acc = keep;
      r_part.clear();
      for (std::size_t i = 0; i < s; ++i) {
        if (mask >> i & 1) {
          acc &= bits[set[i]];
          r_part.push_back(set[i]);
        } else {
          acc &= bits_star[set[i]];
        }
      }
      const double expected = std::pow(p, static_cast<double>(r_size)) *
                              std::pow(p_star, static_cast<double>(s - r_size)) *
                              static_cast<double>(remaining);
      record(report, std::abs(static_cast<double>(acc.count()) / expected - 1.0), set, r_part);
    }
  });
  report.holds = report.worst_violation <= beta;
  return report;
}

ConditionReport cover_check(const OrderedGuest& guest, const Graph& host,
                            const PartialEmbedding& psi, std::size_t i, double eps, double beta) {
  const std::size_t n = host.order();
  ConditionReport report;
  report.kind = ConditionKind::cover;
  report.beta = beta;
  report.window = i;
  report.eps = eps;
  const double p = to_double(host.density());
  const double width = eps * static_cast<double>(n);
  const double slack = eps * eps * static_cast<double>(n);
  // Window members grouped by left-degree, with their embedded left images.
  std::map<std::size_t, std::vector<std::vector<Vertex>>> classes;
  const auto& order = guest.order.order;
  for (std::size_t pos = i; pos < order.size() && static_cast<double>(pos) < i + width; ++pos) {
    const Vertex x = order[pos];
    std::vector<Vertex> images;
    for (Vertex y : guest.left_neighbours(x)) {
      if (!psi.mapped(y))
        throw std::invalid_argument("cover_check: left-neighbour " + std::to_string(y) + " of " +
                                    std::to_string(x) + " is not embedded");
      images.push_back(psi.image[y]);
    }
    classes[images.size()].push_back(std::move(images));
  }
  if (p == 0) report.degenerate = true;
  for (const auto& [d, members] : classes) {
    const double expected = std::pow(p, static_cast<double>(d)) * static_cast<double>(members.size());
    std::vector<int> count(n, 0);
    for (const auto& images : members)
      for (Vertex v : common_neighbourhood(host, images)) ++count[v];
    for (std::size_t v = 0; v < n; ++v) {
      const double deviation = std::abs(static_cast<double>(count[v]) - expected) - slack;
      const double error = expected > 0 ? deviation / expected : (deviation > 0 ? deviation : 0.0);
      const std::vector<Vertex> witness{static_cast<Vertex>(v), static_cast<Vertex>(d)};
      record(report, error, witness);
    }
  }
  report.holds = !report.degenerate && report.worst_violation <= beta;
  return report;
}

}  // namespace gpack
