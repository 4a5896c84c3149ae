#include "gpack/quasirandom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gpack {

void for_each_subset(std::size_t n, std::size_t max_size, const SubsetMode& mode,
                     const std::function<void(std::span<const Vertex>)>& visit) {
  max_size = std::min(max_size, n);
  if (max_size == 0) return;
  std::vector<Vertex> set;
  set.reserve(max_size);
  if (mode.sampled) {
    const std::size_t count = mode.samples ? mode.samples : 10 * n * max_size;
    Rng rng(mode.seed);
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t size = 1 + static_cast<std::size_t>(rng.below(max_size));
      set.clear();
      while (set.size() < size) {
        const auto v = static_cast<Vertex>(rng.below(n));
        if (std::find(set.begin(), set.end(), v) == set.end()) set.push_back(v);
      }
      std::sort(set.begin(), set.end());
      visit(set);
    }
    return;
  }
  // Depth-first over increasing sequences.
  std::function<void(Vertex)> extend = [&](Vertex start) {
    for (auto v = start; static_cast<std::size_t>(v) < n; ++v) {
      set.push_back(v);
      visit(set);
      if (set.size() < max_size) extend(v + 1);
      set.pop_back();
    }
  };
  extend(0);
}

std::vector<VertexBits> neighbourhood_bits(const Graph& g) {
  std::vector<VertexBits> bits(g.order(), VertexBits(g.order()));
  for (std::size_t v = 0; v < g.order(); ++v)
    for (Vertex u : g.neighbours(static_cast<Vertex>(v))) bits[v].set(static_cast<std::size_t>(u));
  return bits;
}

void require_edge_disjoint(const Graph& a, const Graph& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("graphs are on different vertex sets (" +
                                std::to_string(a.order()) + " vs " + std::to_string(b.order()) +
                                ")");
  for (auto [u, v] : a.edges())
    if (b.has_edge(u, v))
      throw std::invalid_argument("graphs share edge " + std::to_string(u) + "-" +
                                  std::to_string(v));
}

QuasirandomReport check_quasirandom(const Graph& g, double alpha, std::size_t k,
                                    const SubsetMode& mode) {
  const std::size_t n = g.order();
  if (k == 0) throw std::invalid_argument("check_quasirandom: k must be at least 1");
  if (k > n) throw std::invalid_argument("check_quasirandom: k exceeds the vertex count");
  QuasirandomReport report;
  report.density = g.density();
  report.level = k;
  report.alpha = alpha;
  report.sampled = mode.sampled;
  if (report.density.numerator() == 0) {
    report.degenerate_density = true;
    return report;
  }
  const double p = to_double(report.density);
  const auto bits = neighbourhood_bits(g);
  VertexBits acc(n);
  for_each_subset(n, k, mode, [&](std::span<const Vertex> set) {
    acc = bits[set[0]];
    for (std::size_t i = 1; i < set.size(); ++i) acc &= bits[set[i]];
    const double expected = std::pow(p, static_cast<double>(set.size())) * static_cast<double>(n);
    const double error = std::abs(static_cast<double>(acc.count()) / expected - 1.0);
    ++report.sets_checked;
    if (error > report.worst_ratio_error || report.witness.empty()) {
      report.worst_ratio_error = error;
      report.witness.assign(set.begin(), set.end());
    }
  });
  return report;
}

QuasirandomReport check_coquasirandom(const Graph& f, const Graph& f_star, double alpha,
                                      std::size_t L, const SubsetMode& mode) {
  require_edge_disjoint(f, f_star);
  const std::size_t n = f.order();
  if (L == 0) throw std::invalid_argument("check_coquasirandom: L must be at least 1");
  if (L > n) throw std::invalid_argument("check_coquasirandom: L exceeds the vertex count");
  QuasirandomReport report;
  report.density = f.density();
  report.density_star = f_star.density();
  report.level = L;
  report.alpha = alpha;
  report.sampled = mode.sampled;
  const double p = to_double(report.density);
  const double p_star = to_double(report.density_star);
  if (p == 0 && p_star == 0) {
    report.degenerate_density = true;
    return report;
  }
  const auto bits = neighbourhood_bits(f);
  const auto bits_star = neighbourhood_bits(f_star);
  VertexBits acc(n);
  std::vector<Vertex> r_part;
  for_each_subset(n, L, mode, [&](std::span<const Vertex> set) {
    const std::size_t s = set.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
      const auto r_size = static_cast<std::size_t>(__builtin_popcountll(mask));
      const std::size_t rest = s - r_size;
      if ((r_size > 0 && p == 0) || (rest > 0 && p_star == 0)) continue;
      acc.set();
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
                              std::pow(p_star, static_cast<double>(rest)) *
                              static_cast<double>(n);
      const double error = std::abs(static_cast<double>(acc.count()) / expected - 1.0);
      ++report.sets_checked;
      if (error > report.worst_ratio_error || report.witness.empty()) {
        report.worst_ratio_error = error;
        report.witness.assign(set.begin(), set.end());
        report.witness_r = r_part;
      }
    }
  });
  return report;
}

}  // namespace gpack
