#include "gpack/leafmatch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gpack {

VertexBits guest_image(const OrderedGuest& guest, const PartialEmbedding& phi, std::size_t n) {
  VertexBits image(n);
  for (std::size_t x = 0; x < guest.original_order; ++x) {
    const Vertex v = phi.image.at(x);
    if (v >= 0) image.set(static_cast<std::size_t>(v));
  }
  return image;
}

std::vector<LeafMatchingGraph> build_leaf_graphs(const PreparedSequence& seq,
                                                 const OrientedGraph& oriented,
                                                 std::span<const PartialEmbedding> embeddings) {
  const std::size_t n = oriented.order();
  if (embeddings.size() != seq.guests.size())
    throw std::invalid_argument("build_leaf_graphs: one embedding per guest required");
  std::vector<LeafMatchingGraph> graphs(n);
  for (std::size_t r = 0; r < n; ++r) {
    graphs[r].r = static_cast<Vertex>(r);
    graphs[r].right = oriented.out_neighbours(static_cast<Vertex>(r));
  }
  std::vector<VertexBits> images(seq.guests.size());
  for (std::size_t s = 0; s < seq.guests.size(); ++s) {
    const auto& guest = seq.guests[s];
    if (!guest.special || guest.omitted.empty()) continue;
    images[s] = guest_image(guest, embeddings[s], n);
    std::vector<std::size_t> by_label(guest.omitted.size());
    for (std::size_t i = 0; i < by_label.size(); ++i) by_label[i] = i;
    std::sort(by_label.begin(), by_label.end(),
              [&](std::size_t a, std::size_t b) { return guest.omitted[a] < guest.omitted[b]; });
    for (std::size_t i : by_label) {
      const Vertex r = embeddings[s].image.at(static_cast<std::size_t>(guest.leaf_parent[i]));
      if (r < 0) throw std::invalid_argument("build_leaf_graphs: leaf parent is not embedded");
      graphs[static_cast<std::size_t>(r)].left.push_back({s, guest.omitted[i]});
    }
  }
  for (auto& f : graphs) {
    if (f.left.size() != f.right.size())
      throw std::logic_error("build_leaf_graphs: " + std::to_string(f.left.size()) +
                             " leaves at vertex " + std::to_string(f.r) + " but out-degree " +
                             std::to_string(f.right.size()));
    f.graph = BipartiteGraph(f.left.size(), f.right.size());
    for (std::size_t i = 0; i < f.left.size(); ++i)
      for (std::size_t j = 0; j < f.right.size(); ++j)
        if (!images[f.left[i].guest].test(static_cast<std::size_t>(f.right[j])))
          f.graph.adjacency[i].push_back(static_cast<int>(j));
  }
  return graphs;
}

namespace {

std::vector<std::size_t> right_degrees(const BipartiteGraph& f) {
  std::vector<std::size_t> d(f.right, 0);
  for (const auto& row : f.adjacency)
    for (int u : row) ++d[static_cast<std::size_t>(u)];
  return d;
}

std::size_t codegree(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t c = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++c;
      ++i;
      ++j;
    }
  }
  return c;
}

}  // namespace

MatchingPreconditions check_matching_preconditions(const BipartiteGraph& f,
                                                   const BipartiteGraph& f_prime, double m,
                                                   double p, double mu,
                                                   std::optional<double> m2_budget) {
  if (f.left != f_prime.left || f.right != f_prime.right)
    throw std::invalid_argument("check_matching_preconditions: F' must span F");
  for (std::size_t x = 0; x < f.left; ++x)
    for (int u : f_prime.adjacency[x])
      if (!f.has_edge(static_cast<int>(x), u))
        throw std::invalid_argument("check_matching_preconditions: F' is not a subgraph of F");
  MatchingPreconditions out;
  out.m = m;
  out.p = p;
  out.mu = mu;

  std::vector<std::size_t> deg;
  std::vector<std::size_t> deg_prime;
  for (std::size_t x = 0; x < f.left; ++x) {
    deg.push_back(f.degree(static_cast<int>(x)));
    deg_prime.push_back(f_prime.degree(static_cast<int>(x)));
  }
  for (std::size_t d : right_degrees(f)) deg.push_back(d);
  for (std::size_t d : right_degrees(f_prime)) deg_prime.push_back(d);

  const double target = mu * m;
  out.m1 = true;
  for (std::size_t i = 0; i < deg.size(); ++i) {
    const double error = target > 0 ? std::abs(static_cast<double>(deg[i]) / target - 1.0)
                                    : (deg[i] > 0 ? INFINITY : 0.0);
    if (error > out.m1_worst || out.m1_witness < 0) {
      out.m1_worst = error;
      out.m1_witness = static_cast<int>(i);
    }
    if (std::abs(static_cast<double>(deg[i]) - target) > p * target) out.m1 = false;
  }

  const double co_target = mu * mu * m;
  for (std::size_t a = 0; a < f.left; ++a)
    for (std::size_t b = a + 1; b < f.left; ++b) {
      const double c = static_cast<double>(codegree(f.adjacency[a], f.adjacency[b]));
      if (std::abs(c - co_target) > p * co_target) ++out.m2_exceptional;
    }
  out.m2_budget = m2_budget ? *m2_budget : (m > 1 ? m * m / std::log(m) : INFINITY);
  out.m2 = static_cast<double>(out.m2_exceptional) <= out.m2_budget;

  out.m3_bound = mu > 0 ? 100.0 * p * m / (mu * mu) : INFINITY;
  out.m3 = true;
  for (std::size_t i = 0; i < deg.size(); ++i) {
    const double gap = static_cast<double>(deg[i]) - static_cast<double>(deg_prime[i]);
    if (gap > out.m3_worst || out.m3_witness < 0) {
      out.m3_worst = gap;
      out.m3_witness = static_cast<int>(i);
    }
    if (!(gap < out.m3_bound)) out.m3 = false;
  }
  return out;
}

DegreeCodegreeReport check_degree_codegree(const BipartiteGraph& f, double eps, double d) {
  if (f.left != f.right) throw std::invalid_argument("check_degree_codegree: sides must be equal");
  DegreeCodegreeReport out;
  const double w = static_cast<double>(f.right);
  out.degrees = true;
  for (std::size_t u = 0; u < f.left; ++u)
    if (!(static_cast<double>(f.degree(static_cast<int>(u))) > (d - eps) * w)) {
      out.degrees = false;
      if (out.degree_witness < 0) out.degree_witness = static_cast<int>(u);
    }
  const double bound = (d + eps) * (d + eps) * w;
  for (std::size_t a = 0; a < f.left; ++a)
    for (std::size_t b = a + 1; b < f.left; ++b)
      if (!(static_cast<double>(codegree(f.adjacency[a], f.adjacency[b])) < bound)) ++out.bad_pairs;
  const double u = static_cast<double>(f.left);
  out.allowed_pairs = 2 * eps * u * u;
  out.codegrees = static_cast<double>(out.bad_pairs) <= out.allowed_pairs;
  return out;
}

std::string to_string(SamplerMode mode) {
  switch (mode) {
    case SamplerMode::exact: return "exact";
    case SamplerMode::mcmc: return "mcmc";
    case SamplerMode::automatic: return "auto";
  }
  return "unknown";
}

SamplerMode sampler_mode_from_string(const std::string& name) {
  if (name == "exact") return SamplerMode::exact;
  if (name == "mcmc") return SamplerMode::mcmc;
  if (name == "auto") return SamplerMode::automatic;
  throw std::invalid_argument("unknown matching mode '" + name + "'");
}

std::size_t default_mcmc_budget(std::size_t edges) {
  if (edges < 2) return 1;
  const double e = static_cast<double>(edges);
  return static_cast<std::size_t>(std::ceil(50.0 * e * std::log(e)));
}

namespace {

// completions[mask] = number of ways to match left slots popcount(mask)..m-1
// into the right slots outside mask.
std::vector<std::uint64_t> completion_counts(const BipartiteGraph& f) {
  const std::size_t m = f.left;
  const std::size_t full = (std::size_t{1} << m) - 1;
  std::vector<std::uint64_t> count(full + 1, 0);
  count[full] = 1;
  for (std::size_t mask = full; mask-- > 0;) {
    const auto x = static_cast<std::size_t>(__builtin_popcountll(mask));
    std::uint64_t total = 0;
    for (int u : f.adjacency[x])
      if (!(mask >> u & 1)) total += count[mask | (std::size_t{1} << u)];
    count[mask] = total;
  }
  return count;
}

Result<MatchingSample, NoMatching> sample_exact(const BipartiteGraph& f, Rng& rng) {
  const auto count = completion_counts(f);
  if (count[0] == 0) return NoMatching{};
  MatchingSample sample;
  sample.sampler = SamplerMode::exact;
  sample.mate.assign(f.left, -1);
  std::size_t mask = 0;
  for (std::size_t x = 0; x < f.left; ++x) {
    std::uint64_t pick = rng.below(count[mask]);
    for (int u : f.adjacency[x]) {
      if (mask >> u & 1) continue;
      const std::uint64_t ways = count[mask | (std::size_t{1} << u)];
      if (pick < ways) {
        sample.mate[x] = u;
        mask |= std::size_t{1} << u;
        break;
      }
      pick -= ways;
    }
  }
  return sample;
}

Result<MatchingSample, NoMatching> sample_mcmc(const BipartiteGraph& f, std::size_t budget, Rng& rng) {
  std::vector<int> mate = maximum_matching(f);
  if (!is_perfect(mate, f.right)) return NoMatching{};
  std::vector<int> owner(f.right, -1);
  for (std::size_t x = 0; x < f.left; ++x) owner[static_cast<std::size_t>(mate[x])] = static_cast<int>(x);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t x = 0; x < f.left; ++x)
    for (int u : f.adjacency[x]) edges.emplace_back(static_cast<int>(x), u);
  MatchingSample sample;
  sample.sampler = SamplerMode::mcmc;
  if (edges.empty()) {
    sample.mate = mate;
    return sample;
  }
  int hole_left = -1;  // near-perfect state when >= 0
  int hole_right = -1;
  std::size_t step = 0;
  for (; step < budget || hole_left >= 0; ++step) {
    if (rng.below(2) == 0) continue;  // lazy half
    const auto [x, u] = edges[rng.below(edges.size())];
    if (hole_left < 0) {
      if (mate[x] == u) {
        mate[x] = -1;
        owner[u] = -1;
        hole_left = x;
        hole_right = u;
      }
    } else if (x == hole_left && u == hole_right) {
      mate[x] = u;
      owner[u] = x;
      hole_left = hole_right = -1;
    } else if (x == hole_left && owner[u] >= 0) {
      const int z = owner[u];
      mate[z] = -1;
      mate[x] = u;
      owner[u] = x;
      hole_left = z;
    } else if (u == hole_right && mate[x] >= 0) {
      const int v = mate[x];
      owner[v] = -1;
      mate[x] = u;
      owner[u] = x;
      hole_right = v;
    }
  }
  sample.mate = std::move(mate);
  sample.steps = step;
  return sample;
}

}  // namespace

Result<MatchingSample, NoMatching> sample_perfect_matching(const BipartiteGraph& f,
                                                           const SamplerOptions& options, Rng& rng) {
  if (f.left != f.right) throw std::invalid_argument("sample_perfect_matching: sides differ in size");
  if (f.left == 0) return MatchingSample{{}, SamplerMode::exact, 0};
  SamplerMode mode = options.mode;
  if (mode == SamplerMode::automatic)
    mode = f.left <= options.exact_cap ? SamplerMode::exact : SamplerMode::mcmc;
  if (mode == SamplerMode::exact) {
    if (f.left > options.exact_cap || f.left > 24)
      throw std::invalid_argument("sample_perfect_matching: side size " + std::to_string(f.left) +
                                  " exceeds the exact-mode cap");
    return sample_exact(f, rng);
  }
  const std::size_t budget = options.budget > 0 ? options.budget : default_mcmc_budget(f.edge_count());
  return sample_mcmc(f, budget, rng);
}

std::uint64_t count_perfect_matchings(const BipartiteGraph& f) {
  if (f.left != f.right) return 0;
  if (f.left > 20) throw std::invalid_argument("count_perfect_matchings: side size above 20");
  if (f.left == 0) return 1;
  return completion_counts(f)[0];
}

Result<LeafMatching, MatchFailure> match_leaves(std::vector<LeafMatchingGraph>& graphs,
                                                const SamplerOptions& options, Rng& rng) {
  // (k, slot) pairs per guest, for the B_k removals.
  std::size_t guests = 0;
  for (const auto& f : graphs)
    for (const auto& leaf : f.left) guests = std::max(guests, leaf.guest + 1);
  std::vector<std::vector<std::pair<std::size_t, int>>> slots(guests);
  for (std::size_t k = 0; k < graphs.size(); ++k)
    for (std::size_t i = 0; i < graphs[k].left.size(); ++i)
      slots[graphs[k].left[i].guest].emplace_back(k, static_cast<int>(i));

  LeafMatching result;
  for (std::size_t r = 0; r < graphs.size(); ++r) {
    LeafMatchingGraph& f = graphs[r];
    MatchStep step;
    step.r = r;
    auto sample = sample_perfect_matching(f.graph, options, rng);
    if (!sample) return MatchFailure{r};
    step.sampler = sample.value().sampler;
    for (std::size_t i = 0; i < f.left.size(); ++i) {
      const Vertex u = f.right[static_cast<std::size_t>(sample.value().mate[i])];
      step.images.push_back(u);
      for (auto [k, slot] : slots[f.left[i].guest]) {
        if (k <= r) continue;
        LeafMatchingGraph& later = graphs[k];
        auto it = std::lower_bound(later.right.begin(), later.right.end(), u);
        if (it == later.right.end() || *it != u) continue;
        const int j = static_cast<int>(it - later.right.begin());
        if (later.graph.remove_edge(slot, j))
          step.removed.push_back({k, later.left[static_cast<std::size_t>(slot)], u});
      }
    }
    for (std::size_t k = r + 1; k < graphs.size(); ++k) graphs[k].generation = r + 1;
    result.steps.push_back(std::move(step));
  }
  return result;
}

}  // namespace gpack
