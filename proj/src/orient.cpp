#include "gpack/orient.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gpack {

OrientedGraph::OrientedGraph(const Graph& base)
    : base_(base),
      out_(base.order(), VertexBits(base.order())),
      in_(base.order(), VertexBits(base.order())),
      out_degree_(base.order(), 0) {
  for (auto [u, v] : base_.edges()) {
    out_[u].set(v);
    in_[v].set(u);
    ++out_degree_[u];
  }
}

std::size_t OrientedGraph::check(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= order())
    throw std::out_of_range("OrientedGraph: vertex " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v);
}

void OrientedGraph::flip(Vertex u, Vertex v) {
  if (!directed(u, v))
    throw std::invalid_argument("OrientedGraph::flip: no arc " + std::to_string(u) + "->" +
                                std::to_string(v));
  out_[u].reset(v);
  in_[v].reset(u);
  out_[v].set(u);
  in_[u].set(v);
  --out_degree_[u];
  ++out_degree_[v];
}

std::vector<Vertex> OrientedGraph::out_neighbours(Vertex v) const {
  std::vector<Vertex> out;
  const auto& bits = out_[check(v)];
  for (auto i = bits.find_first(); i != VertexBits::npos; i = bits.find_next(i))
    out.push_back(static_cast<Vertex>(i));
  return out;
}

std::vector<Edge> OrientedGraph::arcs() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < order(); ++u)
    for (Vertex v : out_neighbours(static_cast<Vertex>(u))) out.emplace_back(static_cast<Vertex>(u), v);
  return out;
}

OrientedGraph random_orientation(const Graph& h, Rng& rng) {
  OrientedGraph g(h);
  for (auto [u, v] : h.edges())
    if (rng.below(2) == 1) g.flip(u, v);
  return g;
}

std::string describe(const SwitchFailure& failure) {
  if (failure.reason == SwitchFailure::Reason::flip_cap)
    return "vertex " + std::to_string(failure.vertex) + " exceeded the flip cap in round " +
           std::to_string(failure.round);
  return "no switching path from vertex " + std::to_string(failure.vertex) + " in round " +
         std::to_string(failure.round);
}

namespace {

std::size_t nth_set_bit(const VertexBits& bits, std::size_t k) {
  auto i = bits.find_first();
  for (; k > 0; --k) i = bits.find_next(i);
  return i;
}

}  // namespace

Result<SwitchOutcome, SwitchFailure> orientation_switch(const OrientedGraph& h0,
                                                        std::span<const int> w,
                                                        const SwitchOptions& options, Rng& rng) {
  const std::size_t n = h0.order();
  if (w.size() != n) throw std::invalid_argument("orientation_switch: one weight per vertex required");
  long long total = 0;
  for (int x : w) {
    if (x < 0) throw std::invalid_argument("orientation_switch: negative weight");
    total += x;
  }
  if (total != static_cast<long long>(h0.base().edge_count()))
    throw std::invalid_argument("orientation_switch: weights sum to " + std::to_string(total) +
                                " but the graph has " + std::to_string(h0.base().edge_count()) +
                                " edges");

  SwitchOutcome outcome{h0, {}};
  OrientedGraph& g = outcome.graph;
  SwitchStats& stats = outcome.stats;
  stats.flips.assign(n, 0);
  stats.end_uses.assign(n, 0);
  stats.middle_uses.assign(n, 0);

  std::vector<long long> phi(n);
  std::size_t potential = 0;
  for (std::size_t v = 0; v < n; ++v) {
    phi[v] = static_cast<long long>(g.out_degree(static_cast<Vertex>(v))) - w[v];
    potential += static_cast<std::size_t>(std::llabs(phi[v]));
  }
  stats.initial_potential = potential;
  const std::size_t rounds = potential / 2;
  const double cap = options.flip_cap * static_cast<double>(n);

  auto reverse = [&](Vertex a, Vertex b) {
    g.flip(a, b);
    // Differently oriented from H_0 now iff it used to agree.
    const bool now_differs = !h0.directed(b, a);
    if (now_differs) {
      ++stats.flips[a];
      ++stats.flips[b];
    } else {
      --stats.flips[a];
      --stats.flips[b];
    }
  };

  std::vector<Vertex> by_phi(n);
  for (std::size_t round = 0; round < rounds; ++round) {
    for (std::size_t v = 0; v < n; ++v)
      if (static_cast<double>(stats.flips[v]) > cap)
        return SwitchFailure{SwitchFailure::Reason::flip_cap, round, static_cast<Vertex>(v)};

    std::iota(by_phi.begin(), by_phi.end(), 0);
    std::stable_sort(by_phi.begin(), by_phi.end(), [&](Vertex a, Vertex b) { return phi[a] > phi[b]; });
    std::vector<Vertex> positive;
    std::vector<Vertex> negative;
    for (Vertex v : by_phi)
      if (phi[v] > 0) positive.push_back(v);
    for (Vertex v : by_phi)
      if (phi[v] < 0) negative.push_back(v);
    std::sort(negative.begin(), negative.end(), [&](Vertex a, Vertex b) {
      return phi[a] != phi[b] ? phi[a] < phi[b] : a < b;
    });
    if (positive.empty() || negative.empty())
      throw std::logic_error("orientation_switch: potential is positive but unbalanced");

    const std::vector<long long> before = options.check_invariants ? phi : std::vector<long long>{};
    bool done = false;
    for (Vertex x : positive) {
      for (Vertex y : negative) {
        VertexBits middle = g.out_bits(x) & g.in_bits(y);
        const std::size_t count = middle.count();
        if (count > 0) {
          const auto m = static_cast<Vertex>(nth_set_bit(middle, rng.below(count)));
          reverse(x, m);
          reverse(m, y);
          ++stats.switches;
          ++stats.middle_uses[m];
        } else if (g.directed(x, y)) {
          reverse(x, y);
          ++stats.direct_flips;
        } else {
          continue;
        }
        ++stats.end_uses[x];
        ++stats.end_uses[y];
        --phi[x];
        ++phi[y];
        done = true;
        break;
      }
      if (done) break;
    }
    if (!done && options.long_paths) {
      std::vector<Vertex> parent(n, -1);
      for (Vertex x : positive) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[x] = x;
        std::vector<Vertex> queue{x};
        Vertex found = -1;
        for (std::size_t head = 0; head < queue.size() && found < 0; ++head) {
          const Vertex u = queue[head];
          for (auto i = g.out_bits(u).find_first(); i != VertexBits::npos; i = g.out_bits(u).find_next(i)) {
            const auto v = static_cast<Vertex>(i);
            if (parent[v] >= 0) continue;
            parent[v] = u;
            if (phi[v] < 0) {
              found = v;
              break;
            }
            queue.push_back(v);
          }
        }
        if (found < 0) continue;
        for (Vertex v = found; v != x; v = parent[v]) {
          reverse(parent[v], v);
          if (parent[v] != x) ++stats.middle_uses[parent[v]];
        }
        ++stats.path_reversals;
        ++stats.end_uses[x];
        ++stats.end_uses[found];
        --phi[x];
        ++phi[found];
        done = true;
        break;
      }
    }
    if (!done) return SwitchFailure{SwitchFailure::Reason::no_path, round, positive.front()};

    if (options.check_invariants) {
      ++stats.invariant_checks;
      std::size_t now = 0;
      for (std::size_t v = 0; v < n; ++v) {
        const long long actual = static_cast<long long>(g.out_degree(static_cast<Vertex>(v))) - w[v];
        if (actual != phi[v]) throw std::logic_error("orientation_switch: potential bookkeeping drifted");
        if ((before[v] > 0 && phi[v] < 0) || (before[v] < 0 && phi[v] > 0) ||
            std::llabs(phi[v]) > std::llabs(before[v]))
          throw std::logic_error("orientation_switch: |phi| increased or changed sign at " +
                                 std::to_string(v));
        if (stats.flips[v] > stats.end_uses[v] + 2 * stats.middle_uses[v])
          throw std::logic_error("orientation_switch: flip accounting violated at " + std::to_string(v));
        now += static_cast<std::size_t>(std::llabs(phi[v]));
      }
      if (now + 2 * (round + 1) != potential)
        throw std::logic_error("orientation_switch: potential did not drop by 2");
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (g.out_degree(static_cast<Vertex>(v)) != static_cast<std::size_t>(w[v]))
      throw std::logic_error("orientation_switch: target out-degrees not reached");
  return outcome;
}

}  // namespace gpack
