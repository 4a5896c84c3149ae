#include "gpack/packer.hpp"

#include "gpack/matching.hpp"

#include <cmath>
#include <stdexcept>

namespace gpack {

ReservoirSplit split_reservoir(const Graph& hhat, double gamma, Rng& rng) {
  const double total = static_cast<double>(pairs(hhat.order()));
  const double target = gamma * total;
  const auto edges = hhat.edges();
  if (!(gamma >= 0) || target > static_cast<double>(edges.size()) + 1e-9)
    throw std::invalid_argument("split_reservoir: need 0 <= gamma <= density of the host");
  const double probability = edges.empty() ? 0.0 : target / static_cast<double>(edges.size());
  ReservoirSplit split;
  constexpr std::size_t max_resamples = 100000;
  for (;; ++split.resamples) {
    if (split.resamples == max_resamples)
      throw std::logic_error("split_reservoir: resampling did not terminate");
    std::vector<Edge> main_edges;
    std::vector<Edge> reservoir_edges;
    for (const Edge& e : edges) (rng.bernoulli(probability) ? reservoir_edges : main_edges).push_back(e);
    if (static_cast<double>(reservoir_edges.size()) > 1.1 * target) continue;
    split.main = Graph::from_edges(hhat.order(), main_edges);
    split.reservoir = Graph::from_edges(hhat.order(), reservoir_edges);
    return split;
  }
}

Result<PartialEmbedding, NoCompletion> complete_embedding(const OrderedGuest& guest,
                                                          const PartialEmbedding& psi,
                                                          const Graph& reservoir) {
  const std::size_t n = reservoir.order();
  const auto& order = guest.order.order;
  const std::size_t start = psi.frontier;
  std::vector<Vertex> tail(order.begin() + static_cast<std::ptrdiff_t>(start), order.end());
  std::vector<Vertex> free_hosts;
  std::vector<int> host_index(n, -1);
  for (std::size_t v = 0; v < n; ++v)
    if (!psi.used(static_cast<Vertex>(v))) {
      host_index[v] = static_cast<int>(free_hosts.size());
      free_hosts.push_back(static_cast<Vertex>(v));
    }
  if (free_hosts.size() < tail.size()) return NoCompletion{0, tail.size()};

  BipartiteGraph candidates(tail.size(), free_hosts.size());
  std::vector<Vertex> images;
  for (std::size_t i = 0; i < tail.size(); ++i) {
    images.clear();
    for (Vertex y : guest.graph.neighbours(tail[i])) {
      if (guest.order.position[y] >= start)
        throw std::invalid_argument("complete_embedding: the unembedded tail is not independent");
      images.push_back(psi.image[y]);
    }
    for (Vertex v : common_neighbourhood(reservoir, images))
      if (host_index[v] >= 0) candidates.adjacency[i].push_back(host_index[v]);
  }
  const auto mate = maximum_matching(candidates);
  std::size_t matched = 0;
  for (int u : mate) matched += u >= 0;
  if (matched < tail.size()) return NoCompletion{matched, tail.size()};
  PartialEmbedding out = psi;
  for (std::size_t i = 0; i < tail.size(); ++i) out.assign(tail[i], free_hosts[static_cast<std::size_t>(mate[i])]);
  out.frontier = order.size();
  return out;
}

std::size_t completion_length(double delta, std::size_t n) {
  return static_cast<std::size_t>(std::floor(delta * static_cast<double>(n) + 1e-9));
}

std::string describe(const PackFailure& failure) {
  return std::string(failure.stage == PackStage::embedding ? "embedding" : "completion") +
         " failed for guest " + std::to_string(failure.guest) + " at position " +
         std::to_string(failure.position);
}

Result<PackingResult, PackFailure> packing_process(const PreparedSequence& seq, const Graph& hhat,
                                                   const PackingParams& params, Rng& rng,
                                                   const PackObserver& observer) {
  const std::size_t n = hhat.order();
  if (seq.n != n) throw std::invalid_argument("packing_process: sequence and host differ in n");
  if (seq.total_edges > hhat.edge_count())
    throw std::invalid_argument("packing_process: guests have more edges than the host");
  for (const auto& g : seq.guests)
    if (g.graph.order() != n)
      throw std::invalid_argument("packing_process: every prepared guest must have n vertices");

  auto split = split_reservoir(hhat, params.gamma, rng);
  PackingResult result;
  result.main = std::move(split.main);
  result.reservoir = std::move(split.reservoir);
  result.initial_reservoir_edges = result.reservoir.edge_count();
  const std::size_t reserved = completion_length(params.delta, n);

  for (std::size_t s = 0; s < seq.guests.size(); ++s) {
    const OrderedGuest& guest = seq.guests[s];
    // The completion needs an independent tail; a shorter one moves the
    // boundary right.
    std::size_t tail = std::min(reserved, guest.tail_length);
    if (tail > 0 && guest.tail_degree > 0 && params.min_reservoir_candidates > 0 &&
        static_cast<double>(reserved) * std::pow(params.gamma, static_cast<double>(guest.tail_degree)) <
            params.min_reservoir_candidates)
      tail = 0;
    if (tail < reserved)
      result.notes.push_back("guest " + std::to_string(s) + ": completion tail shortened to " +
                             std::to_string(tail));
    const std::size_t t_star = n - tail;
    result.t_star.push_back(t_star);

    PartialEmbedding psi(s, n, n);
    const bool probing = params.checkpoint > 0 && params.probe;
    while (psi.frontier < t_star) {
      const std::size_t start = psi.frontier;
      const std::size_t stop = probing ? std::min(t_star, psi.frontier + params.checkpoint) : t_star;
      auto embedded = extend_embedding(guest, result.main, std::move(psi), stop, rng);
      if (!embedded) return PackFailure{s, embedded.failure().position, PackStage::embedding};
      psi = std::move(embedded).value();
      if (probing) params.probe(s, start, guest, result.main, result.reservoir, psi);
    }

    GuestStep step;
    step.guest = s;
    for (auto [x, y] : guest.graph.edges()) {
      const bool x_in = guest.order.position[x] < t_star;
      const bool y_in = guest.order.position[y] < t_star;
      if (x_in && y_in) {
        const Vertex a = psi.image[x];
        const Vertex b = psi.image[y];
        if (!result.main.remove_edge(a, b))
          throw std::logic_error("packing_process: embedded edge missing from H_{s-1}");
        step.from_main.emplace_back(std::min(a, b), std::max(a, b));
      }
    }

    auto completed = complete_embedding(guest, psi, result.reservoir);
    if (!completed) return PackFailure{s, t_star, PackStage::completion};
    PartialEmbedding phi = std::move(completed).value();
    for (auto [x, y] : guest.graph.edges()) {
      if (guest.order.position[x] < t_star && guest.order.position[y] < t_star) continue;
      const Vertex a = phi.image[x];
      const Vertex b = phi.image[y];
      if (!result.reservoir.remove_edge(a, b))
        throw std::logic_error("packing_process: completion edge missing from H*_{s-1}");
      step.from_reservoir.emplace_back(std::min(a, b), std::max(a, b));
    }
    result.embeddings.push_back(std::move(phi));
    if (observer) observer(step, result.main, result.reservoir);
  }

  result.leftover = result.main;
  for (auto [u, v] : result.reservoir.edges()) result.leftover.add_edge(u, v);
  return result;
}

}  // namespace gpack
