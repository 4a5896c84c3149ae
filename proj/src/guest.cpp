#include "gpack/guest.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace gpack {

std::size_t GuestSequence::special_count() const {
  return static_cast<std::size_t>(std::floor(mu * static_cast<double>(n) + 1e-9));
}

std::size_t GuestSequence::omitted_per_special() const {
  return static_cast<std::size_t>(std::floor(nu * static_cast<double>(n) + 1e-9));
}

std::size_t GuestSequence::total_edges() const {
  std::size_t total = 0;
  for (const auto& g : guests) total += g.edge_count();
  return total;
}

void GuestSequence::validate() const {
  if (special.size() != guests.size())
    throw std::invalid_argument("guest sequence: one special flag per guest required");
  const std::size_t k = special_count();
  if (k > guests.size())
    throw std::invalid_argument("guest sequence: floor(mu n) = " + std::to_string(k) +
                                " exceeds the number of guests");
  for (std::size_t s = 0; s < guests.size(); ++s) {
    const bool should = s + k >= guests.size();
    if (special[s] != should)
      throw std::invalid_argument("guest sequence: the special guests must be exactly the last " +
                                  std::to_string(k) + " (guest " + std::to_string(s) + ")");
    if (special[s] && guests[s].order() != n - k)
      throw std::invalid_argument("guest sequence: special guest " + std::to_string(s) +
                                  " must have n - floor(mu n) = " + std::to_string(n - k) +
                                  " vertices");
    if (guests[s].order() > n)
      throw std::invalid_argument("guest sequence: guest " + std::to_string(s) +
                                  " has more than n vertices");
  }
}

GuestSequence load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest " + path);
  const auto doc = nlohmann::json::parse(in);
  const auto base = std::filesystem::path(path).parent_path();
  GuestSequence seq;
  seq.n = doc.at("n").get<std::size_t>();
  seq.mu = doc.value("mu", 0.0);
  seq.nu = doc.value("nu", 0.0);
  seq.degeneracy = doc.value("degeneracy", std::size_t{1});
  for (const auto& entry : doc.at("guests")) {
    seq.guests.push_back(read_edge_list_file((base / entry.at("file").get<std::string>()).string()));
    seq.special.push_back(entry.value("special", false));
  }
  return seq;
}

// ---------------------------------------------------------------------------
// Compression

namespace {

struct DegreeProfile {
  std::size_t non_isolated = 0;
  std::size_t branching = 0;  // degree >= 2
};

DegreeProfile profile(const Graph& g) {
  DegreeProfile p;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto d = g.degree(static_cast<Vertex>(v));
    if (d >= 1) ++p.non_isolated;
    if (d >= 2) ++p.branching;
  }
  return p;
}

struct Split {
  std::vector<Vertex> a, b, c;
};

// A isolated, B of degree <= 1, |A| = |C|; non-isolated vertices go to C
// first so that G[B] carries as few edges as possible.
Split split_abc(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t third = n / 3;
  const std::size_t a_size = n % 3 == 2 ? third + 1 : third;
  std::vector<Vertex> isolated, single, branching;
  for (std::size_t v = 0; v < n; ++v) {
    const auto d = g.degree(static_cast<Vertex>(v));
    (d == 0 ? isolated : d == 1 ? single : branching).push_back(static_cast<Vertex>(v));
  }
  Split s;
  s.a.assign(isolated.begin(), isolated.begin() + static_cast<std::ptrdiff_t>(a_size));
  std::vector<Vertex> pool = branching;
  pool.insert(pool.end(), single.begin(), single.end());
  pool.insert(pool.end(), isolated.begin() + static_cast<std::ptrdiff_t>(a_size), isolated.end());
  s.c.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(a_size));
  s.b.assign(pool.begin() + static_cast<std::ptrdiff_t>(a_size), pool.end());
  return s;
}

// Orders B so that matched pairs are adjacent at even offsets, unmatched last.
std::vector<Vertex> matching_layout(const Graph& g, const std::vector<Vertex>& part) {
  std::vector<bool> in_part(g.order(), false);
  for (Vertex v : part) in_part[v] = true;
  std::vector<bool> placed(g.order(), false);
  std::vector<Vertex> layout, loose;
  for (Vertex v : part) {
    if (placed[v]) continue;
    Vertex mate = -1;
    for (Vertex u : g.neighbours(v))
      if (in_part[u]) mate = u;
    placed[v] = true;
    if (mate >= 0) {
      placed[mate] = true;
      layout.push_back(v);
      layout.push_back(mate);
    } else {
      loose.push_back(v);
    }
  }
  layout.insert(layout.end(), loose.begin(), loose.end());
  return layout;
}

// Vertex map of `second` into the vertex set of `first` avoiding shared
// edges, or an empty vector when the B-parts cannot be packed.
std::vector<Vertex> merge_map(const Graph& first, const Graph& second) {
  const Split s1 = split_abc(first);
  const Split s2 = split_abc(second);
  std::vector<Vertex> map(second.order(), -1);
  for (std::size_t i = 0; i < s2.a.size(); ++i) map[s2.a[i]] = s1.c[i];
  for (std::size_t i = 0; i < s2.c.size(); ++i) map[s2.c[i]] = s1.a[i];
  const auto lay1 = matching_layout(first, s1.b);
  const auto lay2 = matching_layout(second, s2.b);
  const std::size_t m = lay1.size();
  auto disjoint_with = [&](const std::vector<Vertex>& candidate) {
    for (Vertex x : s2.b)
      for (Vertex y : second.neighbours(x))
        if (x < y && first.has_edge(candidate[x], candidate[y])) return false;
    return true;
  };
  if (m >= 3) {
    // Shift by one: an image pair starts at an odd offset, so it never
    // coincides with a pair of the first layout.
    for (std::size_t j = 0; j < m; ++j) map[lay2[j]] = lay1[(j + 1) % m];
    return map;
  }
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::size_t j = 0; j < m; ++j) map[lay2[j]] = lay1[perm[j]];
    if (disjoint_with(map)) return map;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {};
}

}  // namespace

bool mergeable(const Graph& g, std::size_t n) {
  const auto p = profile(g);
  return 3 * p.non_isolated <= 2 * n && 3 * p.branching <= n;
}

Compression compress(std::span<const Graph> guests, std::size_t n) {
  Compression out;
  // Working family: graph plus the input indices it carries.
  std::vector<Graph> family;
  std::vector<std::vector<std::size_t>> members;
  out.placement.resize(guests.size());
  for (std::size_t i = 0; i < guests.size(); ++i) {
    if (guests[i].order() > n)
      throw std::invalid_argument("compress: guest " + std::to_string(i) + " has more than " +
                                  std::to_string(n) + " vertices");
    Graph g = guests[i];
    g.resize(n);
    family.push_back(std::move(g));
    members.push_back({i});
    out.placement[i].map.resize(guests[i].order());
    std::iota(out.placement[i].map.begin(), out.placement[i].map.end(), 0);
  }
  for (;;) {
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < family.size(); ++i)
      if (mergeable(family[i], n)) eligible.push_back(i);
    std::stable_sort(eligible.begin(), eligible.end(), [&](std::size_t a, std::size_t b) {
      return profile(family[a]).non_isolated < profile(family[b]).non_isolated;
    });
    bool merged = false;
    for (std::size_t x = 0; x < eligible.size() && !merged; ++x) {
      for (std::size_t y = x + 1; y < eligible.size() && !merged; ++y) {
        std::size_t keep = std::min(eligible[x], eligible[y]);
        std::size_t drop = std::max(eligible[x], eligible[y]);
        auto map = merge_map(family[keep], family[drop]);
        if (map.empty()) continue;
        for (auto [u, v] : family[drop].edges()) family[keep].add_edge(map[u], map[v]);
        for (std::size_t input : members[drop]) {
          for (auto& v : out.placement[input].map) v = map[v];
          members[keep].push_back(input);
        }
        family.erase(family.begin() + static_cast<std::ptrdiff_t>(drop));
        members.erase(members.begin() + static_cast<std::ptrdiff_t>(drop));
        merged = true;
      }
    }
    if (!merged) break;
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t input : members[i]) out.placement[input].output = i;
  out.graphs = std::move(family);
  return out;
}

// ---------------------------------------------------------------------------
// Reordering

IndependentTail uniform_independent_tail(const Graph& g, std::size_t D, std::size_t required) {
  const std::size_t n = g.order();
  if (required == 0) {
    const double bound = std::pow(2.0 * static_cast<double>(D) + 1.0, -3.0);
    required = static_cast<std::size_t>(std::ceil(bound * static_cast<double>(n) - 1e-9));
  }
  std::vector<Vertex> best;
  std::size_t best_degree = 0;
  bool found = false;
  for (std::size_t d = 0; d <= 2 * D && !found; ++d) {
    std::vector<Vertex> set;
    std::vector<bool> blocked(n, false);
    for (std::size_t v = 0; v < n; ++v) {
      if (g.degree(static_cast<Vertex>(v)) != d || blocked[v]) continue;
      set.push_back(static_cast<Vertex>(v));
      for (Vertex u : g.neighbours(static_cast<Vertex>(v))) blocked[u] = true;
    }
    if (set.size() > best.size()) {
      best = std::move(set);
      best_degree = d;
    }
    if (best.size() >= required && best_degree == d && !best.empty()) found = true;
  }
  IndependentTail out;
  out.degree = best_degree;
  const DegeneracyOrder base = degeneracy_order(g);
  std::vector<bool> in_tail(n, false);
  for (Vertex v : best) in_tail[v] = true;
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex v : base.order)
    if (!in_tail[v]) order.push_back(v);
  order.insert(order.end(), best.begin(), best.end());
  out.order = DegeneracyOrder::from_order(g, std::move(order));
  out.tail = std::move(best);
  return out;
}

// ---------------------------------------------------------------------------
// Subgraph sequence

namespace {

std::size_t trailing_tail(const Graph& g, const DegeneracyOrder& order, std::size_t degree) {
  std::size_t length = 0;
  std::vector<bool> in_tail(g.order(), false);
  for (std::size_t i = order.order.size(); i-- > 0;) {
    const Vertex v = order.order[i];
    if (g.degree(v) != degree) break;
    bool independent = true;
    for (Vertex u : g.neighbours(v))
      if (in_tail[u]) independent = false;
    if (!independent) break;
    in_tail[v] = true;
    ++length;
  }
  return length;
}

}  // namespace

PreparedSequence build_subgraph_sequence(const GuestSequence& seq, std::size_t ell,
                                         const PrepOptions& options, Rng& rng) {
  seq.validate();
  PreparedSequence out;
  out.n = seq.n;
  out.mu = seq.mu;
  out.nu = seq.nu;
  out.special_count = seq.special_count();
  out.omitted_per_special = ell;
  out.total_edges = seq.total_edges();
  out.originals = seq.guests;
  const std::size_t n = seq.n;
  const std::size_t D = std::max<std::size_t>(seq.degeneracy, 1);
  const double fraction = options.tail_fraction >= 0
                              ? options.tail_fraction
                              : std::pow(2.0 * static_cast<double>(D) + 1.0, -3.0);
  const std::size_t wanted_tail = std::max<std::size_t>(
      {1, static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n) - 1e-9)),
       options.min_tail});
  if (out.special_count > 0 && out.special_count < wanted_tail)
    out.notes.push_back("floor(mu n) = " + std::to_string(out.special_count) +
                        " is below the required tail length " + std::to_string(wanted_tail) +
                        "; I_s and I'_s are ordered last");

  for (std::size_t s = 0; s < seq.guests.size(); ++s) {
    const Graph& original = seq.guests[s];
    OrderedGuest guest;
    guest.original_order = original.order();
    guest.special = seq.special[s];
    guest.graph = original;
    if (guest.special && ell > 0) {
      std::vector<Vertex> leaves;
      for (std::size_t v = 0; v < original.order(); ++v)
        if (original.degree(static_cast<Vertex>(v)) == 1) leaves.push_back(static_cast<Vertex>(v));
      rng.shuffle(leaves);
      std::vector<bool> chosen(original.order(), false);
      for (Vertex x : leaves) {
        if (guest.omitted.size() == ell) break;
        const Vertex parent = original.neighbours(x)[0];
        if (chosen[parent]) continue;  // single-edge component: keep one end
        chosen[x] = true;
        guest.omitted.push_back(x);
        guest.leaf_parent.push_back(parent);
      }
      if (guest.omitted.size() < ell)
        throw std::invalid_argument("special guest " + std::to_string(s) + " has only " +
                                    std::to_string(guest.omitted.size()) +
                                    " independent leaves, " + std::to_string(ell) + " required");
      for (std::size_t i = 0; i < guest.omitted.size(); ++i)
        guest.graph.remove_edge(guest.omitted[i], guest.leaf_parent[i]);
    }
    guest.graph.resize(n);
    if (guest.special) {
      // Placeholders I_s (the isolated omitted leaves) then padding I'_s last.
      const DegeneracyOrder base = degeneracy_order(guest.graph);
      std::vector<int> rank(n, 0);
      for (Vertex x : guest.omitted) rank[x] = 1;
      for (std::size_t v = guest.original_order; v < n; ++v) rank[v] = 2;
      std::vector<Vertex> order = base.order;
      std::stable_sort(order.begin(), order.end(),
                       [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });
      guest.order = DegeneracyOrder::from_order(guest.graph, std::move(order));
      guest.tail_degree = 0;
      guest.tail_length = trailing_tail(guest.graph, guest.order, 0);
    } else {
      const bool isolated = options.prefer_isolated_tail && guest.graph.isolated_count() > 0;
      auto tail = uniform_independent_tail(guest.graph, D, isolated ? 1 : wanted_tail);
      guest.order = std::move(tail.order);
      guest.tail_degree = tail.degree;
      guest.tail_length = trailing_tail(guest.graph, guest.order, tail.degree);
    }
    if (guest.tail_length < wanted_tail)
      out.notes.push_back("guest " + std::to_string(s) + ": tail of " +
                          std::to_string(guest.tail_length) + " independent vertices, " +
                          std::to_string(wanted_tail) + " wanted");
    out.guests.push_back(std::move(guest));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weights

WeightMap compute_weights(const PreparedSequence& seq, std::span<const PartialEmbedding> embeddings) {
  if (embeddings.size() != seq.guests.size())
    throw std::invalid_argument("compute_weights: one embedding per guest required");
  WeightMap w;
  w.guest.resize(seq.guests.size());
  w.host.assign(seq.n, 0);
  for (std::size_t s = 0; s < seq.guests.size(); ++s) {
    const auto& guest = seq.guests[s];
    if (!guest.special) continue;
    w.guest[s].assign(guest.original_order, 0);
    for (Vertex parent : guest.leaf_parent) ++w.guest[s][parent];
    for (std::size_t x = 0; x < guest.original_order; ++x) {
      if (w.guest[s][x] == 0) continue;
      const Vertex v = embeddings[s].image.at(x);
      if (v < 0)
        throw std::invalid_argument("compute_weights: special guest " + std::to_string(s) +
                                    " is not fully embedded");
      w.host[v] += w.guest[s][x];
    }
  }
  return w;
}

}  // namespace gpack
