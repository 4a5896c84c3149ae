#include "gpack/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace gpack {

DiagnosticsInput diagnostics_input(const Graph& leftover, const PreparedSequence& seq,
                                   std::span<const PartialEmbedding> embeddings) {
  if (embeddings.size() != seq.guests.size())
    throw std::invalid_argument("diagnostics_input: one embedding per guest required");
  DiagnosticsInput in;
  in.n = seq.n;
  in.mu = seq.mu;
  in.special_count = seq.special_count;
  in.omitted_per_special = seq.omitted_per_special;
  in.leftover = leftover;
  for (std::size_t s = 0; s < seq.guests.size(); ++s) {
    const auto& guest = seq.guests[s];
    if (!guest.special) continue;
    SpecialView view;
    view.guest = s;
    view.image.assign(embeddings[s].image.begin(),
                      embeddings[s].image.begin() + static_cast<std::ptrdiff_t>(guest.original_order));
    for (Vertex parent : guest.leaf_parent) view.parent_hosts.push_back(embeddings[s].image.at(parent));
    in.specials.push_back(std::move(view));
  }
  return in;
}

namespace {

void observe(PropertyMeasure& m, double value, std::vector<long long> witness) {
  ++m.checked;
  if (value > m.worst || m.witness.empty()) {
    m.worst = value;
    m.witness = std::move(witness);
  }
  if (value > m.bound) ++m.violations;
}

void finish(PropertyMeasure& m) { m.holds = !m.degenerate && m.violations == 0; }

double relative(double actual, double expected) {
  return expected > 0 ? std::abs(actual / expected - 1.0) : (actual > 0 ? INFINITY : 0.0);
}

}  // namespace

LeftoverDiagnostics leftover_diagnostics(const DiagnosticsInput& in, double gamma_prime,
                                         const DiagnosticsOptions& options) {
  const std::size_t n = in.n;
  const Graph& H = in.leftover;
  if (H.order() != n) throw std::invalid_argument("leftover_diagnostics: leftover has the wrong order");
  LeftoverDiagnostics out;
  out.n = n;
  out.gamma_prime = gamma_prime;
  out.leftover_edges = H.edge_count();
  out.expected_edges = in.special_count * in.omitted_per_special;
  out.p = n >= 2 ? static_cast<double>(out.expected_edges) / static_cast<double>(pairs(n)) : 0.0;
  out.density_matches = out.leftover_edges == out.expected_edges;
  const double tol = gamma_prime * gamma_prime * gamma_prime;
  const double p = out.p;
  const double nn = static_cast<double>(n);
  const double mu = in.mu;

  // Host-side weights w_s(v), and images as bitsets.
  std::vector<std::vector<int>> ws(in.specials.size(), std::vector<int>(n, 0));
  std::vector<int> w(n, 0);
  std::vector<VertexBits> image(in.specials.size(), VertexBits(n));
  for (std::size_t i = 0; i < in.specials.size(); ++i) {
    for (Vertex v : in.specials[i].parent_hosts) {
      ++ws[i][v];
      ++w[v];
    }
    for (Vertex v : in.specials[i].image)
      if (v >= 0) image[i].set(static_cast<std::size_t>(v));
  }
  const auto nbr = neighbourhood_bits(H);

  PropertyMeasure p1;
  p1.name = "P1";
  p1.bound = tol;
  if (n > 0 && options.quasirandom_level <= n && options.quasirandom_level > 0) {
    const auto q = check_quasirandom(H, tol, options.quasirandom_level, options.mode);
    p1.worst = q.worst_ratio_error;
    p1.degenerate = q.degenerate_density;
    p1.checked = q.sets_checked;
    p1.violations = q.worst_ratio_error > tol ? 1 : 0;
    for (Vertex v : q.witness) p1.witness.push_back(v);
    // Density must also be p exactly.
    if (!out.density_matches) ++p1.violations;
  } else {
    p1.degenerate = true;
  }
  finish(p1);

  PropertyMeasure p2;
  p2.name = "P2";
  p2.bound = tol;
  p2.degenerate = p == 0;
  for (std::size_t v = 0; v < n; ++v) observe(p2, relative(w[v], p * nn / 2), {static_cast<long long>(v)});
  finish(p2);

  PropertyMeasure p3;
  p3.name = "P3";
  p3.bound = tol;
  p3.degenerate = p == 0 || mu == 0;
  PropertyMeasure p4;
  p4.name = "P4";
  p4.bound = tol;
  p4.degenerate = p3.degenerate;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < in.specials.size(); ++i) {
      const VertexBits free_i = nbr[v] - image[i];
      observe(p3, relative(static_cast<double>(free_i.count()), mu * p * nn),
              {static_cast<long long>(v), static_cast<long long>(in.specials[i].guest)});
      for (std::size_t j = i + 1; j < in.specials.size(); ++j)
        observe(p4, relative(static_cast<double>((free_i - image[j]).count()), mu * mu * p * nn),
                {static_cast<long long>(v), static_cast<long long>(in.specials[i].guest),
                 static_cast<long long>(in.specials[j].guest)});
    }
  finish(p3);
  finish(p4);

  PropertyMeasure p5;
  p5.name = "P5";
  p5.bound = tol;
  p5.degenerate = p == 0 || mu == 0;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n; ++u) {
      if (u == v) continue;
      double sum = 0;
      for (std::size_t i = 0; i < in.specials.size(); ++i)
        if (!image[i].test(u)) sum += ws[i][v];
      observe(p5, relative(sum, mu * p * nn / 2), {static_cast<long long>(v), static_cast<long long>(u)});
    }
  finish(p5);

  PropertyMeasure p6;
  p6.name = "P6";
  p6.bound = mu > 0 ? 10 * p * p * nn / mu : INFINITY;
  p6.degenerate = mu == 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t i = 0; i < in.specials.size(); ++i) {
      if (image[i].test(u)) continue;
      double sum = 0;
      for (Vertex v : H.neighbours(static_cast<Vertex>(u))) sum += ws[i][v];
      ++p6.checked;
      if (sum > p6.worst || p6.witness.empty()) {
        p6.worst = sum;
        p6.witness = {static_cast<long long>(u), static_cast<long long>(in.specials[i].guest)};
      }
      if (!(sum < p6.bound)) ++p6.violations;
    }
  finish(p6);

  out.properties = {p1, p2, p3, p4, p5, p6};
  return out;
}

LeftoverDiagnostics leftover_diagnostics(const Graph& leftover, const PreparedSequence& seq,
                                         std::span<const PartialEmbedding> embeddings,
                                         double gamma_prime, const DiagnosticsOptions& options) {
  return leftover_diagnostics(diagnostics_input(leftover, seq, embeddings), gamma_prime, options);
}

nlohmann::json to_json(const LeftoverDiagnostics& d) {
  auto finite = [](double x) -> nlohmann::json {
    if (std::isfinite(x)) return x;
    return x > 0 ? "inf" : "-inf";
  };
  nlohmann::json j;
  j["n"] = d.n;
  j["leftover_edges"] = d.leftover_edges;
  j["expected_edges"] = d.expected_edges;
  j["p"] = d.p;
  j["density_matches"] = d.density_matches;
  j["gamma_prime"] = d.gamma_prime;
  j["properties"] = nlohmann::json::array();
  for (const auto& m : d.properties) {
    nlohmann::json e;
    e["name"] = m.name;
    e["worst"] = finite(m.worst);
    e["bound"] = finite(m.bound);
    e["holds"] = m.holds;
    e["degenerate"] = m.degenerate;
    e["witness"] = m.witness;
    e["checked"] = m.checked;
    e["violations"] = m.violations;
    j["properties"].push_back(e);
  }
  return j;
}

}  // namespace gpack
