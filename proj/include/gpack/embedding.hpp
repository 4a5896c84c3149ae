#pragma once

#include "gpack/graph.hpp"

#include <vector>

namespace gpack {

/// Injective map from a prefix of a guest's order into host vertices.
/// image[x] is the host vertex of guest vertex x (-1 if unmapped);
/// preimage[v] is the guest vertex on host vertex v (-1 if free).
struct PartialEmbedding {
  std::size_t guest = 0;
  std::vector<Vertex> image;
  std::vector<Vertex> preimage;
  std::size_t frontier = 0;  ///< number of order positions embedded

  PartialEmbedding() = default;
  PartialEmbedding(std::size_t guest_id, std::size_t guest_order, std::size_t host_order)
      : guest(guest_id), image(guest_order, -1), preimage(host_order, -1) {}

  bool mapped(Vertex x) const { return image[static_cast<std::size_t>(x)] >= 0; }
  bool used(Vertex v) const { return preimage[static_cast<std::size_t>(v)] >= 0; }

  void assign(Vertex x, Vertex v) {
    image[static_cast<std::size_t>(x)] = v;
    preimage[static_cast<std::size_t>(v)] = x;
  }
};

}  // namespace gpack
