#pragma once

#include "rhc/hypergraph.hpp"
#include "rhc/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rhc {

/// Pseudorandom 1-rooted hypergraph: each unordered pair {x, y} independently
/// becomes, with probability `density`, the tail of one edge {x, y, h} headed
/// at a uniformly chosen third vertex h. Every pair is the head-outside pair
/// of at most one edge, so the result is 1-rooted by construction.
inline RootedHypergraph generate_synthetic_rooted(std::size_t vertex_count, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("edge density must lie in [0, 1]");
  if (density > 0.0 && vertex_count < 3) throw std::invalid_argument("a positive density needs at least 3 vertices");
  SeededRng rng(seed);
  std::vector<HyperEdge> edges;
  for (Vertex x = 0; x < vertex_count; ++x) {
    for (Vertex y = x + 1; y < vertex_count; ++y) {
      if (!rng.chance(density)) continue;
      Vertex h = static_cast<Vertex>(rng.below(vertex_count - 2));
      if (h >= x) ++h;
      if (h >= y) ++h;
      edges.push_back(HyperEdge{{x, y, h}, h});
    }
  }
  return RootedHypergraph(vertex_count, std::move(edges), 1);
}

}  // namespace rhc
