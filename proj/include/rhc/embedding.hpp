#pragma once

#include "rhc/graph.hpp"
#include "rhc/vertex_set.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rhc {

class EmbeddingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The m largest-degree vertices, degree descending then id ascending.
inline std::vector<Vertex> top_degree_vertices(const Graph& g, std::size_t m) {
  std::vector<Vertex> order(g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Vertex>(i);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  order.resize(std::min(m, order.size()));
  return order;
}

/// A subgraph with maximum degree <= m and at least m^2/2 edges, given that
/// removing the m top-degree vertices leaves at least m^2 edges. Either
/// G - S itself, or m stars centred on s_1..s_m: step i joins s_i to the
/// m - i + 1 smallest ids of N(s_i) - {s_1..s_{i-1}}.
inline Graph embed_bounded_subgraph(const Graph& g, std::size_t m) {
  if (m == 0) throw EmbeddingError("m must be positive");
  if (g.vertex_count() < m) throw EmbeddingError("graph has fewer than m vertices");
  if (!g.is_simple()) throw EmbeddingError("embedding needs a simple graph");
  const auto top = top_degree_vertices(g, m);
  Graph rest = g.without(VertexSet::from(g.vertex_count(), top));
  if (rest.edge_count() < m * m)
    throw EmbeddingError("e(G - S) = " + std::to_string(rest.edge_count()) + " is below m^2 = " + std::to_string(m * m));
  if (rest.max_degree() <= m) return rest;

  std::vector<std::pair<Vertex, Vertex>> edges;
  VertexSet earlier(g.vertex_count());
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex centre = top[i];
    const std::size_t want = m - i;
    std::size_t taken = 0;
    for (Vertex v : g.neighbors(centre)) {  // ascending ids
      if (taken == want) break;
      if (earlier.contains(v)) continue;
      edges.emplace_back(std::min(centre, v), std::max(centre, v));
      ++taken;
    }
    if (taken < want) throw std::logic_error("star step ran out of neighbours");
    earlier.insert(centre);
  }
  return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace rhc
