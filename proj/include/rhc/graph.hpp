#pragma once

#include "rhc/vertex_set.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rhc {

/// Undirected multigraph on the dense vertex range [0, vertex_count).
///
/// Edges are kept in canonical order: each edge is stored as (u, v) with
/// u < v, sorted lexicographically, with parallel copies folded into a
/// multiplicity count. The canonical edge order is also the tie-break order
/// used whenever an algorithm scans "the edges of G".
class Graph {
 public:
  struct Edge {
    Vertex u;
    Vertex v;
    std::uint32_t multiplicity;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  Graph() = default;

  explicit Graph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges = {})
      : vertex_count_(vertex_count) {
    for (auto& [a, b] : edges) {
      if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
      if (a >= vertex_count || b >= vertex_count)
        throw std::out_of_range("edge endpoint outside [0, " + std::to_string(vertex_count) + ")");
      if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) {
      if (!edges_.empty() && edges_.back().u == a && edges_.back().v == b) ++edges_.back().multiplicity;
      else edges_.push_back({a, b, 1});
    }
    build_adjacency();
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }

  /// Distinct edges in canonical order.
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Number of edges counted with multiplicity.
  std::size_t edge_count() const noexcept { return total_edges_; }
  std::size_t distinct_edge_count() const noexcept { return edges_.size(); }

  /// Degree counted with multiplicity.
  std::size_t degree(Vertex v) const { return degree_.at(v); }

  /// Distinct neighbours of v, ascending.
  std::span<const Vertex> neighbors(Vertex v) const {
    if (v >= vertex_count_) throw std::out_of_range("vertex outside graph");
    return std::span<const Vertex>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
  }

  std::size_t max_degree() const noexcept {
    return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
  }

  bool is_simple() const noexcept {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.multiplicity == 1; });
  }

  bool has_edge(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{a, b},
                               [](const Edge& e, const std::pair<Vertex, Vertex>& key) {
                                 return std::pair{e.u, e.v} < key;
                               });
    return it != edges_.end() && it->u == a && it->v == b;
  }

  /// Vertices with at least one incident edge.
  VertexSet support() const {
    VertexSet out(vertex_count_);
    for (const auto& e : edges_) {
      out.insert(e.u);
      out.insert(e.v);
    }
    return out;
  }

  /// Same vertex range, keeping only edges with both ends in `keep`.
  Graph restricted_to(const VertexSet& keep) const {
    std::vector<std::pair<Vertex, Vertex>> kept;
    for (const auto& e : edges_)
      if (keep.contains(e.u) && keep.contains(e.v))
        for (std::uint32_t i = 0; i < e.multiplicity; ++i) kept.emplace_back(e.u, e.v);
    return Graph(vertex_count_, std::move(kept));
  }

  /// Same vertex range with every edge touching `removed` deleted.
  Graph without(const VertexSet& removed) const {
    return restricted_to(VertexSet::full(vertex_count_) - removed);
  }

  /// Edge list with parallel copies expanded, canonical order.
  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(total_edges_);
    for (const auto& e : edges_)
      for (std::uint32_t i = 0; i < e.multiplicity; ++i) out.emplace_back(e.u, e.v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency() {
    degree_.assign(vertex_count_, 0);
    offsets_.assign(vertex_count_ + 1, 0);
    total_edges_ = 0;
    for (const auto& e : edges_) {
      degree_[e.u] += e.multiplicity;
      degree_[e.v] += e.multiplicity;
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
      total_edges_ += e.multiplicity;
    }
    for (std::size_t i = 0; i < vertex_count_; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.assign(offsets_.back(), 0);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
      adjacency_[fill[e.u]++] = e.v;
      adjacency_[fill[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < vertex_count_; ++v)
      std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::size_t total_edges_ = 0;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/// A graph together with the external label of each vertex id.
struct LabeledGraph {
  Graph graph;
  std::vector<std::uint64_t> labels;
};

}  // namespace rhc
