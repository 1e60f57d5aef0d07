#pragma once

#include "rhc/graph.hpp"
#include "rhc/vertex_set.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rhc {

/// A 3-edge with its head. `vertices` is sorted ascending; `head` is one of them.
struct HyperEdge {
  std::array<Vertex, 3> vertices;
  Vertex head;

  /// The two vertices other than the head, ascending.
  std::pair<Vertex, Vertex> tail() const noexcept {
    if (vertices[0] == head) return {vertices[1], vertices[2]};
    if (vertices[1] == head) return {vertices[0], vertices[2]};
    return {vertices[0], vertices[1]};
  }

  bool contains(Vertex v) const noexcept {
    return vertices[0] == v || vertices[1] == v || vertices[2] == v;
  }

  friend auto operator<=>(const HyperEdge&, const HyperEdge&) = default;
  friend bool operator==(const HyperEdge&, const HyperEdge&) = default;
};

/// Raw edge as supplied by a caller: three vertices in any order plus a head.
struct EdgeSpec {
  Vertex u, v, w, head;
};

/// Rooted 3-uniform hypergraph with explicit per-edge heads.
///
/// Construction canonicalizes (sorted triple, then head) and drops duplicate
/// (triple, head) entries. One triple may carry several heads; each is its
/// own edge. Rootedness is not asserted here; see verify_rooted().
class RootedHypergraph {
 public:
  RootedHypergraph() = default;

  RootedHypergraph(std::size_t vertex_count, std::vector<HyperEdge> edges, unsigned r = 1)
      : vertex_count_(vertex_count), r_(r), edges_(std::move(edges)) {
    if (r_ == 0) throw std::invalid_argument("rootedness parameter r must be positive");
    for (auto& e : edges_) canonicalize(e);
    if (!std::is_sorted(edges_.begin(), edges_.end())) std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    build_head_index();
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  unsigned r() const noexcept { return r_; }
  std::span<const HyperEdge> edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Tails {u1,u2} of the edges headed at v, canonical order.
  std::span<const std::pair<Vertex, Vertex>> head_links(Vertex v) const {
    if (v >= vertex_count_) throw std::out_of_range("vertex outside hypergraph");
    return std::span<const std::pair<Vertex, Vertex>>(links_).subspan(head_offsets_[v],
                                                                      head_offsets_[v + 1] - head_offsets_[v]);
  }

  friend bool operator==(const RootedHypergraph& a, const RootedHypergraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.r_ == b.r_ && a.edges_ == b.edges_;
  }

 private:
  void canonicalize(HyperEdge& e) const {
    auto& vs = e.vertices;
    for (Vertex x : vs)
      if (x >= vertex_count_)
        throw std::out_of_range("vertex " + std::to_string(x) + " outside [0, " + std::to_string(vertex_count_) + ")");
    std::sort(vs.begin(), vs.end());
    if (vs[0] == vs[1] || vs[1] == vs[2]) throw std::invalid_argument("repeated vertex in a triple");
    if (!e.contains(e.head)) throw std::invalid_argument("head not in triple");
  }

  void build_head_index() {
    head_offsets_.assign(vertex_count_ + 1, 0);
    for (const auto& e : edges_) ++head_offsets_[e.head + 1];
    for (std::size_t i = 0; i < vertex_count_; ++i) head_offsets_[i + 1] += head_offsets_[i];
    links_.resize(edges_.size());
    std::vector<std::size_t> fill(head_offsets_.begin(), head_offsets_.end() - 1);
    for (const auto& e : edges_) links_[fill[e.head]++] = e.tail();
    for (std::size_t v = 0; v < vertex_count_; ++v) {
      auto first = links_.begin() + static_cast<std::ptrdiff_t>(head_offsets_[v]);
      auto last = links_.begin() + static_cast<std::ptrdiff_t>(head_offsets_[v + 1]);
      if (!std::is_sorted(first, last)) std::sort(first, last);
    }
  }

  std::size_t vertex_count_ = 0;
  unsigned r_ = 1;
  std::vector<HyperEdge> edges_;
  std::vector<std::size_t> head_offsets_{0};
  std::vector<std::pair<Vertex, Vertex>> links_;
};

inline RootedHypergraph build_hypergraph(std::size_t vertex_count, std::span<const EdgeSpec> edges, unsigned r = 1) {
  std::vector<HyperEdge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back(HyperEdge{{e.u, e.v, e.w}, e.head});
  return RootedHypergraph(vertex_count, std::move(out), r);
}

inline RootedHypergraph build_hypergraph(std::size_t vertex_count, std::initializer_list<EdgeSpec> edges,
                                         unsigned r = 1) {
  return build_hypergraph(vertex_count, std::span<const EdgeSpec>(edges.begin(), edges.size()), r);
}

struct RootednessViolation {
  std::pair<Vertex, Vertex> pair;
  std::vector<HyperEdge> edges;  // every edge containing the pair with head outside it
};

struct RootednessReport {
  bool rooted = true;
  std::size_t violating_pairs = 0;
  std::optional<RootednessViolation> witness;  // the lexicographically first violating pair
};

/// Checks that every pair {x,y} lies in at most r edges whose head is outside
/// the pair. The witness cites the smallest violating pair.
inline RootednessReport verify_rooted(const RootedHypergraph& h, unsigned r) {
  const auto edges = h.edges();
  std::vector<std::uint64_t> keys;
  keys.reserve(edges.size());
  const std::uint64_t base = h.vertex_count();
  for (const auto& e : edges) {
    auto [a, b] = e.tail();
    keys.push_back(std::uint64_t{a} * base + b);
  }
  std::sort(keys.begin(), keys.end());

  RootednessReport report;
  std::optional<std::uint64_t> first_bad;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    if (j - i > r) {
      ++report.violating_pairs;
      if (!first_bad) first_bad = keys[i];
    }
    i = j;
  }
  if (first_bad) {
    report.rooted = false;
    RootednessViolation violation;
    violation.pair = {static_cast<Vertex>(*first_bad / base), static_cast<Vertex>(*first_bad % base)};
    for (const auto& e : edges)
      if (e.tail() == violation.pair) violation.edges.push_back(e);
    report.witness = std::move(violation);
  }
  return report;
}

inline RootednessReport verify_rooted(const RootedHypergraph& h) { return verify_rooted(h, h.r()); }

inline std::size_t head_degree(const RootedHypergraph& h, Vertex v) { return h.head_links(v).size(); }

/// Head link-graph of v restricted to A: {u1,u2} for every edge {v,u1,u2}
/// headed at v with u1, u2 in A. Lives on the full vertex range.
inline Graph head_link_graph(const RootedHypergraph& h, Vertex v, const VertexSet& available) {
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (const auto& [a, b] : h.head_links(v))
    if (available.contains(a) && available.contains(b)) kept.emplace_back(a, b);
  return Graph(h.vertex_count(), std::move(kept));
}

inline Graph head_link_graph(const RootedHypergraph& h, Vertex v) {
  return head_link_graph(h, v, VertexSet::full(h.vertex_count()));
}

/// H[A] relabelled onto [0, |A|) in ascending order; labels[i] is the
/// original id of local vertex i.
struct Subhypergraph {
  RootedHypergraph hypergraph;
  std::vector<Vertex> labels;
};

inline Subhypergraph induced(const RootedHypergraph& h, const VertexSet& keep) {
  if (keep.universe() != h.vertex_count()) throw std::invalid_argument("vertex set universe mismatch");
  constexpr Vertex absent = ~Vertex{0};
  std::vector<Vertex> local(h.vertex_count(), absent);
  std::vector<Vertex> labels;
  for (Vertex v : keep) {
    local[v] = static_cast<Vertex>(labels.size());
    labels.push_back(v);
  }
  std::vector<HyperEdge> edges;
  for (const auto& e : h.edges()) {
    if (local[e.vertices[0]] == absent || local[e.vertices[1]] == absent || local[e.vertices[2]] == absent) continue;
    // the relabelling is monotone, so the triple stays sorted
    edges.push_back(HyperEdge{{local[e.vertices[0]], local[e.vertices[1]], local[e.vertices[2]]}, local[e.head]});
  }
  return {RootedHypergraph(labels.size(), std::move(edges), h.r()), std::move(labels)};
}

/// True iff no edge has all three vertices in X.
inline bool is_independent(const RootedHypergraph& h, const VertexSet& x) {
  for (const auto& e : h.edges())
    if (x.contains(e.vertices[0]) && x.contains(e.vertices[1]) && x.contains(e.vertices[2])) return false;
  return true;
}

}  // namespace rhc
