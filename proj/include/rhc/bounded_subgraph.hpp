#pragma once

// Largest subgraphs of maximum degree <= s.
//
// greedy_bounded_subgraph is the canonical scan used as the first-choice
// witness. max_bounded_subgraph solves the problem exactly: it is a
// b-matching with uniform capacity, reduced to ordinary maximum matching by
// the usual gadget (each edge uv becomes a path e_u - e_v, e_u joined to the
// copies of u, e_v to the copies of v) and solved with Edmonds' blossom
// algorithm seeded from the greedy solution. Everything is deterministic:
// vertex and edge scans follow ascending ids and canonical edge order.

#include "rhc/graph.hpp"
#include "rhc/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rhc {

namespace detail {

inline std::size_t degree_cap(const Rational& s) {
  if (s < 1) throw std::invalid_argument("degree bound s must be at least 1");
  return floor_clamped(s, static_cast<std::size_t>(1) << 40);
}

/// Edmonds' blossom algorithm on a simple undirected graph given as sorted
/// adjacency lists. O(V^3) per full run; augments only from free vertices
/// of the supplied initial matching.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(std::vector<std::vector<int>> adjacency)
      : n_(static_cast<int>(adjacency.size())), adj_(std::move(adjacency)), match_(n_, -1) {}

  void seed(int a, int b) {
    match_[a] = b;
    match_[b] = a;
  }

  void solve() {
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      int v = find_path(root);
      while (v != -1) {
        int pv = parent_[v];
        int ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
      }
    }
  }

  int mate(int v) const { return match_[v]; }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = 1;
      blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    used_.assign(n_, 0);
    parent_.assign(n_, -1);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    queue_.clear();
    used_[root] = 1;
    queue_.push_back(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      int v = queue_[head];
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int current = lca(v, to);
          blossom_.assign(n_, 0);
          mark_path(v, current, to);
          mark_path(to, current, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = current;
              if (!used_[i]) {
                used_[i] = 1;
                queue_.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue_.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
  std::vector<int> queue_;
};

/// Greedy scan over an expanded edge list; returns the kept flags.
inline std::vector<char> greedy_keep(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges,
                                     std::size_t cap) {
  std::vector<std::size_t> kept_degree(vertex_count, 0);
  std::vector<char> keep(edges.size(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    if (kept_degree[a] < cap && kept_degree[b] < cap) {
      keep[i] = 1;
      ++kept_degree[a];
      ++kept_degree[b];
    }
  }
  return keep;
}

}  // namespace detail

/// Scans the edges of g in canonical order and keeps an edge iff both ends
/// still have kept-degree below the cap. Maximal for the scan order.
inline Graph greedy_bounded_subgraph(const Graph& g, std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("degree bound s must be at least 1");
  auto edges = g.edge_pairs();
  auto keep = detail::greedy_keep(g.vertex_count(), edges, cap);
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (keep[i]) out.push_back(edges[i]);
  return Graph(g.vertex_count(), std::move(out));
}

inline Graph greedy_bounded_subgraph(const Graph& g, const Rational& s) {
  return greedy_bounded_subgraph(g, detail::degree_cap(s));
}

/// Maximum subgraph with all degrees <= cap, with a witness.
struct BoundedSubgraph {
  std::size_t edge_count = 0;
  Graph witness;
};

inline BoundedSubgraph max_bounded_subgraph(const Graph& g, std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("degree bound s must be at least 1");
  const auto edges = g.edge_pairs();
  const std::size_t n = g.vertex_count();
  const std::size_t m = edges.size();

  // copies of vertex v occupy [copy_offset[v], copy_offset[v] + copies(v))
  std::vector<std::size_t> copy_offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) copy_offset[v + 1] = copy_offset[v] + std::min(cap, g.degree(static_cast<Vertex>(v)));
  const std::size_t copies = copy_offset[n];
  const std::size_t total = copies + 2 * m;
  auto edge_end = [&](std::size_t i, int side) { return static_cast<int>(copies + 2 * i + static_cast<std::size_t>(side)); };

  std::vector<std::vector<int>> adjacency(total);
  for (std::size_t i = 0; i < m; ++i) {
    auto [a, b] = edges[i];
    int ea = edge_end(i, 0);
    int eb = edge_end(i, 1);
    adjacency[ea].push_back(eb);
    adjacency[eb].push_back(ea);
    for (std::size_t c = copy_offset[a]; c < copy_offset[a + 1]; ++c) {
      adjacency[ea].push_back(static_cast<int>(c));
      adjacency[c].push_back(ea);
    }
    for (std::size_t c = copy_offset[b]; c < copy_offset[b + 1]; ++c) {
      adjacency[eb].push_back(static_cast<int>(c));
      adjacency[c].push_back(eb);
    }
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());

  detail::BlossomMatcher matcher(std::move(adjacency));
  auto keep = detail::greedy_keep(n, edges, cap);
  std::vector<std::size_t> used_copies(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    auto [a, b] = edges[i];
    if (keep[i]) {
      matcher.seed(edge_end(i, 0), static_cast<int>(copy_offset[a] + used_copies[a]++));
      matcher.seed(edge_end(i, 1), static_cast<int>(copy_offset[b] + used_copies[b]++));
    } else {
      matcher.seed(edge_end(i, 0), edge_end(i, 1));
    }
  }
  matcher.solve();

  std::vector<std::pair<Vertex, Vertex>> chosen;
  for (std::size_t i = 0; i < m; ++i) {
    int ma = matcher.mate(edge_end(i, 0));
    int mb = matcher.mate(edge_end(i, 1));
    bool a_to_copy = ma != -1 && static_cast<std::size_t>(ma) < copies;
    bool b_to_copy = mb != -1 && static_cast<std::size_t>(mb) < copies;
    if (a_to_copy && b_to_copy) chosen.push_back(edges[i]);
  }
  BoundedSubgraph out;
  out.edge_count = chosen.size();
  out.witness = Graph(n, std::move(chosen));
  return out;
}

inline BoundedSubgraph max_bounded_subgraph(const Graph& g, const Rational& s) {
  return max_bounded_subgraph(g, detail::degree_cap(s));
}

inline std::size_t max_bounded_subgraph_edges(const Graph& g, const Rational& s) {
  return max_bounded_subgraph(g, s).edge_count;
}

inline std::size_t max_bounded_subgraph_edges(const Graph& g, std::size_t cap) {
  return max_bounded_subgraph(g, cap).edge_count;
}

}  // namespace rhc
