#pragma once

#include "rhc/bounded_subgraph.hpp"
#include "rhc/graph.hpp"
#include "rhc/hypergraph.hpp"
#include "rhc/rational.hpp"
#include "rhc/vertex_set.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rhc {

enum class EligibilityMode { exact, greedy };

inline const char* to_string(EligibilityMode mode) { return mode == EligibilityMode::exact ? "exact" : "greedy"; }

inline EligibilityMode parse_mode(const std::string& text) {
  if (text == "exact") return EligibilityMode::exact;
  if (text == "greedy") return EligibilityMode::greedy;
  throw std::invalid_argument("eligibility mode must be 'exact' or 'greedy', got '" + text + "'");
}

struct EligibilityWitness {
  Vertex vertex = 0;
  Graph subgraph;
  std::size_t edge_count = 0;
  std::size_t max_degree = 0;
};

/// A subgraph of `link` with max degree <= s and >= t edges, if one exists
/// under the given mode. The canonical greedy subgraph is preferred; exact
/// mode falls back to the maximum bounded subgraph.
inline std::optional<Graph> bounded_witness(const Graph& link, const Rational& s, const Rational& t,
                                            EligibilityMode mode) {
  if (t <= 0) return Graph(link.vertex_count());
  if (Rational(link.edge_count()) < t) return std::nullopt;
  const std::size_t cap = floor_clamped(s, link.edge_count());
  if (cap == 0) return std::nullopt;
  Graph greedy = greedy_bounded_subgraph(link, cap);
  if (Rational(greedy.edge_count()) >= t) return greedy;
  if (mode == EligibilityMode::greedy) return std::nullopt;
  // sum of capped degrees / 2 bounds every solution from above
  std::size_t capped = 0;
  for (std::size_t v = 0; v < link.vertex_count(); ++v) capped += std::min(cap, link.degree(static_cast<Vertex>(v)));
  if (Rational(capped / 2) < t) return std::nullopt;
  auto exact = max_bounded_subgraph(link, cap);
  if (Rational(exact.edge_count) >= t) return std::move(exact.witness);
  return std::nullopt;
}

struct EligibilityResult {
  bool eligible = false;
  std::optional<EligibilityWitness> witness;
};

inline EligibilityWitness make_witness(Vertex v, Graph subgraph) {
  EligibilityWitness w;
  w.vertex = v;
  w.edge_count = subgraph.edge_count();
  w.max_degree = subgraph.max_degree();
  w.subgraph = std::move(subgraph);
  return w;
}

/// Whether v is (A, s, t)-eligible: its head link-graph inside A has a
/// subgraph with max degree <= s and at least t edges.
inline EligibilityResult is_eligible(const RootedHypergraph& h, const VertexSet& available, Vertex v,
                                     const Rational& s, const Rational& t, EligibilityMode mode) {
  if (!available.contains(v)) throw std::invalid_argument("eligibility asked for a vertex outside A");
  auto found = bounded_witness(head_link_graph(h, v, available), s, t, mode);
  if (!found) return {};
  return {true, make_witness(v, std::move(*found))};
}

/// The eligible vertex of A with the largest head-link edge count inside A,
/// ties to the smallest id, together with that edge count and its witness.
struct EligibleChoice {
  EligibilityWitness witness;
  std::size_t link_degree = 0;
};

inline std::optional<EligibleChoice> find_max_degree_eligible(const RootedHypergraph& h, const VertexSet& available,
                                                              const Rational& s, const Rational& t,
                                                              EligibilityMode mode) {
  struct Candidate {
    Vertex v;
    std::size_t degree;
  };
  std::vector<Candidate> candidates;
  for (Vertex v : available) {
    std::size_t degree = 0;
    for (const auto& [a, b] : h.head_links(v))
      if (available.contains(a) && available.contains(b)) ++degree;
    if (Rational(degree) >= t) candidates.push_back({v, degree});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& x, const Candidate& y) { return x.degree > y.degree; });
  for (const auto& c : candidates) {
    auto found = bounded_witness(head_link_graph(h, c.v, available), s, t, mode);
    if (found) return EligibleChoice{make_witness(c.v, std::move(*found)), c.degree};
  }
  return std::nullopt;
}

/// True iff A contains no (A, s, t)-eligible vertex.
inline bool is_core(const RootedHypergraph& h, const VertexSet& available, const Rational& s, const Rational& t,
                    EligibilityMode mode) {
  return !find_max_degree_eligible(h, available, s, t, mode).has_value();
}

}  // namespace rhc
