#pragma once

#include "rhc/eligibility.hpp"
#include "rhc/graph.hpp"
#include "rhc/rational.hpp"
#include "rhc/set_family.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace rhc {

/// Layer thresholds and eligibility target of the supersaturation argument.
/// log is base 2.
struct SupersatConfig {
  Rational eps;
  unsigned n = 0;
  double delta = 0;   // n/2 - sqrt(n log n)
  double delta1 = 0;  // n/2 - sqrt(n log n) / 2
  double delta2 = 0;  // n/2 + sqrt(n log n) / 2
  Rational s;         // n
  Rational t;         // eps^2 n^2 / 10^40
};

inline SupersatConfig supersat_config(const Rational& eps, unsigned n) {
  if (n < 2) throw std::invalid_argument("supersaturation thresholds need n >= 2");
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  SupersatConfig c;
  c.eps = eps;
  c.n = n;
  const double root = std::sqrt(n * std::log2(static_cast<double>(n)));
  c.delta = n / 2.0 - root;
  c.delta1 = n / 2.0 - root / 2;
  c.delta2 = n / 2.0 + root / 2;
  c.s = n;
  c.t = eps * eps * n * n / Rational(boost::multiprecision::pow(BigInt(10), 40));
  return c;
}

/// B_k(A) within F: members B subset of A with |A - B| = k, as vertices in
/// ascending mask order, joined when B1 | B2 == A.
inline LabeledGraph union_pair_graph(const SetFamily& family, Mask a, unsigned k) {
  if (family.n() < max_ground_size && (a >> family.n()) != 0) throw std::out_of_range("set outside P(n)");
  std::vector<Mask> layer;
  for (Mask b : family)
    if ((b & ~a) == 0 && set_size(a & ~b) == k) layer.push_back(b);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < layer.size(); ++i)
    for (std::size_t j = i + 1; j < layer.size(); ++j)
      if ((layer[i] | layer[j]) == a) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  LabeledGraph out{Graph(layer.size(), std::move(edges)), {}};
  out.labels.assign(layer.begin(), layer.end());
  return out;
}

/// Head link graph of A inside F on the union hypergraph: pairs of proper
/// subsets of A in F whose union is A.
inline LabeledGraph union_link_graph(const SetFamily& family, Mask a) {
  std::vector<Mask> below;
  for (Mask b : family)
    if (b != a && (b & ~a) == 0) below.push_back(b);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < below.size(); ++i)
    for (std::size_t j = i + 1; j < below.size(); ++j)
      if ((below[i] | below[j]) == a) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  LabeledGraph out{Graph(below.size(), std::move(edges)), {}};
  out.labels.assign(below.begin(), below.end());
  return out;
}

struct SupersatWitness {
  Mask set = 0;
  LabeledGraph subgraph;  // vertices labelled by member masks
  std::size_t edge_count = 0;
  std::size_t max_degree = 0;
};

/// First member of F (ascending mask) whose link graph inside F has a
/// subgraph with max degree <= s and >= t edges. Defaults: s = n,
/// t = eps^2 n^2 / 10^40.
inline std::optional<SupersatWitness> eligibility_from_supersat(const SetFamily& family, const Rational& eps,
                                                                std::optional<Rational> s = std::nullopt,
                                                                std::optional<Rational> t = std::nullopt,
                                                                EligibilityMode mode = EligibilityMode::exact) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  const Rational s_value = s ? *s : Rational(family.n());
  const Rational t_value = t ? *t : supersat_config(eps, std::max(family.n(), 2U)).t;
  for (Mask a : family) {
    auto link = union_link_graph(family, a);
    auto found = bounded_witness(link.graph, s_value, t_value, mode);
    if (!found) continue;
    SupersatWitness w;
    w.set = a;
    w.edge_count = found->edge_count();
    w.max_degree = found->max_degree();
    w.subgraph = LabeledGraph{std::move(*found), std::move(link.labels)};
    return w;
  }
  return std::nullopt;
}

}  // namespace rhc
