#pragma once

// Kneser graphs, adjacency spectra and the expander mixing lower bound
//   e(G[S]) >= D|S|^2 / (2N) + lambda |S| (N - |S|) / (2N)
// for a D-regular graph on N vertices with minimum eigenvalue lambda.

#include "rhc/entropy.hpp"
#include "rhc/graph.hpp"
#include "rhc/rng.hpp"
#include "rhc/set_family.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rhc {

inline constexpr std::size_t max_kneser_vertices = 10000;
inline constexpr std::size_t max_eigen_vertices = 1000;
inline constexpr std::size_t max_exhaustive_eml_vertices = 20;
inline constexpr double eml_tolerance = 1e-6;

/// k-subsets of {0..m-1} as sorted index lists, in lexicographic order.
/// Vertex i of kneser_graph(m, k) is the i-th entry.
inline std::vector<std::vector<unsigned>> kneser_subsets(unsigned m, unsigned k) {
  if (k < 1 || 2 * k > m) throw std::invalid_argument("Kneser graph needs 1 <= k and 2k <= m");
  if (binomial(m, k) > max_kneser_vertices)
    throw std::out_of_range("Kneser graph exceeds " + std::to_string(max_kneser_vertices) + " vertices");
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current(k);
  for (unsigned i = 0; i < k; ++i) current[i] = i;
  for (;;) {
    out.push_back(current);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && current[static_cast<unsigned>(i)] == m - k + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++current[static_cast<unsigned>(i)];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

/// Bitmask labels (bit e = element e), for m <= 31.
inline std::vector<Mask> kneser_labels(unsigned m, unsigned k) {
  if (m > max_ground_size) throw std::out_of_range("mask labels need m <= 31");
  std::vector<Mask> out;
  for (const auto& subset : kneser_subsets(m, k)) {
    Mask x = 0;
    for (unsigned e : subset) x |= Mask{1} << e;
    out.push_back(x);
  }
  return out;
}

inline Graph kneser_graph(unsigned m, unsigned k) {
  const auto subsets = kneser_subsets(m, k);
  auto disjoint = [](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return false;
      if (a[i] < b[j]) ++i;
      else ++j;
    }
    return true;
  };
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j)
      if (disjoint(subsets[i], subsets[j])) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(subsets.size(), std::move(edges));
}

struct KneserStats {
  unsigned m = 0, k = 0;
  std::uint64_t N = 0;  // C(m, k)
  std::uint64_t D = 0;  // C(m-k, k)
  double lambda_formula = 0;  // -k D / (m - k)
};

inline KneserStats kneser_stats(unsigned m, unsigned k) {
  if (k < 1 || 2 * k > m) throw std::invalid_argument("Kneser graph needs 1 <= k and 2k <= m");
  KneserStats s;
  s.m = m;
  s.k = k;
  s.N = binomial(m, k).convert_to<std::uint64_t>();
  s.D = binomial(m - k, k).convert_to<std::uint64_t>();
  s.lambda_formula = -static_cast<double>(k) * static_cast<double>(s.D) / static_cast<double>(m - k);
  return s;
}

inline Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    a(e.u, e.v) += e.multiplicity;
    a(e.v, e.u) += e.multiplicity;
  }
  return a;
}

inline double min_eigenvalue(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("spectrum of the empty graph");
  if (g.vertex_count() > max_eigen_vertices)
    throw std::out_of_range("eigensolve limited to " + std::to_string(max_eigen_vertices) + " vertices");
  // The symmetric QR iteration can stall on some integer adjacency matrices;
  // a shift by c I moves the spectrum by c and usually unsticks it.
  const Eigen::MatrixXd a = adjacency_matrix(g);
  const auto identity = Eigen::MatrixXd::Identity(a.rows(), a.cols());
  for (double shift : {0.0, 0.5, 1.0 / 3, 0.7}) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a + shift * identity, Eigen::EigenvaluesOnly);
    if (solver.info() == Eigen::Success) return solver.eigenvalues()(0) - shift;
  }
  throw std::runtime_error("eigensolver did not converge");
}

/// Common degree, or throws if g is not regular.
inline std::size_t regular_degree(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  const std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) throw std::invalid_argument("graph is not regular");
  return d;
}

inline double eml_lower_bound(double D, double N, double lambda, double size) {
  if (N <= 0) throw std::invalid_argument("mixing bound needs N > 0");
  if (size < 0 || size > N) throw std::invalid_argument("subset size must lie in [0, N]");
  return D / (2 * N) * size * size + lambda / (2 * N) * size * (N - size);
}

struct EmlCheck {
  bool holds = true;
  std::size_t subsets_checked = 0;
  double worst_slack = std::numeric_limits<double>::infinity();  // min of e(G[S]) - bound
  std::vector<Vertex> worst_subset;
};

namespace detail {

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> out(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    if (e.multiplicity != 1) throw std::invalid_argument("mixing check needs a simple graph");
    out[e.u] |= std::uint64_t{1} << e.v;
    out[e.v] |= std::uint64_t{1} << e.u;
  }
  return out;
}

inline void record_slack(EmlCheck& check, double slack, const std::vector<Vertex>& subset) {
  ++check.subsets_checked;
  if (slack < check.worst_slack) {
    check.worst_slack = slack;
    check.worst_subset = subset;
  }
  if (slack < -eml_tolerance) check.holds = false;
}

}  // namespace detail

/// Every subset of a graph with at most 20 vertices.
inline EmlCheck verify_eml_exhaustive(const Graph& g, double D, double lambda) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("mixing check on the empty graph");
  if (n > max_exhaustive_eml_vertices)
    throw std::out_of_range("exhaustive mixing check limited to " + std::to_string(max_exhaustive_eml_vertices) +
                            " vertices; use the sampled check");
  const auto adj = detail::adjacency_masks(g);
  EmlCheck check;
  std::vector<Vertex> subset;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::size_t twice = 0;
    subset.clear();
    for (std::size_t v = 0; v < n; ++v)
      if ((s >> v) & 1U) {
        twice += static_cast<std::size_t>(std::popcount(adj[v] & s));
        subset.push_back(static_cast<Vertex>(v));
      }
    const double bound = eml_lower_bound(D, static_cast<double>(n), lambda, static_cast<double>(subset.size()));
    detail::record_slack(check, static_cast<double>(twice / 2) - bound, subset);
  }
  return check;
}

/// Random subsets: a uniform size, then a uniform subset of that size.
inline EmlCheck verify_eml_sampled(const Graph& g, double D, double lambda, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("mixing check on the empty graph");
  SeededRng rng(seed);
  EmlCheck check;
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  for (std::size_t sample = 0; sample < samples; ++sample) {
    const std::size_t size = rng.below(n + 1);
    rng.shuffle(order);
    std::vector<Vertex> subset(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(subset.begin(), subset.end());
    auto keep = VertexSet::from(n, subset);
    const double induced_edges = static_cast<double>(g.restricted_to(keep).edge_count());
    detail::record_slack(check, induced_edges - eml_lower_bound(D, static_cast<double>(n), lambda, static_cast<double>(size)),
                         subset);
  }
  return check;
}

/// Lower bound on the edges induced by `size` vertices of KG(m, k), valid
/// once size = (1 + beta) C(m-1, k-1) with beta > 0.
inline double kneser_induced_bound(unsigned m, unsigned k, std::size_t size) {
  const auto stats = kneser_stats(m, k);
  const double star = binomial(m - 1, k - 1).convert_to<double>();
  const double ratio = static_cast<double>(size) / star;  // 1 + beta
  if (!(ratio > 1.0))
    throw std::domain_error("family of size " + std::to_string(size) + " does not exceed C(m-1, k-1) = " +
                            std::to_string(static_cast<std::uint64_t>(star)) + "; beta <= 0");
  const double pairs = static_cast<double>(size) * static_cast<double>(size - 1) / 2;
  return (1 - 1 / ratio) * static_cast<double>(stats.D) * m / (static_cast<double>(stats.N) * (m - k)) * pairs;
}

/// Simple d-regular graph on n vertices. Points of the configuration model
/// are paired one random pair at a time, skipping pairs that would make a
/// loop or a repeated edge; a dead end restarts the whole pairing.
inline Graph random_regular_graph(std::size_t n, std::size_t d, std::uint64_t seed, std::size_t max_attempts = 1000) {
  if (d >= n || (n * d) % 2 != 0) throw std::invalid_argument("no simple d-regular graph on n vertices");
  SeededRng rng(seed);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Vertex> points;
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t i = 0; i < d; ++i) points.push_back(static_cast<Vertex>(v));
    std::set<std::pair<Vertex, Vertex>> edges;
    bool stuck = false;
    while (!points.empty() && !stuck) {
      stuck = true;
      for (std::size_t tries = 0; tries < 50 * points.size(); ++tries) {
        const std::size_t i = rng.below(points.size());
        const std::size_t j = rng.below(points.size());
        const Vertex a = std::min(points[i], points[j]);
        const Vertex b = std::max(points[i], points[j]);
        if (a == b || edges.count({a, b})) continue;
        edges.insert({a, b});
        // remove the larger index first so the smaller stays valid
        for (std::size_t k : {std::max(i, j), std::min(i, j)}) {
          points[k] = points.back();
          points.pop_back();
        }
        stuck = false;
        break;
      }
    }
    if (!stuck) return Graph(n, std::vector<std::pair<Vertex, Vertex>>(edges.begin(), edges.end()));
  }
  throw std::runtime_error("no simple regular graph found; try another seed");
}

}  // namespace rhc
