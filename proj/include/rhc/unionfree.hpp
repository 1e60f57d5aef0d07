#pragma once

// Union-free families on the subset lattice P(n).
//
// The union hypergraph has one vertex per subset (vertex id == bitmask) and
// one edge {A, B, C} for every pair of distinct sets with A | B == C and C
// distinct from both, headed at C. A family is union-free exactly when it is
// an independent set of this hypergraph.

#include "rhc/entropy.hpp"
#include "rhc/hypergraph.hpp"
#include "rhc/rational.hpp"
#include "rhc/set_family.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace rhc {

inline constexpr unsigned max_union_hypergraph_n = 22;
inline constexpr unsigned max_census_n = 4;

inline RootedHypergraph build_union_hypergraph(unsigned n) {
  if (n < 1 || n > max_union_hypergraph_n)
    throw std::out_of_range("union hypergraph needs 1 <= n <= " + std::to_string(max_union_hypergraph_n));
  const Mask size = Mask{1} << n;
  std::vector<HyperEdge> edges;
  // incomparable unordered pairs: (4^n - 2*3^n + 2^n) / 2
  const double estimate = (std::pow(4.0, n) - 2.0 * std::pow(3.0, n) + std::pow(2.0, n)) / 2.0;
  edges.reserve(static_cast<std::size_t>(estimate));
  // a < b < a|b, so (a, b, a|b) is already the sorted triple and the loop
  // emits edges in canonical order
  for (Mask a = 0; a < size; ++a)
    for (Mask b = a + 1; b < size; ++b) {
      Mask c = a | b;
      if (c != a && c != b) edges.push_back(HyperEdge{{a, b, c}, c});
    }
  return RootedHypergraph(size, std::move(edges), 1);
}

/// No three distinct members with A | B == C.
inline bool is_union_free(const SetFamily& family) {
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      Mask c = m[i] | m[j];
      if (c != m[i] && c != m[j] && family.contains(c)) return false;
    }
  return true;
}

inline SetFamily middle_layer(unsigned n) {
  if (n < 1 || n > max_ground_size) throw std::out_of_range("middle layer needs 1 <= n <= 31");
  const unsigned k = n / 2;
  std::vector<Mask> members;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (set_size(static_cast<Mask>(m)) == k) members.push_back(static_cast<Mask>(m));
  return SetFamily(n, std::move(members));
}

inline VertexSet family_vertices(const SetFamily& family) {
  if (family.n() > max_union_hypergraph_n) throw std::out_of_range("family too large to address as vertices");
  VertexSet out(std::size_t{1} << family.n());
  for (Mask m : family) out.insert(m);
  return out;
}

/// Number of independent sets of h by include/exclude branching in vertex
/// order; an edge is checked once its largest vertex has been decided.
inline std::uint64_t count_independent_sets(const RootedHypergraph& h) {
  const std::size_t m = h.vertex_count();
  if (m > 40) throw std::out_of_range("independent-set count limited to 40 vertices");
  std::vector<std::vector<std::pair<Vertex, Vertex>>> closing(m);
  for (const auto& e : h.edges()) closing[e.vertices[2]].emplace_back(e.vertices[0], e.vertices[1]);
  std::vector<char> chosen(m, 0);
  auto count = [&](auto&& self, std::size_t v) -> std::uint64_t {
    if (v == m) return 1;
    std::uint64_t total = self(self, v + 1);
    bool blocked = false;
    for (auto [a, b] : closing[v])
      if (chosen[a] && chosen[b]) {
        blocked = true;
        break;
      }
    if (!blocked) {
      chosen[v] = 1;
      total += self(self, v + 1);
      chosen[v] = 0;
    }
    return total;
  };
  return count(count, 0);
}

namespace detail {

/// Family given as a bit pattern over the 2^n subsets: bit S set iff S in F.
inline bool union_free_pattern(std::uint64_t pattern, unsigned n) {
  const unsigned size = 1U << n;
  for (unsigned a = 0; a < size; ++a) {
    if (!((pattern >> a) & 1U)) continue;
    for (unsigned b = a + 1; b < size; ++b) {
      if (!((pattern >> b) & 1U)) continue;
      unsigned c = a | b;
      if (c != a && c != b && ((pattern >> c) & 1U)) return false;
    }
  }
  return true;
}

}  // namespace detail

/// alpha(n) by enumerating every family F of P(n) and testing the
/// definition directly. The family space is split into contiguous blocks,
/// one per thread; block counts are summed, so the total is independent of
/// the thread count.
inline std::uint64_t count_union_free(unsigned n, unsigned threads = 1) {
  if (n < 1 || n > max_census_n)
    throw std::out_of_range("exhaustive census supports 1 <= n <= " + std::to_string(max_census_n));
  const std::uint64_t families = std::uint64_t{1} << (1U << n);
  threads = std::max(1U, std::min<unsigned>(threads, 64));
  std::vector<std::uint64_t> partial(threads, 0);
  auto work = [&](unsigned w) {
    const std::uint64_t lo = families * w / threads;
    const std::uint64_t hi = families * (w + 1) / threads;
    for (std::uint64_t f = lo; f < hi; ++f)
      if (detail::union_free_pattern(f, n)) ++partial[w];
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::uint64_t total = 0;
  for (auto p : partial) total += p;
  return total;
}

struct AlphaReport {
  unsigned n = 0;
  double eps = 0;
  std::optional<std::uint64_t> alpha;  // exact, when n is small enough
  BigInt lower_exponent;               // C(n, floor(n/2)); alpha(n) >= 2^this
  double log2_count_term = 0;          // log2 of 10^44 eps^-3 (2^n / n) log2 n
  double log2_eps_middle = 0;          // log2 of eps * C(n, floor(n/2))
  double size_exponent = 0;            // (1 + 100 eps) C(n, floor(n/2))
  double upper_exponent = 0;           // (1 + 101 eps) C(n, floor(n/2))
  bool chain_holds = false;            // eps^2 n > 1 and count term <= eps C(n, floor(n/2))
  double crossover_log2_n = 0;         // log2 of the real n beyond which it always holds
  bool lower_bound_ok = true;          // alpha >= 2^lower_exponent, when alpha is known
};

namespace detail {

/// n - log2 C(n, floor(n/2)) for real n >= 1.
inline double central_binomial_deficit(double n) {
  if (n <= 1e6) {
    double k = std::floor(n / 2);
    double lnc = std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
    return n - lnc / std::log(2.0);
  }
  // ln C(n, n/2) = n ln 2 - ln(pi n / 2) / 2 - 1/(4n) + O(n^-3)
  return (0.5 * std::log(M_PI * n / 2) + 1.0 / (4 * n)) / std::log(2.0);
}

inline double central_binomial_deficit_log(double log2_n) {
  if (log2_n <= std::log2(1e6)) return central_binomial_deficit(std::exp2(log2_n));
  return 0.5 * (log2_n + std::log2(M_PI / 2));
}

/// log2(count term) - log2(eps C(n, floor(n/2))) as a function of x = log2 n.
inline double chain_gap(double log2_n, double eps) {
  return 44 * std::log2(10.0) - 4 * std::log2(eps) - log2_n + std::log2(log2_n) +
         central_binomial_deficit_log(log2_n);
}

}  // namespace detail

inline void check_alpha_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0 / 200)) throw std::domain_error("eps must satisfy 0 < eps < 1/200");
}

/// log2 of the smallest real n >= 8 from which the count term is at most
/// eps C(n, floor(n/2)); the gap is decreasing in n there.
inline double union_free_crossover_log2(double eps) {
  check_alpha_eps(eps);
  double lo = 3.0;  // n = 8
  double hi = 4.0;
  while (detail::chain_gap(hi, eps) > 0) hi *= 2;
  for (int i = 0; i < 200; ++i) {
    double mid = (lo + hi) / 2;
    if (detail::chain_gap(mid, eps) > 0) lo = mid;
    else hi = mid;
  }
  return hi;
}

inline AlphaReport alpha_bounds(unsigned n, double eps) {
  check_alpha_eps(eps);
  if (n < 1 || n > 100000) throw std::out_of_range("alpha bounds need 1 <= n <= 100000");
  AlphaReport out;
  out.n = n;
  out.eps = eps;
  out.lower_exponent = binomial(n, n / 2);
  const double middle_log2 = log2_big(out.lower_exponent);
  const double middle = out.lower_exponent.convert_to<double>();
  const double log2n = std::log2(static_cast<double>(n));
  out.log2_count_term = n == 1 ? -INFINITY
                               : 44 * std::log2(10.0) - 3 * std::log2(eps) + n - log2n + std::log2(log2n);
  out.log2_eps_middle = std::log2(eps) + middle_log2;
  out.size_exponent = (1 + 100 * eps) * middle;
  out.upper_exponent = (1 + 101 * eps) * middle;
  // below eps^2 n = 1 the logarithms feeding the count term are negative and
  // the chain says nothing, even where its last comparison is trivially true
  const bool in_regime = eps * eps * n > 1.0;
  out.chain_holds = in_regime && out.log2_count_term <= out.log2_eps_middle;
  out.crossover_log2_n = union_free_crossover_log2(eps);
  if (n <= max_census_n) {
    out.alpha = count_union_free(n);
    out.lower_bound_ok = BigInt(*out.alpha) >= (BigInt(1) << out.lower_exponent.convert_to<unsigned>());
  }
  return out;
}

}  // namespace rhc
