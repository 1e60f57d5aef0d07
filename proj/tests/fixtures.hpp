#pragma once

// Seeded run cases shared by the unit tests and the acceptance binary.

#include "oracles.hpp"

#include <string>
#include <vector>

namespace fixtures {

using namespace rhc;

/// A host on which the strict parameter profile (eps = 1/10, s = 100,
/// t = 8000, z = 40) produces a genuinely certified run.
///
/// Vertices 0..base-1 are plain; base+j is hub j. Hub j heads the edges
/// {x, x+d mod base, hub} for its four differences d = 4j+1..4j+4, so its
/// link graph is a union of four circulants: 4*base edges, max degree 8.
/// Distinct hubs use distinct differences, which keeps every plain pair in
/// at most one edge, i.e. the host is 1-rooted. The independent set holds
/// the first `hubs_in_set` hubs plus plain vertices spaced so that none of
/// their link pairs lie inside it.
struct HubFixture {
  RootedHypergraph h;
  VertexSet independent;
  Params params;
};

inline HubFixture hub_fixture(std::size_t base = 2000, std::size_t hubs = 249, std::size_t hubs_in_set = 6,
                              std::uint64_t seed = 1) {
  std::vector<HyperEdge> edges;
  for (std::size_t j = 0; j < hubs; ++j) {
    const auto hub = static_cast<Vertex>(base + j);
    for (std::size_t d = 4 * j + 1; d <= 4 * j + 4; ++d)
      for (std::size_t x = 0; x < base; ++x) {
        Vertex a = static_cast<Vertex>(x);
        Vertex b = static_cast<Vertex>((x + d) % base);
        if (a > b) std::swap(a, b);
        edges.push_back(HyperEdge{{a, b, hub}, hub});
      }
  }
  const std::size_t m = base + hubs;
  HubFixture f{RootedHypergraph(m, std::move(edges), 1), VertexSet(m), {}};
  const std::size_t reach = 4 * hubs_in_set;  // largest difference used by a hub in I
  SeededRng rng(seed);
  std::vector<Vertex> plain;
  for (std::size_t x = 0; x < base; ++x) {
    if (!rng.chance(0.5)) continue;
    bool clash = false;
    for (Vertex y : plain) {
      std::size_t gap = (x - y) % base;
      gap = std::min(gap, base - gap);
      if (gap >= 1 && gap <= reach) {
        clash = true;
        break;
      }
    }
    if (!clash) plain.push_back(static_cast<Vertex>(x));
  }
  for (Vertex v : plain) f.independent.insert(v);
  for (std::size_t j = 0; j < hubs_in_set; ++j) f.independent.insert(static_cast<Vertex>(base + j));
  f.params = Params::with_defaults(make_rational(1, 10), 100, 8000, 1, m);
  return f;
}

struct CaseOutcome {
  std::string label;
  std::vector<std::string> violations;  // unconditional invariants
  bool reconstructed = false;           // replay from (T, T') gave C
  bool certified = false;
  bool guarantee = false;
  std::size_t steps = 0;
};

struct RunCase {
  std::string label;
  RootedHypergraph h;
  VertexSet independent;
  Params params;
  RunOptions options;
};

/// Case `index` of the seeded property suite: mostly synthetic 1-rooted
/// hosts with M <= 60, the rest union hypergraphs with n <= 4; random
/// independent sets; random positive parameters in relaxed mode, with an
/// occasional strict-profile case.
inline RunCase make_case(std::uint64_t index) {
  SeededRng rng(0x5eed0000 + index);
  RunCase c;
  if (rng.below(5) == 0) {
    const unsigned n = 1 + static_cast<unsigned>(rng.below(4));
    c.h = build_union_hypergraph(n);
    c.label = "union n=" + std::to_string(n);
  } else {
    const std::size_t m = 5 + rng.below(56);
    const double density = 0.05 + 0.95 * rng.uniform();
    c.h = generate_synthetic_rooted(m, density, rng.next());
    c.label = "synthetic M=" + std::to_string(m);
  }
  c.independent = oracle::random_independent_set(c.h, rng, 0.2 + 0.8 * rng.uniform());
  c.options.mode = rng.below(3) == 0 ? EligibilityMode::greedy : EligibilityMode::exact;
  const std::size_t m = c.h.vertex_count();
  if (rng.below(20) == 0) {
    c.params = Params::with_defaults(make_rational(1, 10), 100, 8000, 1, m);
    c.options.relaxed = false;
    c.label += " strict";
  } else {
    static const Rational eps_choices[] = {make_rational(1, 20), make_rational(1, 10), make_rational(1, 4),
                                           make_rational(3, 10), make_rational(1, 2)};
    static const Rational s_choices[] = {1, make_rational(3, 2), 2, 3, 5};
    static const Rational z_choices[] = {make_rational(1, 2), 1, 2, 3, 5};
    c.params.eps = eps_choices[rng.below(5)];
    c.params.s = s_choices[rng.below(5)];
    c.params.t = Rational(1 + rng.below(10));
    c.params.N = Rational(1 + rng.below(5));
    c.params.M = m;
    c.params.tau = c.params.default_tau();
    c.params.z = z_choices[rng.below(5)];
    c.options.relaxed = true;
  }
  c.label += std::string(" ") + to_string(c.options.mode);
  return c;
}

inline CaseOutcome evaluate(const RunCase& c) {
  CaseOutcome out;
  out.label = c.label;
  RunOptions options = c.options;
  options.observer = [&](const StepView& view) {
    for (auto& v : step_invariant_violations(view, c.params.s, true)) out.violations.push_back(std::move(v));
  };
  auto run = run_container(c.h, c.independent, c.params, options);
  for (auto& v : run_invariant_violations(run, c.independent)) out.violations.push_back(std::move(v));
  RunOptions plain = c.options;
  out.reconstructed = reconstruct(c.h, run.T, run.T_prime, c.params, plain) == run.C;
  out.certified = run.certificate.certified();
  out.guarantee = run.size_guarantee_holds();
  out.steps = run.trace.size();
  return out;
}

}  // namespace fixtures
