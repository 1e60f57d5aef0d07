#pragma once

// Two-phase container construction for rooted 3-uniform hypergraphs.
//
// Phase I repeatedly picks the eligible vertex of A \ S with the largest
// head-link edge count inside A \ S (ties: smallest id). Vertices outside I
// are discarded; vertices of I go to the fingerprint T and donate their
// witness subgraph to the link multigraph L. Phase I stops when |A| has
// dropped to (1 - eps)|V| or A \ S is a core. Phase II then repeatedly takes
// the max-degree vertex of L (ties: smallest id) until that degree is below
// z, discarding it if it is outside I and otherwise recording it in T' and
// discarding its whole L-neighbourhood.
//
// The only information about I ever consulted is "is v in I?" for the
// chosen v, which is exactly what the fingerprints answer; reconstruct()
// replays the run with T and T' as the oracle.

#include "rhc/eligibility.hpp"
#include "rhc/graph.hpp"
#include "rhc/hypergraph.hpp"
#include "rhc/params.hpp"
#include "rhc/rational.hpp"
#include "rhc/vertex_set.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rhc {

/// The link multigraph L built during Phase I.
class LinkMultigraph {
 public:
  explicit LinkMultigraph(std::size_t vertex_count) : adjacency_(vertex_count), degree_(vertex_count, 0) {}

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Degree with multiplicity.
  std::size_t degree(Vertex v) const { return degree_.at(v); }
  /// |N_L(v)|, distinct neighbours.
  std::size_t neighbor_count(Vertex v) const { return adjacency_.at(v).size(); }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const auto& [u, mult] : adjacency_.at(v)) out.push_back(u);
    return out;
  }

  void add(const Graph& g) {
    for (const auto& e : g.edges()) {
      adjacency_[e.u][e.v] += e.multiplicity;
      adjacency_[e.v][e.u] += e.multiplicity;
      degree_[e.u] += e.multiplicity;
      degree_[e.v] += e.multiplicity;
      edge_count_ += e.multiplicity;
    }
  }

  void remove_vertex(Vertex v) {
    for (const auto& [u, mult] : adjacency_[v]) {
      adjacency_[u].erase(v);
      degree_[u] -= mult;
      edge_count_ -= mult;
    }
    adjacency_[v].clear();
    degree_[v] = 0;
  }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (auto d : degree_) best = std::max(best, d);
    return best;
  }

  bool is_simple() const {
    for (const auto& row : adjacency_)
      for (const auto& [u, mult] : row)
        if (mult > 1) return false;
    return true;
  }

  /// Vertices with at least one incident edge.
  VertexSet support() const {
    VertexSet out(adjacency_.size());
    for (std::size_t v = 0; v < adjacency_.size(); ++v)
      if (degree_[v] > 0) out.insert(static_cast<Vertex>(v));
    return out;
  }

  Graph to_graph() const {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t v = 0; v < adjacency_.size(); ++v)
      for (const auto& [u, mult] : adjacency_[v])
        if (u > v)
          for (std::uint32_t i = 0; i < mult; ++i) edges.emplace_back(static_cast<Vertex>(v), u);
    return Graph(adjacency_.size(), std::move(edges));
  }

 private:
  std::vector<std::map<Vertex, std::uint32_t>> adjacency_;
  std::vector<std::size_t> degree_;
  std::size_t edge_count_ = 0;
};

enum class RunPhase { one, two };

inline const char* to_string(RunPhase p) { return p == RunPhase::one ? "I" : "II"; }

struct TraceStep {
  RunPhase phase = RunPhase::one;
  Vertex vertex = 0;
  bool in_set = false;
  std::size_t available = 0;   // |A| after the step
  std::size_t link_edges = 0;  // e(L) after the step
  std::size_t degree = 0;      // Phase I: head-link edges in A\S; Phase II: d_L(v)
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// Hypotheses under which the size guarantees are promised, as observed on
/// this run.
struct RunCertificate {
  bool profile_ok = false;         // params pass the algorithm profile
  bool host_large_enough = false;  // |V| >= (1 + 100 eps) N
  bool nice_observed = true;       // no core A\S with |A\S| >= (1 + eps) N was met
  bool certified() const noexcept { return profile_ok && host_large_enough && nice_observed; }
  friend bool operator==(const RunCertificate&, const RunCertificate&) = default;
};

struct ContainerRun {
  Params params;
  EligibilityMode mode = EligibilityMode::exact;
  bool relaxed = false;
  std::size_t vertex_count = 0;
  VertexSet T;
  VertexSet T_prime;
  VertexSet C;
  std::size_t final_available = 0;  // |A| at termination
  RunPhase exit_phase = RunPhase::one;
  std::vector<TraceStep> trace;
  RunCertificate certificate;

  /// |A| <= (1-eps)|V| and |C| <= (1-eps/2)|V|.
  bool size_guarantee_holds() const {
    const Rational m(vertex_count);
    return Rational(final_available) <= (1 - params.eps) * m && Rational(C.size()) <= (1 - params.eps / 2) * m;
  }

  friend bool operator==(const ContainerRun&, const ContainerRun&) = default;
};

/// Read-only view of the live state, handed to an observer after every step.
struct StepView {
  const TraceStep& step;
  const VertexSet& available;
  const LinkMultigraph& link;
  const VertexSet& T;
  const VertexSet& T_prime;
};

struct RunOptions {
  EligibilityMode mode = EligibilityMode::exact;
  bool relaxed = false;            // skip the algorithm-profile check
  bool require_one_rooted = true;  // reject hosts that are not 1-rooted
  std::function<void(const StepView&)> observer;
};

class ContainerError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void check_params(const Params& p, bool relaxed) {
  auto bad = positivity_violations(p);
  if (!relaxed) {
    auto profile = validate_params(p, Profile::algorithm);
    bad.insert(bad.end(), profile.violations.begin(), profile.violations.end());
  }
  if (!bad.empty()) {
    std::string message = "invalid parameters:";
    for (const auto& b : bad) message += " [" + b + "]";
    throw ContainerError(message);
  }
}

template <typename PhaseOneMember, typename PhaseTwoMember>
ContainerRun execute(const RootedHypergraph& h, const Params& p, const RunOptions& options, PhaseOneMember&& in_phase_one,
                     PhaseTwoMember&& in_phase_two) {
  check_params(p, options.relaxed);
  const std::size_t m = h.vertex_count();
  const Rational host(m);

  ContainerRun run;
  run.params = p;
  run.mode = options.mode;
  run.relaxed = options.relaxed;
  run.vertex_count = m;
  run.T = VertexSet(m);
  run.T_prime = VertexSet(m);
  run.certificate.profile_ok = validate_params(p, Profile::algorithm).ok();
  run.certificate.host_large_enough = host >= (1 + 100 * p.eps) * p.N;

  VertexSet available = VertexSet::full(m);
  LinkMultigraph link(m);
  std::size_t available_count = m;
  const Rational stop_size = (1 - p.eps) * host;
  const Rational nice_threshold = (1 + p.eps) * p.N;

  auto notify = [&](const TraceStep& step) {
    if (options.observer) options.observer(StepView{step, available, link, run.T, run.T_prime});
  };
  auto discard = [&](Vertex v) {
    if (available.contains(v)) {
      available.erase(v);
      --available_count;
    }
    link.remove_vertex(v);
  };

  // Phase I
  bool enter_phase_two = false;
  for (;;) {
    if (Rational(available_count) <= stop_size) break;
    VertexSet rest = available;
    for (Vertex u : available)
      if (Rational(link.neighbor_count(u)) >= p.s) rest.erase(u);

    auto choice = find_max_degree_eligible(h, rest, p.s, p.t, options.mode);
    if (!choice) {
      if (Rational(rest.size()) >= nice_threshold) run.certificate.nice_observed = false;
      enter_phase_two = true;
      break;
    }
    const Vertex v = choice->witness.vertex;
    const bool member = in_phase_one(v);
    if (member) {
      run.T.insert(v);
      link.add(choice->witness.subgraph);
    }
    discard(v);
    run.trace.push_back({RunPhase::one, v, member, available_count, link.edge_count(), choice->link_degree});
    notify(run.trace.back());
  }

  if (!enter_phase_two) {
    run.exit_phase = RunPhase::one;
    run.C = available | run.T;
    run.final_available = available_count;
    return run;
  }

  // Phase II
  run.exit_phase = RunPhase::two;
  for (;;) {
    Vertex v = 0;
    std::size_t best = 0;
    for (std::size_t u = 0; u < m; ++u) {
      if (link.degree(static_cast<Vertex>(u)) > best) {
        best = link.degree(static_cast<Vertex>(u));
        v = static_cast<Vertex>(u);
      }
    }
    if (Rational(best) < p.z || best == 0) break;
    const bool member = in_phase_two(v);
    if (member) {
      run.T_prime.insert(v);
      for (Vertex u : link.neighbors(v)) discard(u);
    }
    discard(v);
    run.trace.push_back({RunPhase::two, v, member, available_count, link.edge_count(), best});
    notify(run.trace.back());
  }
  run.C = available | run.T | run.T_prime;
  run.final_available = available_count;
  return run;
}

}  // namespace detail

/// Runs the container algorithm for the independent set I.
inline ContainerRun run_container(const RootedHypergraph& h, const VertexSet& independent, const Params& p,
                                  const RunOptions& options = {}) {
  if (independent.universe() != h.vertex_count()) throw ContainerError("independent set over the wrong vertex range");
  if (!is_independent(h, independent)) throw ContainerError("input set is not independent");
  if (options.require_one_rooted && !verify_rooted(h, 1).rooted) throw ContainerError("hypergraph is not 1-rooted");
  return detail::execute(
      h, p, options, [&](Vertex v) { return independent.contains(v); },
      [&](Vertex v) { return independent.contains(v); });
}

/// Replays the algorithm from the fingerprints alone. With the parameters
/// and mode of a producing run, returns that run's container exactly.
inline ContainerRun replay(const RootedHypergraph& h, const VertexSet& T, const VertexSet& T_prime, const Params& p,
                           const RunOptions& options = {}) {
  if (T.universe() != h.vertex_count() || T_prime.universe() != h.vertex_count())
    throw ContainerError("fingerprint over the wrong vertex range");
  return detail::execute(
      h, p, options, [&](Vertex v) { return T.contains(v); }, [&](Vertex v) { return T_prime.contains(v); });
}

inline VertexSet reconstruct(const RootedHypergraph& h, const VertexSet& T, const VertexSet& T_prime, const Params& p,
                             const RunOptions& options = {}) {
  return replay(h, T, T_prime, p, options).C;
}

/// Unconditional per-step invariants: L simple (when required), max degree
/// of L at most 2s, support of L inside A. Returns a description of every
/// violation found.
inline std::vector<std::string> step_invariant_violations(const StepView& view, const Rational& s,
                                                          bool expect_simple = true) {
  std::vector<std::string> out;
  if (expect_simple && !view.link.is_simple()) out.emplace_back("L is not simple");
  if (Rational(view.link.max_degree()) > 2 * s) out.emplace_back("max degree of L exceeds 2s");
  if (!view.link.support().is_subset_of(view.available)) out.emplace_back("V(L) is not inside A");
  return out;
}

/// Unconditional end-of-run invariants relative to the input set I.
inline std::vector<std::string> run_invariant_violations(const ContainerRun& run, const VertexSet& independent) {
  std::vector<std::string> out;
  const Rational m(run.vertex_count);
  if (!independent.is_subset_of(run.C)) out.emplace_back("I is not inside C");
  if (!run.T.is_subset_of(independent)) out.emplace_back("T is not inside I");
  if (!run.T_prime.is_subset_of(independent)) out.emplace_back("T' is not inside I");
  if (Rational(run.T.size()) > 2 * run.params.s * m / run.params.t) out.emplace_back("|T| > 2sM/t");
  if (Rational(run.T_prime.size()) > m / run.params.z) out.emplace_back("|T'| > M/z");
  if (run.certificate.certified() && !run.size_guarantee_holds())
    out.emplace_back("certified run violates the size guarantee");
  return out;
}

}  // namespace rhc
