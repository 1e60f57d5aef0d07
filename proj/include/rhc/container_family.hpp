#pragma once

#include "rhc/container.hpp"
#include "rhc/hypergraph.hpp"
#include "rhc/params.hpp"
#include "rhc/vertex_set.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace rhc {

/// One application of the single-step construction, on the host H[C_{i-1}].
/// Fingerprints are stored in the original vertex ids.
struct ContainerLevel {
  std::size_t host_size = 0;  // M_i
  VertexSet T;
  VertexSet S;  // the Phase II fingerprint T' of this level
  std::size_t container_size = 0;
  std::size_t steps = 0;
  RunCertificate certificate;
  bool size_guarantee = false;  // |C_i| <= (1 - eps/2) M_i and |A| <= (1-eps) M_i

  friend bool operator==(const ContainerLevel&, const ContainerLevel&) = default;
};

enum class IterationStatus { reached_target, hypothesis_failed };

inline const char* to_string(IterationStatus s) {
  return s == IterationStatus::reached_target ? "reached-target" : "hypothesis-failed";
}

struct ContainerRecord {
  Params params;
  EligibilityMode mode = EligibilityMode::exact;
  bool relaxed = false;
  std::size_t vertex_count = 0;
  VertexSet C;
  std::vector<ContainerLevel> levels;
  IterationStatus status = IterationStatus::reached_target;

  std::size_t iterations() const noexcept { return levels.size(); }

  friend bool operator==(const ContainerRecord&, const ContainerRecord&) = default;
};

/// Fingerprint sizes of level i (1-based) against the fixed-host form
/// |T_i| <= 2 s M gamma^i / t and |S_i| <= M gamma^i / (4 eps s), where
/// M is the original host size and gamma = 1 - eps/2.
inline bool fixed_host_fingerprint_bounds_hold(const ContainerRecord& record, std::size_t level) {
  const auto& p = record.params;
  const Rational gamma = 1 - p.eps / 2;
  Rational shrink = 1;
  for (std::size_t i = 0; i <= level; ++i) shrink *= gamma;
  const Rational m(record.vertex_count);
  const auto& l = record.levels.at(level);
  return Rational(l.T.size()) <= 2 * p.s * m * shrink / p.t && Rational(l.S.size()) <= m * shrink / (4 * p.eps * p.s);
}

namespace detail {

inline VertexSet lift(const VertexSet& local, const std::vector<Vertex>& labels, std::size_t universe) {
  VertexSet out(universe);
  for (Vertex v : local) out.insert(labels[v]);
  return out;
}

inline VertexSet lower(const VertexSet& global, const std::vector<Vertex>& labels) {
  VertexSet out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (global.contains(labels[i])) out.insert(static_cast<Vertex>(i));
  return out;
}

}  // namespace detail

/// Iterates the single-step construction: the container of one level is the
/// host of the next, until |C| <= (1 + 100 eps) N. A level that removes
/// nothing ends the iteration with status `hypothesis_failed`.
inline ContainerRecord iterate_containers(const RootedHypergraph& h, const VertexSet& independent, const Params& p,
                                          RunOptions options = {}) {
  if (independent.universe() != h.vertex_count()) throw ContainerError("independent set over the wrong vertex range");
  if (!is_independent(h, independent)) throw ContainerError("input set is not independent");
  if (options.require_one_rooted && !verify_rooted(h, 1).rooted) throw ContainerError("hypergraph is not 1-rooted");
  options.require_one_rooted = false;

  const std::size_t m = h.vertex_count();
  ContainerRecord record;
  record.params = p;
  record.mode = options.mode;
  record.relaxed = options.relaxed;
  record.vertex_count = m;
  record.C = VertexSet::full(m);
  const Rational target = (1 + 100 * p.eps) * p.N;

  for (;;) {
    if (Rational(record.C.size()) <= target) {
      record.status = IterationStatus::reached_target;
      break;
    }
    auto sub = induced(h, record.C);
    auto run = run_container(sub.hypergraph, detail::lower(independent, sub.labels), p, options);

    ContainerLevel level;
    level.host_size = sub.labels.size();
    level.T = detail::lift(run.T, sub.labels, m);
    level.S = detail::lift(run.T_prime, sub.labels, m);
    level.container_size = run.C.size();
    level.steps = run.trace.size();
    level.certificate = run.certificate;
    level.size_guarantee = run.size_guarantee_holds();
    record.levels.push_back(std::move(level));

    const bool shrunk = run.C.size() < sub.labels.size();
    record.C = detail::lift(run.C, sub.labels, m);
    if (!shrunk) {
      record.status = IterationStatus::hypothesis_failed;
      break;
    }
  }
  return record;
}

/// The fingerprint sequence ((T_1, S_1), ..., (T_p, S_p)) of a record.
using FingerprintSequence = std::vector<std::pair<VertexSet, VertexSet>>;

inline FingerprintSequence fingerprints(const ContainerRecord& record) {
  FingerprintSequence out;
  for (const auto& l : record.levels) out.emplace_back(l.T, l.S);
  return out;
}

/// Rebuilds the final container of an iterated run from its fingerprint
/// sequence alone.
inline VertexSet reconstruct_iterated(const RootedHypergraph& h, const FingerprintSequence& sequence, const Params& p,
                                      RunOptions options = {}) {
  options.require_one_rooted = false;
  const std::size_t m = h.vertex_count();
  VertexSet container = VertexSet::full(m);
  for (const auto& [t, s] : sequence) {
    auto sub = induced(h, container);
    auto local = reconstruct(sub.hypergraph, detail::lower(t, sub.labels), detail::lower(s, sub.labels), p, options);
    container = detail::lift(local, sub.labels, m);
  }
  return container;
}

struct ContainerFamily {
  std::vector<VertexSet> containers;     // distinct, ordered by sorted vertex list
  std::vector<std::size_t> assignment;   // input index -> container index
  std::size_t distinct_fingerprints = 0;
};

/// Runs the iterated construction for every supplied independent set and
/// deduplicates the containers. The result does not depend on `threads`.
inline ContainerFamily collect_container_family(const RootedHypergraph& h, const std::vector<VertexSet>& sets,
                                                const Params& p, RunOptions options = {}, unsigned threads = 1) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].universe() != h.vertex_count())
      throw ContainerError("set #" + std::to_string(i) + " is over the wrong vertex range");
    if (!is_independent(h, sets[i])) throw ContainerError("set #" + std::to_string(i) + " is not independent");
  }
  if (options.require_one_rooted && !verify_rooted(h, 1).rooted) throw ContainerError("hypergraph is not 1-rooted");
  options.require_one_rooted = false;

  std::vector<ContainerRecord> records(sets.size());
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(sets.size(), 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < sets.size(); ++i) records[i] = iterate_containers(h, sets[i], p, options);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < sets.size(); i += threads) records[i] = iterate_containers(h, sets[i], p, options);
      });
    }
    for (auto& worker : workers) worker.join();
  }

  std::map<std::vector<Vertex>, std::size_t> index;
  std::vector<std::vector<Vertex>> keys;
  for (const auto& r : records) keys.push_back(r.C.to_vector());
  for (const auto& k : keys) index.emplace(k, 0);
  ContainerFamily family;
  for (auto& [key, slot] : index) {
    slot = family.containers.size();
    family.containers.push_back(VertexSet::from(h.vertex_count(), key));
  }
  for (const auto& k : keys) family.assignment.push_back(index.at(k));

  std::map<std::vector<std::vector<Vertex>>, int> seen;
  for (const auto& r : records) {
    std::vector<std::vector<Vertex>> key;
    for (const auto& l : r.levels) {
      key.push_back(l.T.to_vector());
      key.push_back(l.S.to_vector());
    }
    seen.emplace(std::move(key), 0);
  }
  family.distinct_fingerprints = seen.size();
  return family;
}

}  // namespace rhc
