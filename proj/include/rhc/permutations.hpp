#pragma once

// Permutation/set pairs from the supersaturation double count.
//
// For a permutation P of [n] and A in F: (P, A) is a pair when A is the set
// of the first |A| entries of P. The pair is bad if some proper subset B of A
// that is an initial segment of P lies in F, good otherwise, and horrible if
// such a B has |A - B| >= the horrible gap. Elements are 0-based here: entry
// e of a permutation is bit e of a mask.

#include "rhc/entropy.hpp"
#include "rhc/set_family.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace rhc {

inline constexpr unsigned default_horrible_gap = 11;
inline constexpr unsigned max_audit_n = 8;

enum class PairClass { good, bad, horrible, not_a_pair };

inline const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::good: return "good";
    case PairClass::bad: return "bad";
    case PairClass::horrible: return "horrible";
    case PairClass::not_a_pair: return "not-a-pair";
  }
  return "?";
}

struct PairRules {
  bool include_empty = true;  // the empty prefix counts as an initial segment
  unsigned horrible_gap = default_horrible_gap;
};

namespace detail {

inline void check_permutation(std::span<const unsigned> perm, unsigned n) {
  if (perm.size() != n) throw std::invalid_argument("permutation has the wrong length");
  Mask seen = 0;
  for (unsigned e : perm) {
    if (e >= n || ((seen >> e) & 1U)) throw std::invalid_argument("not a permutation of [n]");
    seen |= Mask{1} << e;
  }
}

/// prefix[j] = set of the first j entries, j = 0..n.
inline std::vector<Mask> prefix_sets(std::span<const unsigned> perm) {
  std::vector<Mask> out(perm.size() + 1, 0);
  for (std::size_t j = 0; j < perm.size(); ++j) out[j + 1] = out[j] | (Mask{1} << perm[j]);
  return out;
}

inline PairClass classify_prefixes(const std::vector<Mask>& prefix, Mask a, const SetFamily& family,
                                   const PairRules& rules) {
  const unsigned size = set_size(a);
  if (prefix[size] != a) return PairClass::not_a_pair;
  bool bad = false;
  for (unsigned j = rules.include_empty ? 0 : 1; j < size; ++j) {
    if (!family.contains(prefix[j])) continue;
    bad = true;
    if (size - j >= rules.horrible_gap) return PairClass::horrible;
  }
  return bad ? PairClass::bad : PairClass::good;
}

}  // namespace detail

/// Horrible pairs are bad; the more specific class is returned.
inline PairClass classify_permutation(std::span<const unsigned> perm, Mask a, const SetFamily& family,
                                      const PairRules& rules = {}) {
  detail::check_permutation(perm, family.n());
  if (!family.contains(a)) throw std::invalid_argument("set is not a member of the family");
  return detail::classify_prefixes(detail::prefix_sets(perm), a, family, rules);
}

struct SetAudit {
  Mask set = 0;
  std::uint64_t pairs = 0;     // |A|! (n - |A|)!
  std::uint64_t bad = 0;       // S_A
  std::uint64_t horrible = 0;
  std::optional<std::uint64_t> horrible_prefixes;  // |H_A|
  std::optional<double> alpha;                     // |H_A| = C(|A|-1, delta) (1 + alpha)
};

struct PermutationAudit {
  unsigned n = 0;
  SetFamily family;
  PairRules rules;
  std::optional<unsigned> delta;
  std::vector<SetAudit> sets;
  std::uint64_t permutations = 0;       // n!
  std::uint64_t good_total = 0;         // sum over A of (|A|!(n-|A|)! - S_A)
  std::uint64_t max_good_per_permutation = 0;
  bool at_most_one_good = true;
  bool sum_within_factorial = true;
  bool alpha_at_least_minus_one = true;

  bool passed() const noexcept { return at_most_one_good && sum_within_factorial && alpha_at_least_minus_one; }
};

struct AuditOptions {
  PairRules rules;
  std::optional<unsigned> delta;  // prefix length for H_A; 0 <= delta <= min |A| - 1
  unsigned threads = 1;
};

inline std::uint64_t factorial(unsigned n) {
  std::uint64_t out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

/// Walks all n! permutations. Work is split by the first entry; per-thread
/// tallies are added, so the result does not depend on the thread count.
inline PermutationAudit audit_counting_identity(const SetFamily& family, const AuditOptions& options = {}) {
  const unsigned n = family.n();
  if (n > max_audit_n) throw std::out_of_range("permutation audit limited to n <= " + std::to_string(max_audit_n));
  const auto& members = family.members();
  if (options.delta) {
    for (Mask a : members)
      if (*options.delta + 1 > set_size(a))
        throw std::invalid_argument("delta must satisfy delta <= |A| - 1 for every member A");
  }

  struct Tally {
    std::vector<std::uint64_t> bad, horrible;
    std::vector<std::set<Mask>> prefixes;
    std::uint64_t max_good = 0;
  };
  auto work = [&](unsigned first, Tally& tally) {
    tally.bad.assign(members.size(), 0);
    tally.horrible.assign(members.size(), 0);
    tally.prefixes.assign(members.size(), {});
    std::vector<unsigned> rest;
    for (unsigned e = 0; e < n; ++e)
      if (e != first) rest.push_back(e);
    std::vector<unsigned> perm(n);
    do {
      perm[0] = first;
      std::copy(rest.begin(), rest.end(), perm.begin() + 1);
      const auto prefix = detail::prefix_sets(perm);
      std::uint64_t good = 0;
      for (std::size_t i = 0; i < members.size(); ++i) {
        switch (detail::classify_prefixes(prefix, members[i], family, options.rules)) {
          case PairClass::good: ++good; break;
          case PairClass::horrible:
            ++tally.horrible[i];
            if (options.delta) tally.prefixes[i].insert(prefix[*options.delta]);
            [[fallthrough]];
          case PairClass::bad: ++tally.bad[i]; break;
          case PairClass::not_a_pair: break;
        }
      }
      tally.max_good = std::max(tally.max_good, good);
    } while (std::next_permutation(rest.begin(), rest.end()));
  };

  std::vector<Tally> tallies(std::max(n, 1U));
  if (n == 0) {
    // the single empty permutation
    std::vector<Mask> prefix{0};
    auto& t = tallies[0];
    t.bad.assign(members.size(), 0);
    t.horrible.assign(members.size(), 0);
    t.prefixes.assign(members.size(), {});
    std::uint64_t good = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (detail::classify_prefixes(prefix, members[i], family, options.rules) == PairClass::good) ++good;
    t.max_good = good;
  } else if (options.threads <= 1) {
    for (unsigned f = 0; f < n; ++f) work(f, tallies[f]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min(options.threads, n); ++w)
      pool.emplace_back([&, w] {
        for (unsigned f = w; f < n; f += options.threads) work(f, tallies[f]);
      });
    for (auto& t : pool) t.join();
  }

  PermutationAudit audit;
  audit.n = n;
  audit.family = family;
  audit.rules = options.rules;
  audit.delta = options.delta;
  audit.permutations = factorial(n);
  for (std::size_t i = 0; i < members.size(); ++i) {
    SetAudit s;
    s.set = members[i];
    const unsigned size = set_size(members[i]);
    s.pairs = factorial(size) * factorial(n - size);
    std::set<Mask> prefixes;
    for (const auto& t : tallies) {
      s.bad += t.bad[i];
      s.horrible += t.horrible[i];
      prefixes.insert(t.prefixes[i].begin(), t.prefixes[i].end());
    }
    if (options.delta) {
      s.horrible_prefixes = prefixes.size();
      const double base = binomial(size - 1, *options.delta).convert_to<double>();
      s.alpha = static_cast<double>(prefixes.size()) / base - 1.0;
      if (*s.alpha < -1.0) audit.alpha_at_least_minus_one = false;
    }
    audit.good_total += s.pairs - s.bad;
    audit.sets.push_back(s);
  }
  for (const auto& t : tallies) audit.max_good_per_permutation = std::max(audit.max_good_per_permutation, t.max_good);
  audit.at_most_one_good = audit.max_good_per_permutation <= 1;
  audit.sum_within_factorial = audit.good_total <= audit.permutations;
  return audit;
}

}  // namespace rhc
