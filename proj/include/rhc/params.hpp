#pragma once

#include "rhc/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace rhc {

/// Container parameters. All values are exact rationals; M is the host size
/// the theorem-level constraints and count bounds refer to, and r is the
/// rootedness of the host (1 for ordinary rooted hypergraphs).
struct Params {
  Rational eps;
  Rational s;
  Rational t;
  Rational N;
  std::size_t M = 0;
  Rational tau;
  Rational z;
  unsigned r = 1;

  /// Parameters with the derived choices tau = 2s/t and z = 4*eps*s.
  static Params with_defaults(Rational eps, Rational s, Rational t, Rational N, std::size_t M, unsigned r = 1) {
    Params p{std::move(eps), std::move(s), std::move(t), std::move(N), M, {}, {}, r};
    p.tau = p.default_tau();
    p.z = p.default_z();
    return p;
  }

  Rational default_tau() const { return t > 0 ? Rational(2 * s / t) : Rational(0); }
  Rational default_z() const { return Rational(4 * eps * s); }

  friend bool operator==(const Params&, const Params&) = default;
};

enum class Profile {
  theorem,          // eps <= 1/10, 8s <= eps t, 1/eps^2 <= s, M >= (1+100eps)N
  algorithm,        // tau >= 2s/t, eps <= 1/10, 4 eps s >= z, tau + 1/z <= eps/2
  r_rooted_theorem  // eps <= 1/10, 4s/t + r/(2 eps s) <= eps, M >= (1+100eps)N
};

inline const char* to_string(Profile p) {
  switch (p) {
    case Profile::theorem: return "theorem";
    case Profile::algorithm: return "algorithm";
    case Profile::r_rooted_theorem: return "r-rooted-theorem";
  }
  return "?";
}

struct ParamValidation {
  Profile profile;
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Positivity of eps, s, t, N, tau, z; required by every run, relaxed or not.
inline std::vector<std::string> positivity_violations(const Params& p) {
  std::vector<std::string> out;
  if (p.eps <= 0) out.emplace_back("eps > 0");
  if (p.s <= 0) out.emplace_back("s > 0");
  if (p.t <= 0) out.emplace_back("t > 0");
  if (p.N <= 0) out.emplace_back("N > 0");
  if (p.tau <= 0) out.emplace_back("tau > 0");
  if (p.z <= 0) out.emplace_back("z > 0");
  return out;
}

inline ParamValidation validate_params(const Params& p, Profile profile) {
  ParamValidation report{profile, {}};
  auto& out = report.violations;
  const bool positive_core = p.eps > 0 && p.s > 0 && p.t > 0;
  if (p.eps <= 0) out.emplace_back("eps > 0");
  if (p.s <= 0) out.emplace_back("s > 0");
  if (p.t <= 0) out.emplace_back("t > 0");
  if (p.eps > make_rational(1, 10)) out.emplace_back("eps <= 1/10");

  switch (profile) {
    case Profile::theorem:
      if (p.N <= 0) out.emplace_back("N > 0");
      if (positive_core && 8 * p.s > p.eps * p.t) out.emplace_back("8s <= eps t");
      if (positive_core && 1 / (p.eps * p.eps) > p.s) out.emplace_back("1/eps^2 <= s");
      if (Rational(p.M) < (1 + 100 * p.eps) * p.N) out.emplace_back("M >= (1+100eps)N");
      break;
    case Profile::algorithm:
      if (p.tau <= 0) out.emplace_back("tau > 0");
      if (p.z <= 0) out.emplace_back("z > 0");
      if (positive_core && p.tau < 2 * p.s / p.t) out.emplace_back("tau >= 2s/t");
      if (4 * p.eps * p.s < p.z) out.emplace_back("4 eps s >= z");
      if (p.z > 0 && p.tau + 1 / p.z > p.eps / 2) out.emplace_back("tau + 1/z <= eps/2");
      break;
    case Profile::r_rooted_theorem:
      if (p.N <= 0) out.emplace_back("N > 0");
      if (positive_core && 4 * p.s / p.t + Rational(p.r) / (2 * p.eps * p.s) > p.eps)
        out.emplace_back("4s/t + r/(2 eps s) <= eps");
      if (Rational(p.M) < (1 + 100 * p.eps) * p.N) out.emplace_back("M >= (1+100eps)N");
      break;
  }
  return report;
}

/// Whether the theorem-profile constraints on (eps, s, t) carry over to the
/// algorithm profile once tau = 2s/t and z = 4 eps s. Returns false only if
/// the theorem profile holds and the derived parameters fail, which would be
/// a counterexample to the implication.
inline bool theorem_profile_implies_algorithm_profile(const Params& p) {
  if (!validate_params(p, Profile::theorem).ok()) return true;
  Params derived = Params::with_defaults(p.eps, p.s, p.t, p.N, p.M, p.r);
  return validate_params(derived, Profile::algorithm).ok();
}

}  // namespace rhc
