#pragma once

#include "rhc/params.hpp"
#include "rhc/rational.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace rhc {

/// Binary entropy in bits, H(0) = H(1) = 0.
inline double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binary entropy needs p in [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

/// sum_{i=0}^{m} C(M, i), exact.
inline BigInt sum_binomials(std::uint64_t big_m, std::uint64_t m) {
  if (m > big_m) throw std::invalid_argument("sum_binomials needs m <= M");
  BigInt term = 1;
  BigInt total = 1;
  for (std::uint64_t i = 1; i <= m; ++i) {
    term = term * (big_m - i + 1) / i;
    total += term;
  }
  return total;
}

struct EntropyBoundCheck {
  bool holds = false;
  std::uint64_t m = 0;  // floor(zeta * M)
  BigInt lhs;           // sum_{i <= m} C(M, i)
  double rhs = 0.0;     // 2^{H(zeta) M}
  double log2_lhs = 0.0;
  double log2_rhs = 0.0;
};

/// sum_{i <= floor(zeta M)} C(M, i) <= 2^{H(zeta) M} for 0 < zeta <= 1/2.
/// Compared in log space with a relative slack of 1e-9.
inline EntropyBoundCheck check_entropy_bound(std::uint64_t big_m, const Rational& zeta) {
  if (zeta <= 0 || zeta > make_rational(1, 2)) throw std::domain_error("entropy bound needs 0 < zeta <= 1/2");
  constexpr double slack = 1e-9;
  EntropyBoundCheck out;
  out.m = floor_int(Rational(zeta * big_m)).convert_to<std::uint64_t>();
  out.lhs = sum_binomials(big_m, out.m);
  out.log2_lhs = log2_big(out.lhs);
  out.log2_rhs = binary_entropy(to_double(zeta)) * static_cast<double>(big_m);
  out.rhs = std::exp2(out.log2_rhs);
  out.holds = out.log2_lhs <= out.log2_rhs + std::log2(1.0 + slack);
  return out;
}

/// Evaluation of the iterated container-count bound for one parameter set.
struct BoundReport {
  double eps = 0, s = 0, t = 0, N = 0;
  std::size_t M = 0;
  unsigned r = 1;
  double tau = 0;    // 2s/t
  double beta = 0;   // r/(4 eps s)
  double gamma = 0;  // 1 - eps/2
  std::size_t p = 0;  // least p with gamma^p M <= N
  double entropy_sum = 0;      // H(tau) + H(beta)
  double log2_bound = 0;       // (2M/eps)(H(tau) + H(beta))
  double log2_series = 0;      // (H(tau) + H(beta)) * sum_{i=0}^{p} M gamma^i
  // log2 of C(M, <= tau M) * C(M, <= beta M), the one-level count; exact,
  // evaluated only for M <= single_level_limit
  std::optional<double> log2_single_level;
  static constexpr std::size_t single_level_limit = std::size_t{1} << 14;
};

class BoundError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The container-count bound log2|C| <= (2M/eps)(H(2s/t) + H(r/(4 eps s))),
/// alongside the geometric series it comes from. tau or beta above 1/2 makes
/// the entropy estimate inapplicable and is reported as an error.
inline BoundReport container_count_bound(const Params& params) {
  if (params.eps <= 0 || params.s <= 0 || params.t <= 0 || params.N <= 0)
    throw BoundError("bound needs positive eps, s, t, N");
  const Rational tau = 2 * params.s / params.t;
  const Rational beta = Rational(params.r) / (4 * params.eps * params.s);
  const Rational half = make_rational(1, 2);
  if (tau > half) throw BoundError("tau = 2s/t = " + to_string(tau) + " exceeds 1/2; entropy bound inapplicable");
  if (beta > half)
    throw BoundError("beta = r/(4 eps s) = " + to_string(beta) + " exceeds 1/2; entropy bound inapplicable");

  BoundReport out;
  out.eps = to_double(params.eps);
  out.s = to_double(params.s);
  out.t = to_double(params.t);
  out.N = to_double(params.N);
  out.M = params.M;
  out.r = params.r;
  out.tau = to_double(tau);
  out.beta = to_double(beta);
  out.gamma = 1.0 - out.eps / 2.0;
  out.entropy_sum = binary_entropy(out.tau) + binary_entropy(out.beta);
  out.log2_bound = 2.0 * static_cast<double>(params.M) / out.eps * out.entropy_sum;

  long double level = static_cast<long double>(params.M);
  long double series = 0;
  std::size_t p = 0;
  for (; level > static_cast<long double>(out.N); ++p) {
    series += level;
    level *= static_cast<long double>(out.gamma);
  }
  series += level;
  out.p = p;
  out.log2_series = static_cast<double>(series) * out.entropy_sum;

  if (params.M > 0 && params.M <= BoundReport::single_level_limit) {
    auto capped = [&](const Rational& fraction) {
      return floor_int(Rational(fraction * params.M)).convert_to<std::uint64_t>();
    };
    out.log2_single_level = log2_big(sum_binomials(params.M, capped(tau))) + log2_big(sum_binomials(params.M, capped(beta)));
  }
  return out;
}

}  // namespace rhc
