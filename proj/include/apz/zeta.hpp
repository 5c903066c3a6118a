#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include "apz/precision.hpp"
#include "apz/real.hpp"

namespace apz {

/// Exact Bernoulli numbers B_0, B_2, B_4, ..., extended on demand.
/// Shared process-wide; extension is serialized and entries never change.
class BernoulliTable {
 public:
  static BernoulliTable& global();

  /// B_n for even n >= 0 (B_1 = -1/2 and odd n > 1 give 0).
  Rational bernoulli(int n);
  /// B_{2k} / (2k)!, the Euler-Maclaurin weight.
  Rational euler_maclaurin_weight(int k);

 private:
  void extend_to(int pairs);

  std::mutex mutex_;
  std::vector<Rational> even_;    // even_[j] = B_{2j}
  std::vector<Rational> weight_;  // weight_[j] = B_{2j}/(2j)!
};

/// Riemann zeta for real s > 1.
Real zeta(const Real& s, const PrecisionContext& ctx);
/// d/ds zeta(s) for real s > 1.
Real zeta_prime(const Real& s, const PrecisionContext& ctx);
/// zeta'(s)/zeta(s) from a single summation pass.
Real zeta_log_derivative(const Real& s, const PrecisionContext& ctx);
/// Hurwitz zeta sum_{n>=0} (n + a)^{-s} for integer a >= 1.
Real hurwitz_zeta(const Real& s, std::uint64_t a, const PrecisionContext& ctx);
/// d/ds of hurwitz_zeta.
Real hurwitz_zeta_prime(const Real& s, std::uint64_t a, const PrecisionContext& ctx);

/// psi(s) = Gamma'(s)/Gamma(s) for s > 0.
Real digamma(const Real& s, const PrecisionContext& ctx);
/// psi(s + l) - psi(s) = sum_{j<l} 1/(s + j).
Real digamma_shift(const Real& s, long l, const PrecisionContext& ctx);
/// Rising factorial s (s+1) ... (s+l-1).
Real pochhammer(const Real& s, long l, const PrecisionContext& ctx);

}  // namespace apz
