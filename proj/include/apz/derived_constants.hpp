#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "apz/almost_prime_zeta.hpp"
#include "apz/factor_sieve.hpp"
#include "apz/precision.hpp"
#include "apz/real.hpp"

namespace apz {

/// sum_{n>=2} 1/(n^s (n-1)) = s - sum_{l=2}^{s} zeta(l); exactly 1 at s = 1.
Real zeta_partial_fraction_sum(int s, const PrecisionContext& ctx);

/// B_{k,s} = sum over Omega(n) = k of 1/(n^s (n-1)).
/// s = 1 sums P_k(2 + l) over l; larger s subtract P_k(2..s) from B_{k,1}.
Real B(int k, int s, const PrecisionContext& ctx);
/// B_{k,s} = sum_{l>=0} P_k(s + 1 + l), the geometric-series route.
Real B_geometric(int k, int s, const PrecisionContext& ctx);
/// Square-free variant sum over omega(n) = Omega(n) = k of mu(n)/(n^s (n-1)).
Real B_moebius(int k, int s, const PrecisionContext& ctx);
Real B_moebius_geometric(int k, int s, const PrecisionContext& ctx);

/// sum_p 1/(p^{2s} (p^2 - 1)) = sum_{l>=0} P(2(1+s+l)), cross-checked
/// against B_{2,s} - B^mu_{2,s}; throws VerificationError on disagreement.
Real squared_prime_constant(int s, const PrecisionContext& ctx);

/// P_k(s, a) = sum over Omega(n) = k of (n - 1 + a)^-s, through the binomial
/// series in (1 - a).  Requires -1 < a < 3 and |1 - a| 2^-k < 1 (1/p_k# for
/// the square-free variant).
Real hurwitz_almost_prime(int k, const Real& s, const Real& a, Variant variant, const PrecisionContext& ctx);
/// d/ds P_k(s, a).  psi(s + l) - psi(s) is the finite sum of 1/(s + j), so
/// real s works as well as integer s.
Real hurwitz_almost_prime_prime(int k, const Real& s, const Real& a, const PrecisionContext& ctx,
                                Variant variant = Variant::plain);

/// Coefficients tau_{i,l}, 2 <= i <= l, of x + (1-x)^l log(1-x).
class TauTable {
 public:
  static TauTable& global();
  Rational tau(int i, int l);

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, Rational> values_;
  Rational compute(int i, int l);
};

Rational tau(int i, int l);

/// L_{k,l} = sum over Omega(n) = k of 1/n + (1 - 1/n)^l log(1 - 1/n).
Real L(int k, int l, const PrecisionContext& ctx);

/// sum over Omega(n) = k of 1/(n 2^n), by enumeration over a sieve.
Real log2_component(int k, const PrecisionContext& ctx);
/// Same with a caller-provided sieve; ResourceError if it is too short for
/// the requested precision.
Real log2_component(int k, const FactorSieve& sieve, const PrecisionContext& ctx);
/// Sieve limit log2_component needs for order k.
std::uint64_t log2_component_limit(int k, const PrecisionContext& ctx);

/// sum_{n>=1} 1/(n (n+1) ... (n+k)), evaluated as a series and checked
/// against 1/(k k!); throws VerificationError on mismatch.
Real factorial_reciprocal_identity(int k, const PrecisionContext& ctx);

}  // namespace apz
