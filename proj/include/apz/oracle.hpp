#pragma once

#include <cstdint>
#include <vector>

#include "apz/factor_sieve.hpp"
#include "apz/precision.hpp"
#include "apz/real.hpp"

namespace apz {

/// A truncated direct sum with a rigorous bound on the omitted terms
/// (tail_bound) and on the accumulated floating-point error of the terms
/// that were summed (rounding_bound).
struct OracleResult {
  Real partial_sum;
  Real tail_bound;
  std::uint64_t terms_used = 0;
  Real rounding_bound;

  bool brackets(const Real& value) const { return abs(value - partial_sum) <= tail_bound + rounding_bound; }
};

enum class OracleWeight {
  reciprocal_shift,  // 1/(n^s (n-1)), the B_{k,s} summand
  log_shift,         // log(n-1)/(n-1)^s, the a = 0 Hurwitz derivative magnitude
  pow2,              // 1/(n 2^n), the log 2 components (s unused)
};

/// Tail bounds dominate the oracle error, so 30 working digits are plenty.
PrecisionContext oracle_context();

/// sum over n <= N with Omega(n) = k of n^-s; tail N^(1-s)/(s-1).
OracleResult direct_Pk(const FactorSieve& sieve, int k, const Real& s, std::uint64_t n,
                       const PrecisionContext& ctx);
/// Same over square-free n, weighted by mu(n).
OracleResult direct_Pk_moebius(const FactorSieve& sieve, int k, const Real& s, std::uint64_t n,
                               const PrecisionContext& ctx);
OracleResult direct_weighted(const FactorSieve& sieve, int k, const Real& s, std::uint64_t n, OracleWeight weight,
                             const PrecisionContext& ctx);

/// direct_Pk and direct_Pk_moebius for every k in 1..kmax and every integer
/// s >= 2 in `s_values`, from one pass over the sieve.  Partial sums are
/// reduced chunk by chunk in a fixed order, so results do not depend on how
/// the pass is scheduled.
struct OracleBatch {
  std::vector<long> s_values;
  std::vector<std::vector<OracleResult>> plain;    // [k-1][index of s]
  std::vector<std::vector<OracleResult>> moebius;  // [k-1][index of s]
};
OracleBatch direct_batch(const FactorSieve& sieve, int kmax, const std::vector<long>& s_values, std::uint64_t n,
                         const PrecisionContext& ctx);

}  // namespace apz
