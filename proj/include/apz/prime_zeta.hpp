#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "apz/precision.hpp"
#include "apz/real.hpp"

namespace apz {

/// Memo of prime zeta values P(t) and P'(t).
///
/// Entries are keyed by (working bits, cutoff prime, exact t), so a value is
/// never served to a caller running at another precision.  Inserts are
/// idempotent: if two threads race on the same key, both get the first value.
class PrimeZetaCache {
 public:
  static PrimeZetaCache& global();

  Real value(const Real& t, const PrecisionContext& ctx);
  Real derivative(const Real& t, const PrecisionContext& ctx);

  std::size_t size() const;
  void clear();

 private:
  using Key = std::tuple<Bits, std::uint64_t, std::string>;
  mutable std::mutex mutex_;
  std::map<Key, Real> values_;
  std::map<Key, Real> derivatives_;
};

/// P(s) = sum over primes of p^-s, s > 1.
Real prime_zeta(const Real& s, const PrecisionContext& ctx);
/// d/ds P(s), s > 1.
Real prime_zeta_prime(const Real& s, const PrecisionContext& ctx);

/// P(M, s) = zeta(s) prod_{p<=M} (1 - p^-s) for prime M.
Real partial_product(std::uint64_t m, const Real& s, const PrecisionContext& ctx);
/// log P(M, t), accurate relative to the size of its leading terms.
Real log_partial_product(std::uint64_t m, const Real& t, const PrecisionContext& ctx);
/// P'(M, t) / P(M, t).
Real log_partial_product_derivative(std::uint64_t m, const Real& t, const PrecisionContext& ctx);

/// sum_{s>=2} P(s) / s^u.
Real prime_zeta_moment(int u, const PrecisionContext& ctx);
/// sum_{u>=1} prime_zeta_moment(u) = sum_{s>=2} P(s) / (s - 1).
Real prime_zeta_moment_total(const PrecisionContext& ctx);

/// Polynomial in p with exact coefficients, lowest degree first.
using Polynomial = std::vector<Rational>;

struct RationalFunction {
  Polynomial numerator;
  Polynomial denominator;

  /// Exact value at integer p; throws DomainError at a pole.
  Rational operator()(std::uint64_t p) const;
};

/// Coefficients c_2, c_3, ..., c_order with
///   R(p) = sum_j c_j / (p^j - 1) + O(p^-(order+1)).
/// Element i of the result is c_{i+2}.  Throws BasisError when R has a
/// nonzero constant or 1/p term.
std::vector<Rational> expand_rational_to_basis(const Polynomial& numerator, const Polynomial& denominator,
                                               int order);

/// sum_j c_j (-zeta'(j)/zeta(j)) over the given coefficients, coeffs[i]
/// belonging to j = i + 2.  Throws DivergenceError if the coefficients grow
/// like 2^j or faster.
Real log_weighted_prime_sum(const std::vector<Rational>& coeffs, const PrecisionContext& ctx);
/// sum_p R(p) log p.  Primes up to the cutoff are summed directly; the rest
/// goes through the basis expansion with the Euler-product remainder, which
/// converges like (growth / next prime)^j.
Real log_weighted_prime_sum(const RationalFunction& r, const PrecisionContext& ctx);

}  // namespace apz
