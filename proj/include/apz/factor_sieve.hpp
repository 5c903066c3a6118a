#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace apz {

/// Prime-factor counts of every integer up to a limit.
///
/// For 1 <= n <= limit holds big_omega(n) = number of prime factors with
/// multiplicity, small_omega(n) = number of distinct prime factors, and the
/// Moebius function.  Index 0 and 1 store zero counts and mu(1) = 1.
/// A finished sieve is immutable.
class FactorSieve {
 public:
  /// Default ceiling on the memory the sieve arrays may occupy.
  static constexpr std::size_t kDefaultMemoryBudget = std::size_t{1} << 30;

  std::uint64_t limit() const { return limit_; }

  int big_omega(std::uint64_t n) const { return big_omega_.at(n); }
  int small_omega(std::uint64_t n) const { return small_omega_.at(n); }
  int moebius(std::uint64_t n) const { return moebius_.at(n); }

  std::span<const std::uint8_t> big_omega_table() const { return big_omega_; }
  std::span<const std::uint8_t> small_omega_table() const { return small_omega_; }
  std::span<const std::int8_t> moebius_table() const { return moebius_; }

  std::size_t memory_bytes() const;

 private:
  friend FactorSieve build_sieve(std::uint64_t, std::size_t);

  std::uint64_t limit_ = 0;
  std::vector<std::uint8_t> big_omega_;
  std::vector<std::uint8_t> small_omega_;
  std::vector<std::int8_t> moebius_;
};

/// Linear smallest-prime-factor sieve.  Throws DomainError for limit < 2 and
/// ResourceError when the arrays would exceed `memory_budget` bytes.
FactorSieve build_sieve(std::uint64_t limit,
                        std::size_t memory_budget = FactorSieve::kDefaultMemoryBudget);

/// Ascending n <= sieve.limit() with Omega(n) = k (and omega(n) = k when
/// squarefree_only).
std::vector<std::uint64_t> enumerate_almost_primes(const FactorSieve& sieve, int k,
                                                   bool squarefree_only = false);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);
std::uint64_t next_prime(std::uint64_t n);  // smallest prime > n
bool is_prime(std::uint64_t n);
/// mu(n) by trial division.
int moebius_of(std::uint64_t n);
/// The first k primes.
std::vector<std::uint64_t> first_primes(int k);

}  // namespace apz
