#include "apz/factor_sieve.hpp"

#include <string>

#include "apz/errors.hpp"

namespace apz {

std::size_t FactorSieve::memory_bytes() const {
  return big_omega_.size() + small_omega_.size() + moebius_.size();
}

FactorSieve build_sieve(std::uint64_t limit, std::size_t memory_budget) {
  if (limit < 2) throw DomainError("sieve limit must be at least 2");
  // three byte arrays plus the transient smallest-prime-factor table
  const std::size_t per_entry = 3 + sizeof(std::uint32_t);
  if (limit >= 0xffffffffULL || (limit + 1) > memory_budget / per_entry)
    throw ResourceError("sieve limit " + std::to_string(limit) + " exceeds memory budget of " +
                        std::to_string(memory_budget) + " bytes");

  const std::size_t size = static_cast<std::size_t>(limit) + 1;
  FactorSieve s;
  s.limit_ = limit;
  s.big_omega_.assign(size, 0);
  s.small_omega_.assign(size, 0);
  s.moebius_.assign(size, 0);
  s.moebius_[1] = 1;

  std::vector<std::uint32_t> spf(size, 0);
  std::vector<std::uint32_t> primes;
  for (std::size_t i = 2; i < size; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
      s.big_omega_[i] = 1;
      s.small_omega_[i] = 1;
      s.moebius_[i] = -1;
    }
    for (std::uint32_t p : primes) {
      const std::size_t m = i * p;
      if (p > spf[i] || m >= size) break;
      spf[m] = p;
      s.big_omega_[m] = static_cast<std::uint8_t>(s.big_omega_[i] + 1);
      if (p == spf[i]) {
        s.small_omega_[m] = s.small_omega_[i];
        s.moebius_[m] = 0;
      } else {
        s.small_omega_[m] = static_cast<std::uint8_t>(s.small_omega_[i] + 1);
        s.moebius_[m] = static_cast<std::int8_t>(-s.moebius_[i]);
      }
    }
  }
  return s;
}

std::vector<std::uint64_t> enumerate_almost_primes(const FactorSieve& sieve, int k,
                                                   bool squarefree_only) {
  if (k < 1) throw DomainError("almost-prime order k must be >= 1");
  std::vector<std::uint64_t> out;
  const auto omega = sieve.big_omega_table();
  const auto distinct = sieve.small_omega_table();
  for (std::uint64_t n = 2; n <= sieve.limit(); ++n) {
    if (omega[n] != k) continue;
    if (squarefree_only && distinct[n] != k) continue;
    out.push_back(n);
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

int moebius_of(std::uint64_t n) {
  if (n == 0) throw DomainError("mu(0) is undefined");
  int sign = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::vector<std::uint64_t> first_primes(int k) {
  std::vector<std::uint64_t> out;
  std::uint64_t p = 1;
  while (static_cast<int>(out.size()) < k) {
    p = next_prime(p);
    out.push_back(p);
  }
  return out;
}

}  // namespace apz
