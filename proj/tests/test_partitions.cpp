#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "apz/errors.hpp"
#include "apz/partitions.hpp"
#include "test_support.hpp"

using namespace apz;

namespace {

std::vector<long> weights(int k) {
  std::vector<long> out;
  for (const auto& p : partitions_of(k)) out.push_back(p.weight.get_si());
  return out;
}

// number of partitions by Euler's pentagonal number recurrence
long partition_count(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int i = 1;; ++i) {
      const int g1 = i * (3 * i - 1) / 2, g2 = i * (3 * i + 1) / 2;
      if (g1 > m) break;
      const long sign = (i % 2) ? 1 : -1;
      p[m] += sign * p[m - g1];
      if (g2 <= m) p[m] += sign * p[m - g2];
    }
  }
  return p[n];
}

// cycle type counts of all permutations of k elements
std::map<std::vector<int>, long> brute_cycle_types(int k) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::map<std::vector<int>, long> counts;
  do {
    std::vector<int> mults(static_cast<std::size_t>(k), 0);
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (int i = 0; i < k; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = perm[j]) {
        seen[j] = true;
        ++len;
      }
      ++mults[len - 1];
    }
    ++counts[mults];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

}  // namespace

TEST_CASE("weights of the first partition sets") {
  CHECK(weights(1) == std::vector<long>{1});
  CHECK(weights(2) == std::vector<long>{1, 1});
  CHECK(weights(3) == std::vector<long>{1, 3, 2});
  CHECK(weights(4) == std::vector<long>{1, 6, 3, 8, 6});

  const auto p3 = partitions_of(3);
  CHECK(p3[0].mults == std::vector<int>{3, 0, 0});
  CHECK(p3[1].mults == std::vector<int>{1, 1, 0});
  CHECK(p3[2].mults == std::vector<int>{0, 0, 1});
  const auto p4 = partitions_of(4);
  CHECK(p4[2].mults == std::vector<int>{0, 2, 0, 0});
  CHECK(p4[3].mults == std::vector<int>{1, 0, 1, 0});
  CHECK(p4[4].parts() == 1);
}

TEST_CASE("weights count permutations by cycle type") {
  for (int k = 1; k <= 7; ++k) {
    const auto brute = brute_cycle_types(k);
    const auto parts = partitions_of(k);
    CHECK(parts.size() == brute.size());
    for (const auto& p : parts) CHECK(p.weight == brute.at(p.mults));
  }
  // A036039 rows 5 and 6 as multisets
  auto sorted = [](std::vector<long> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(weights(5)) == sorted({1, 10, 15, 20, 20, 30, 24}));
  CHECK(sorted(weights(6)) == sorted({1, 15, 45, 15, 40, 120, 40, 90, 90, 144, 120}));
}

TEST_CASE("partition structure up to k = 30") {
  for (int k = 1; k <= 30; ++k) {
    const auto parts = partitions_of(k);
    CHECK(static_cast<long>(parts.size()) == partition_count(k));
    Integer total = 0, factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(k));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      int sum = 0;
      for (int m = 1; m <= k; ++m) sum += m * parts[i].mults[m - 1];
      CHECK(sum == k);
      total += parts[i].weight;
      if (i > 0) {
        // strictly ascending on (k_k, ..., k_1)
        const std::vector<int> a(parts[i - 1].mults.rbegin(), parts[i - 1].mults.rend());
        const std::vector<int> b(parts[i].mults.rbegin(), parts[i].mults.rend());
        CHECK(a < b);
      }
    }
    if (k <= 12) CHECK(total == factorial);
  }
  CHECK_THROWS_AS(partitions_of(0), DomainError);
  CHECK_THROWS_AS(partitions_of(kMaxPartitionOrder + 1), DomainError);
}

TEST_CASE("cycle index evaluation") {
  PrecisionContext ctx;
  const auto one = [](int) { return Real(1); };
  CHECK(cycle_index_eval(0, one, ctx) == 1);
  CHECK(cycle_index_eval(2, one, ctx) == 1);
  CHECK(cycle_index_explicit(2, one, ctx) == 1);
  CHECK(cycle_index_all(3, one, ctx).size() == 4);

  // x_m = t for every m gives the rising factorial t(t+1)..(t+k-1)/k!
  const auto two = [](int) { return Real(2); };
  CHECK(cycle_index_eval(5, two, ctx) == 6);

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(0.01, 3.0);
  const Bits bits = ctx.working_bits();
  for (int k = 1; k <= 10; ++k) {
    std::vector<double> xs(static_cast<std::size_t>(k));
    for (auto& v : xs) v = dist(rng);
    const auto x = [&xs](int m) { return Real(xs[m - 1]); };
    CHECK(rel_err(cycle_index_eval(k, x, ctx), cycle_index_explicit(k, x, ctx)) < power_of_ten(-75, bits));
  }
}
