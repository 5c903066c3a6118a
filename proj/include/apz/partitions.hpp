#pragma once

#include <functional>
#include <vector>

#include "apz/precision.hpp"
#include "apz/real.hpp"

namespace apz {

/// Integer partition of k in multiplicity form: mults[m-1] copies of part m.
struct Partition {
  int k = 0;
  std::vector<int> mults;  // (k_1, ..., k_k), sum m k_m = k
  Integer weight;          // k! / prod_m (m^k_m k_m!): permutations with this cycle type

  int parts() const;  // sum_m k_m
};

/// Largest k accepted by partitions_of.
inline constexpr int kMaxPartitionOrder = 64;

/// All partitions of k, ordered lexicographically on (k_k, ..., k_1)
/// ascending: for k = 4 the order is 1^4, 1^2 2, 2^2, 1 3, 4.
std::vector<Partition> partitions_of(int k);

/// Indeterminate x_m of the cycle index, m >= 1.
using Indeterminate = std::function<Real(int)>;

/// Z(S_k)(x_1..x_k) by the recurrence Z_n = (1/n) sum_j x_j Z_{n-j}, Z_0 = 1.
Real cycle_index_eval(int k, const Indeterminate& x, const PrecisionContext& ctx);
/// Z(S_0) .. Z(S_k) from one pass of the recurrence.
std::vector<Real> cycle_index_all(int k, const Indeterminate& x, const PrecisionContext& ctx);
/// (1/k!) sum over partitions of weight * prod_m x_m^k_m.
Real cycle_index_explicit(int k, const Indeterminate& x, const PrecisionContext& ctx);

}  // namespace apz
