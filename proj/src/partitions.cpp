#include "apz/partitions.hpp"

#include <string>

#include "apz/errors.hpp"

namespace apz {

int Partition::parts() const {
  int n = 0;
  for (int c : mults) n += c;
  return n;
}

namespace {

void descend(int m, int remaining, std::vector<int>& mults, std::vector<Partition>& out, const Integer& k_factorial) {
  if (m == 1) {
    mults[0] = remaining;
    Integer denominator = 1, f;
    for (std::size_t i = 0; i < mults.size(); ++i) {
      if (mults[i] == 0) continue;
      Integer power;
      mpz_ui_pow_ui(power.get_mpz_t(), i + 1, static_cast<unsigned long>(mults[i]));
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(mults[i]));
      denominator *= power * f;
    }
    out.push_back({static_cast<int>(mults.size()), mults, k_factorial / denominator});
    return;
  }
  for (int c = 0; c * m <= remaining; ++c) {
    mults[m - 1] = c;
    descend(m - 1, remaining - c * m, mults, out, k_factorial);
  }
  mults[m - 1] = 0;
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
  if (k < 1 || k > kMaxPartitionOrder)
    throw DomainError("partition order " + std::to_string(k) + " outside 1.." + std::to_string(kMaxPartitionOrder));
  Integer k_factorial;
  mpz_fac_ui(k_factorial.get_mpz_t(), static_cast<unsigned long>(k));
  std::vector<Partition> out;
  std::vector<int> mults(static_cast<std::size_t>(k), 0);
  descend(k, k, mults, out, k_factorial);
  return out;
}

std::vector<Real> cycle_index_all(int k, const Indeterminate& x, const PrecisionContext& ctx) {
  if (k < 0) throw DomainError("cycle index order must be >= 0");
  const Bits bits = ctx.working_bits();
  PrecisionScope scope(bits);
  std::vector<Real> xs;
  xs.reserve(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) xs.push_back(x(j).with_precision(bits));
  std::vector<Real> z;
  z.reserve(static_cast<std::size_t>(k) + 1);
  z.push_back(Real(1));
  for (int n = 1; n <= k; ++n) {
    Real acc = 0;
    for (int j = 1; j <= n; ++j) acc += xs[j - 1] * z[n - j];
    z.push_back(acc / n);
  }
  return z;
}

Real cycle_index_eval(int k, const Indeterminate& x, const PrecisionContext& ctx) {
  return cycle_index_all(k, x, ctx).back();
}

Real cycle_index_explicit(int k, const Indeterminate& x, const PrecisionContext& ctx) {
  if (k < 0) throw DomainError("cycle index order must be >= 0");
  const Bits bits = ctx.working_bits();
  PrecisionScope scope(bits);
  if (k == 0) return Real(1);
  std::vector<Real> xs;
  for (int j = 1; j <= k; ++j) xs.push_back(x(j).with_precision(bits));
  Real acc = 0;
  for (const Partition& p : partitions_of(k)) {
    Real term(p.weight);
    for (int m = 1; m <= k; ++m)
      if (p.mults[m - 1] > 0) term *= pow(xs[m - 1], static_cast<long>(p.mults[m - 1]));
    acc += term;
  }
  Integer k_factorial;
  mpz_fac_ui(k_factorial.get_mpz_t(), static_cast<unsigned long>(k));
  return acc / Real(k_factorial);
}

}  // namespace apz
