#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "apz/precision.hpp"

namespace apz {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
  double seconds = 0;
};

/// Structural identities that need no reference digits: partition sum vs
/// recurrence, zeta and 1/zeta as sums over k, odd-index closed forms, the
/// P(s,s) identity, agreement of the two B routes, cutoff invariance.
std::vector<CheckResult> run_identity_suite(const PrecisionContext& ctx);

/// Exact partition weights and tau coefficients.
std::vector<CheckResult> run_combinatorics_suite();

/// Regenerates every registered table and compares it with `golden_dir`.
std::vector<CheckResult> run_table_suite(const std::filesystem::path& golden_dir, const PrecisionContext& ctx);

/// Direct sums over n <= limit must bracket the accelerated values of the
/// almost-prime tables with s <= 4 (plain and square-free), plus the
/// weighted sums behind B, the log-Hurwitz values and the log 2 parts.
std::vector<CheckResult> run_oracle_suite(std::uint64_t limit, const PrecisionContext& ctx);

}  // namespace apz
