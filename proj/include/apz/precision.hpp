#pragma once

#include <cstdint>

#include "apz/real.hpp"

namespace apz {

/// Numeric accuracy settings threaded through every evaluation.
///
/// `digits` is the number of significant decimal digits callers expect;
/// kernels work with `digits + guard` and truncate series once the
/// remaining terms fall below series_tol() relative to the running sum.
struct PrecisionContext {
  int digits = 64;
  int guard = 15;
  /// Largest prime summed explicitly before the Euler-product correction.
  std::uint64_t cutoff_prime = 101;

  /// Throws DomainError when a field violates its constraints.
  void validate() const;

  int working_digits() const { return digits + guard; }
  Bits working_bits() const { return digits_to_bits(working_digits()); }
  /// 10^-(digits+guard) at working precision.
  Real series_tol() const;
  double log10_tol() const { return -static_cast<double>(working_digits()); }

  /// Same settings with `extra` more target digits.  The increment is rounded
  /// up to a multiple of 8 so that escalated evaluations share cache entries.
  PrecisionContext escalated(int extra) const;
};

/// Upper bound on the precision escalation any single evaluation may request.
inline constexpr int kMaxEscalationDigits = 4000;

}  // namespace apz
