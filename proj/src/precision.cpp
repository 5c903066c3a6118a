#include "apz/precision.hpp"

#include <string>

#include "apz/errors.hpp"
#include "apz/factor_sieve.hpp"

namespace apz {

void PrecisionContext::validate() const {
  if (digits < 10) throw DomainError("precision digits must be >= 10");
  if (guard < 5) throw DomainError("guard digits must be >= 5");
  if (cutoff_prime < 7 || !is_prime(cutoff_prime))
    throw DomainError("cutoff " + std::to_string(cutoff_prime) + " must be a prime >= 7");
  if (digits + guard > kMaxEscalationDigits) throw ResourceError("precision request too large");
}

Real PrecisionContext::series_tol() const { return power_of_ten(-working_digits(), working_bits()); }

PrecisionContext PrecisionContext::escalated(int extra) const {
  PrecisionContext c = *this;
  if (extra <= 0) return c;
  extra = (extra + 7) / 8 * 8;
  if (digits + extra + guard > kMaxEscalationDigits)
    throw ResourceError("required precision exceeds " + std::to_string(kMaxEscalationDigits) + " digits");
  c.digits += extra;
  return c;
}

}  // namespace apz
