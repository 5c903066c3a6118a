#pragma once

#include <vector>

#include "apz/precision.hpp"
#include "apz/real.hpp"

namespace apz {

/// plain: sum over Omega(n) = k of n^-s.
/// moebius: sum over square-free n with omega(n) = k of mu(n) n^-s.
enum class Variant { plain, moebius };

enum class Evaluation { recurrence, partition_sum };

struct AlmostPrimeZetaRequest {
  int k = 1;
  Real s;
  Variant variant = Variant::plain;
  bool derivative = false;
};

/// P_k(s), s > 1.  The default path is the recurrence over P(js).
Real almost_prime_zeta(int k, const Real& s, const PrecisionContext& ctx,
                       Evaluation method = Evaluation::recurrence);
/// P_k(s) = (1/k!) sum_partitions weight prod_m P(ms)^k_m.
Real almost_prime_zeta_partition_sum(int k, const Real& s, const PrecisionContext& ctx);
/// P_k(s) = (1/k) sum_j P(js) P_{k-j}(s).
Real almost_prime_zeta_via_recurrence(int k, const Real& s, const PrecisionContext& ctx);
/// P_0(s) .. P_kmax(s) (P_0 = 1) from a single recurrence pass.
std::vector<Real> almost_prime_zeta_all(int kmax, const Real& s, Variant variant, const PrecisionContext& ctx);

/// d/ds P_k(s).
Real almost_prime_zeta_prime(int k, const Real& s, const PrecisionContext& ctx,
                             Evaluation method = Evaluation::recurrence);

/// Signed square-free variant; its sign is (-1)^k.  Cancellation between the
/// partition terms is compensated by raising the working precision.
Real almost_prime_zeta_moebius(int k, const Real& s, const PrecisionContext& ctx,
                               Evaluation method = Evaluation::recurrence);
/// d/ds of the square-free variant.
Real almost_prime_zeta_moebius_prime(int k, const Real& s, const PrecisionContext& ctx);

/// Dispatch on a request.
Real evaluate(const AlmostPrimeZetaRequest& request, const PrecisionContext& ctx);

/// sum_{k>=1} P_{2k-1}(t) (plain) or its square-free analogue, in closed
/// form through zeta(t) and zeta(2t); t > 1.
Real odd_index_sum(const Real& t, Variant variant, const PrecisionContext& ctx);

/// Decimal digits lost to cancellation in the square-free variant:
/// log10(P_k(s) / |P_k^mu(s)|) bounded with |P_k^mu(s)| >= (p_k#)^-s.
int moebius_cancellation_digits(int k, const Real& s, const PrecisionContext& ctx);

}  // namespace apz
