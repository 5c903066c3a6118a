#include "apz/almost_prime_zeta.hpp"

#include <cmath>
#include <string>

#include "apz/errors.hpp"
#include "apz/factor_sieve.hpp"
#include "apz/partitions.hpp"
#include "apz/prime_zeta.hpp"
#include "apz/zeta.hpp"

namespace apz {

namespace {

void check_request(int k, const Real& s, const char* what) {
  if (k < 1) throw DomainError(std::string(what) + " requires k >= 1");
  if (!s.is_finite() || !(s > 1)) throw DomainError(std::string(what) + " requires s > 1");
}

// x_j = +-P(js) and x_j' = +-j P'(js), fetched through the cache
Indeterminate indeterminate(const Real& s, Variant v, const PrecisionContext& ctx) {
  return [&s, v, &ctx](int j) {
    PrecisionScope scope(ctx.working_bits());
    Real x = PrimeZetaCache::global().value(s.with_precision(ctx.working_bits()) * j, ctx);
    return v == Variant::plain ? x : -x;
  };
}

Real dx(const Real& s, int j, Variant v, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.working_bits());
  Real d = PrimeZetaCache::global().derivative(s.with_precision(ctx.working_bits()) * j, ctx) * j;
  return v == Variant::plain ? d : -d;
}

struct Series {
  std::vector<Real> z;   // Z_0..Z_k
  std::vector<Real> dz;  // derivatives, when requested
  double max_term_log10 = -1e300;
};

// Z_n = (1/n) sum_j x_j Z_{n-j} and its s-derivative
Series recurrence(int k, const Real& s, Variant v, bool with_derivative, const PrecisionContext& ctx) {
  const Bits bits = ctx.working_bits();
  PrecisionScope scope(bits);
  const Indeterminate x = indeterminate(s, v, ctx);
  std::vector<Real> xs, dxs;
  for (int j = 1; j <= k; ++j) {
    xs.push_back(x(j));
    if (with_derivative) dxs.push_back(dx(s, j, v, ctx));
  }
  Series out;
  out.z.push_back(Real(1));
  if (with_derivative) out.dz.push_back(Real(0));
  for (int n = 1; n <= k; ++n) {
    Real acc = 0, dacc = 0;
    for (int j = 1; j <= n; ++j) {
      const Real term = xs[j - 1] * out.z[n - j];
      out.max_term_log10 = std::max(out.max_term_log10, term.log10_abs() - std::log10(n));
      acc += term;
      if (with_derivative) {
        const Real dterm = dxs[j - 1] * out.z[n - j] + xs[j - 1] * out.dz[n - j];
        out.max_term_log10 = std::max(out.max_term_log10, dterm.log10_abs() - std::log10(n));
        dacc += dterm;
      }
    }
    out.z.push_back(acc / n);
    if (with_derivative) out.dz.push_back(dacc / n);
  }
  return out;
}

// Explicit partition sum of the value or of the derivative
Real partition_sum(int k, const Real& s, Variant v, bool derivative, const PrecisionContext& ctx) {
  const Bits bits = ctx.working_bits();
  PrecisionScope scope(bits);
  const Indeterminate x = indeterminate(s, v, ctx);
  std::vector<Real> xs, ratio;
  for (int j = 1; j <= k; ++j) {
    xs.push_back(x(j));
    if (derivative) ratio.push_back(dx(s, j, v, ctx) / xs.back());  // m P'(ms)/P(ms)
  }
  Real acc = 0;
  for (const Partition& p : partitions_of(k)) {
    Real term(p.weight);
    Real log_derivative = 0;
    for (int m = 1; m <= k; ++m) {
      const int c = p.mults[m - 1];
      if (c == 0) continue;
      term *= pow(xs[m - 1], static_cast<long>(c));
      if (derivative) log_derivative += ratio[m - 1] * c;
    }
    acc += derivative ? term * log_derivative : term;
  }
  Integer k_factorial;
  mpz_fac_ui(k_factorial.get_mpz_t(), static_cast<unsigned long>(k));
  return acc / Real(k_factorial);
}

// Runs `eval` at a precision raised by the a-priori cancellation estimate and
// repeats with more digits if the observed term/result ratio still eats into
// the guard digits.
template <class Eval>
Real with_cancellation_control(int k, const Real& s, const PrecisionContext& ctx, Eval eval) {
  int extra = moebius_cancellation_digits(k, s, ctx);
  for (int attempt = 0;; ++attempt) {
    const PrecisionContext work = ctx.escalated(extra);
    double max_term_log10 = 0;
    Real r = eval(work, max_term_log10);
    const double lost = max_term_log10 - r.log10_abs();
    if (r.is_zero() || lost > extra + ctx.guard / 2.0) {
      if (attempt >= 4) throw NumericError("cancellation in the square-free series could not be controlled");
      extra = static_cast<int>(std::ceil(r.is_zero() ? 2.0 * extra + 16 : lost)) + 8;
      continue;
    }
    return r.with_precision(ctx.working_bits());
  }
}

}  // namespace

int moebius_cancellation_digits(int k, const Real& s, const PrecisionContext& ctx) {
  check_request(k, s, "moebius_cancellation_digits");
  if (k == 1) return 0;  // a single term, nothing cancels
  double primorial_log10 = 0;
  for (auto p : first_primes(k)) primorial_log10 += std::log10(static_cast<double>(p));
  const double plain_log10 = almost_prime_zeta_all(k, s, Variant::plain, ctx).back().log10_abs();
  const double digits = plain_log10 + s.to_double() * primorial_log10;
  return digits > 0 ? static_cast<int>(std::ceil(digits)) + 3 : 0;
}

std::vector<Real> almost_prime_zeta_all(int kmax, const Real& s, Variant variant, const PrecisionContext& ctx) {
  if (kmax < 0) throw DomainError("kmax must be >= 0");
  if (!s.is_finite() || !(s > 1)) throw DomainError("almost_prime_zeta requires s > 1");
  ctx.validate();
  if (variant == Variant::plain || kmax == 0) return recurrence(kmax, s, variant, false, ctx).z;
  int extra = 0;
  for (int k = 1; k <= kmax; ++k) extra = std::max(extra, moebius_cancellation_digits(k, s, ctx));
  std::vector<Real> z = recurrence(kmax, s, variant, false, ctx.escalated(extra)).z;
  for (auto& v : z) v = v.with_precision(ctx.working_bits());
  return z;
}

Real almost_prime_zeta_via_recurrence(int k, const Real& s, const PrecisionContext& ctx) {
  check_request(k, s, "almost_prime_zeta");
  ctx.validate();
  return recurrence(k, s, Variant::plain, false, ctx).z.back();
}

Real almost_prime_zeta_partition_sum(int k, const Real& s, const PrecisionContext& ctx) {
  check_request(k, s, "almost_prime_zeta");
  ctx.validate();
  return partition_sum(k, s, Variant::plain, false, ctx);
}

Real almost_prime_zeta(int k, const Real& s, const PrecisionContext& ctx, Evaluation method) {
  return method == Evaluation::recurrence ? almost_prime_zeta_via_recurrence(k, s, ctx)
                                          : almost_prime_zeta_partition_sum(k, s, ctx);
}

Real almost_prime_zeta_prime(int k, const Real& s, const PrecisionContext& ctx, Evaluation method) {
  check_request(k, s, "almost_prime_zeta_prime");
  ctx.validate();
  if (method == Evaluation::partition_sum) return partition_sum(k, s, Variant::plain, true, ctx);
  return recurrence(k, s, Variant::plain, true, ctx).dz.back();
}

Real almost_prime_zeta_moebius(int k, const Real& s, const PrecisionContext& ctx, Evaluation method) {
  check_request(k, s, "almost_prime_zeta_moebius");
  ctx.validate();
  return with_cancellation_control(k, s, ctx, [&](const PrecisionContext& work, double& max_term) {
    if (method == Evaluation::partition_sum) {
      // every partition term is bounded by the plain value
      max_term = almost_prime_zeta_via_recurrence(k, s, work).log10_abs();
      return partition_sum(k, s, Variant::moebius, false, work);
    }
    Series r = recurrence(k, s, Variant::moebius, false, work);
    max_term = r.max_term_log10;
    return r.z.back();
  });
}

Real almost_prime_zeta_moebius_prime(int k, const Real& s, const PrecisionContext& ctx) {
  check_request(k, s, "almost_prime_zeta_moebius_prime");
  ctx.validate();
  // the derivative carries an extra log factor per term, which the
  // monitoring loop absorbs
  return with_cancellation_control(k, s, ctx, [&](const PrecisionContext& work, double& max_term) {
    Series r = recurrence(k, s, Variant::moebius, true, work);
    max_term = r.max_term_log10;
    return r.dz.back();
  });
}

Real evaluate(const AlmostPrimeZetaRequest& request, const PrecisionContext& ctx) {
  if (request.variant == Variant::plain)
    return request.derivative ? almost_prime_zeta_prime(request.k, request.s, ctx)
                              : almost_prime_zeta(request.k, request.s, ctx);
  return request.derivative ? almost_prime_zeta_moebius_prime(request.k, request.s, ctx)
                            : almost_prime_zeta_moebius(request.k, request.s, ctx);
}

Real odd_index_sum(const Real& t, Variant variant, const PrecisionContext& ctx) {
  if (!t.is_finite() || !(t > 1)) throw DomainError("odd_index_sum requires an argument > 1");
  ctx.validate();
  PrecisionScope scope(ctx.working_bits());
  const Real z = zeta(t, ctx);
  const Real z2 = zeta(t * 2, ctx);
  const Real plain = (z * z - z2) / (2 * z);
  return variant == Variant::plain ? plain : -plain / z2;
}

}  // namespace apz
