#include "apz/oracle.hpp"

#include <algorithm>
#include <string>

#include "apz/errors.hpp"

namespace apz {

namespace {

void check_range(const FactorSieve& sieve, int k, std::uint64_t n) {
  if (k < 1) throw DomainError("oracle requires k >= 1");
  if (n < 2) throw DomainError("oracle limit must be at least 2");
  if (n > sieve.limit())
    throw ResourceError("oracle limit " + std::to_string(n) + " exceeds the sieve limit " +
                        std::to_string(sieve.limit()));
}

void check_s(const Real& s) {
  if (!s.is_finite() || !(s > 1)) throw DomainError("oracle sums require s > 1");
}

// N^(1-s)/(s-1), which majorizes sum_{n>N} n^-s
Real power_tail(const Real& s, std::uint64_t n) {
  return inverse_power(n, s - 1) / (s - 1);
}

constexpr std::uint64_t kChunk = 1 << 16;

// Each term carries a few ulps of error and each addition half an ulp of the
// running sum, so 4 (terms + 1) 2^-bits times the sum of |terms| covers both.
Real rounding_bound(double abs_sum, std::uint64_t terms, Bits bits) {
  Real r = Real(2 * abs_sum) * (4 * (terms + 1));
  mpfr_div_2ui(r.get(), r.get(), static_cast<unsigned long>(bits), MPFR_RNDU);
  return r;
}

// n^-s; integer exponents go through 1/n and mpfr_pow_ui, which is several
// times faster than the general power
class InversePower {
 public:
  explicit InversePower(const Real& s) : s_(s), out_(Real::zero(s.precision())) {
    if (mpfr_integer_p(s.get()) && mpfr_fits_ulong_p(s.get(), MPFR_RNDN)) integer_ = mpfr_get_ui(s.get(), MPFR_RNDN);
  }

  const Real& operator()(std::uint64_t n) {
    if (integer_ == 0) {
      out_ = inverse_power(n, s_);
    } else {
      mpfr_set_ui(out_.get(), static_cast<unsigned long>(n), MPFR_RNDN);
      mpfr_ui_div(out_.get(), 1, out_.get(), MPFR_RNDN);
      mpfr_pow_ui(out_.get(), out_.get(), integer_, MPFR_RNDN);
    }
    return out_;
  }

 private:
  Real s_;
  Real out_;
  unsigned long integer_ = 0;
};

}  // namespace

PrecisionContext oracle_context() {
  PrecisionContext c;
  c.digits = 25;
  c.guard = 5;
  return c;
}

OracleResult direct_Pk(const FactorSieve& sieve, int k, const Real& s_in, std::uint64_t n,
                       const PrecisionContext& ctx) {
  check_range(sieve, k, n);
  check_s(s_in);
  const Bits bits = ctx.working_bits();
  PrecisionScope scope(bits);
  const Real s = s_in.with_precision(bits);
  const auto omega = sieve.big_omega_table();
  OracleResult r{Real(0), power_tail(s, n), 0, Real(0)};
  InversePower power(s);
  Real chunk = 0;
  for (std::uint64_t m = 2; m <= n; ++m) {
    if (omega[m] == k) {
      chunk += power(m);
      ++r.terms_used;
    }
    if (m % kChunk == 0) {
      r.partial_sum += chunk;
      chunk = 0;
    }
  }
  r.partial_sum += chunk;
  r.rounding_bound = rounding_bound(r.partial_sum.to_double(), r.terms_used, bits);
  return r;
}

OracleResult direct_Pk_moebius(const FactorSieve& sieve, int k, const Real& s_in, std::uint64_t n,
                               const PrecisionContext& ctx) {
  check_range(sieve, k, n);
  check_s(s_in);
  const Bits bits = ctx.working_bits();
  PrecisionScope scope(bits);
  const Real s = s_in.with_precision(bits);
  const auto omega = sieve.big_omega_table();
  const auto mu = sieve.moebius_table();
  OracleResult r{Real(0), power_tail(s, n), 0, Real(0)};
  InversePower power(s);
  Real chunk = 0;
  double abs_sum = 0;
  for (std::uint64_t m = 2; m <= n; ++m) {
    if (omega[m] == k && mu[m] != 0) {
      const Real& t = power(m);
      abs_sum += t.to_double();
      if (mu[m] > 0)
        chunk += t;
      else
        chunk -= t;
      ++r.terms_used;
    }
    if (m % kChunk == 0) {
      r.partial_sum += chunk;
      chunk = 0;
    }
  }
  r.partial_sum += chunk;
  r.rounding_bound = rounding_bound(abs_sum, r.terms_used, bits);
  return r;
}

OracleResult direct_weighted(const FactorSieve& sieve, int k, const Real& s_in, std::uint64_t n, OracleWeight weight,
                             const PrecisionContext& ctx) {
  check_range(sieve, k, n);
  const Bits bits = ctx.working_bits();
  PrecisionScope scope(bits);
  const auto omega = sieve.big_omega_table();
  OracleResult r{Real(0), Real(0), 0, Real(0)};
  Real s;
  if (weight == OracleWeight::reciprocal_shift) {
    // the extra 1/(n-1) keeps s = 1 convergent
    if (!s_in.is_finite() || !(s_in > 0)) throw DomainError("shifted reciprocal sums require s > 0");
    s = s_in.with_precision(bits);
  } else if (weight == OracleWeight::log_shift) {
    check_s(s_in);
    s = s_in.with_precision(bits);
  }
  switch (weight) {
    case OracleWeight::reciprocal_shift:
      // 1/(n^s (n-1)) <= 2 n^-(s+1) for n >= 2
      r.tail_bound = 2 * inverse_power(n, s) / s;
      break;
    case OracleWeight::log_shift: {
      // sum_{m>=N} log m m^-s <= log N N^-s + int_N^inf log x x^-s dx
      const Real ln = log_of(n, bits), sm1 = s - 1;
      r.tail_bound = ln * inverse_power(n, s) + inverse_power(n, sm1) * (ln / sm1 + 1 / (sm1 * sm1));
      break;
    }
    case OracleWeight::pow2: {
      Real t = Real(1) / Real(n + 1);
      mpfr_div_2ui(t.get(), t.get(), static_cast<unsigned long>(n), MPFR_RNDN);
      r.tail_bound = t;
      break;
    }
  }
  InversePower power(weight == OracleWeight::pow2 ? Real(2) : s);
  Real chunk = 0, term = Real::zero(bits);
  for (std::uint64_t m = 2; m <= n; ++m) {
    if (omega[m] == k) {
      switch (weight) {
        case OracleWeight::reciprocal_shift:
          mpfr_div_ui(term.get(), power(m).get(), static_cast<unsigned long>(m - 1), MPFR_RNDN);
          chunk += term;
          break;
        case OracleWeight::log_shift:
          mpfr_set_ui(term.get(), static_cast<unsigned long>(m - 1), MPFR_RNDN);
          mpfr_log(term.get(), term.get(), MPFR_RNDN);
          mpfr_mul(term.get(), term.get(), power(m - 1).get(), MPFR_RNDN);
          chunk += term;
          break;
        case OracleWeight::pow2: {
          Real t = Real(1) / Real(m);
          mpfr_div_2ui(t.get(), t.get(), static_cast<unsigned long>(m), MPFR_RNDN);
          chunk += t;
          break;
        }
      }
      ++r.terms_used;
    }
    if (m % kChunk == 0) {
      r.partial_sum += chunk;
      chunk = 0;
    }
  }
  r.partial_sum += chunk;
  r.rounding_bound = rounding_bound(r.partial_sum.to_double(), r.terms_used, bits);
  return r;
}

OracleBatch direct_batch(const FactorSieve& sieve, int kmax, const std::vector<long>& s_values, std::uint64_t n,
                         const PrecisionContext& ctx) {
  check_range(sieve, kmax, n);
  if (s_values.empty()) throw DomainError("oracle batch needs at least one exponent");
  for (long s : s_values)
    if (s < 2) throw DomainError("oracle batch exponents must be integers >= 2");
  const Bits bits = ctx.working_bits();
  PrecisionScope scope(bits);

  // exponents in ascending order so each power is one multiplication away
  std::vector<std::size_t> order(s_values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return s_values[a] < s_values[b]; });

  const std::size_t ks = static_cast<std::size_t>(kmax), ns = s_values.size();
  std::vector<Real> total_plain(ks * ns, Real(0)), total_mu(ks * ns, Real(0));
  std::vector<Real> chunk_plain(ks * ns, Real(0)), chunk_mu(ks * ns, Real(0));
  std::vector<std::uint64_t> count_plain(ks, 0), count_mu(ks, 0);
  const auto omega = sieve.big_omega_table();
  const auto mu = sieve.moebius_table();

  Real inv = 0, power = 0, step = 0;
  for (std::uint64_t m = 2; m <= n; ++m) {
    const int k = omega[m];
    if (k <= kmax) {
      mpfr_set_ui(inv.get(), static_cast<unsigned long>(m), MPFR_RNDN);
      mpfr_ui_div(inv.get(), 1, inv.get(), MPFR_RNDN);
      long current = 0;
      for (std::size_t idx : order) {
        const long s = s_values[idx];
        if (current == 0) {
          mpfr_pow_ui(power.get(), inv.get(), static_cast<unsigned long>(s), MPFR_RNDN);
        } else if (s > current) {
          mpfr_pow_ui(step.get(), inv.get(), static_cast<unsigned long>(s - current), MPFR_RNDN);
          mpfr_mul(power.get(), power.get(), step.get(), MPFR_RNDN);
        }
        current = s;
        const std::size_t slot = static_cast<std::size_t>(k - 1) * ns + idx;
        mpfr_add(chunk_plain[slot].get(), chunk_plain[slot].get(), power.get(), MPFR_RNDN);
        if (mu[m] > 0)
          mpfr_add(chunk_mu[slot].get(), chunk_mu[slot].get(), power.get(), MPFR_RNDN);
        else if (mu[m] < 0)
          mpfr_sub(chunk_mu[slot].get(), chunk_mu[slot].get(), power.get(), MPFR_RNDN);
      }
      ++count_plain[k - 1];
      if (mu[m] != 0) ++count_mu[k - 1];
    }
    if (m % kChunk == 0 || m == n) {
      for (std::size_t i = 0; i < ks * ns; ++i) {
        total_plain[i] += chunk_plain[i];
        total_mu[i] += chunk_mu[i];
        mpfr_set_zero(chunk_plain[i].get(), 1);
        mpfr_set_zero(chunk_mu[i].get(), 1);
      }
    }
  }

  OracleBatch out;
  out.s_values = s_values;
  out.plain.resize(ks);
  out.moebius.resize(ks);
  for (std::size_t k = 0; k < ks; ++k) {
    for (std::size_t i = 0; i < ns; ++i) {
      const Real tail = power_tail(Real(s_values[i]), n);
      // the plain sum majorizes the absolute square-free terms
      const double abs_sum = total_plain[k * ns + i].to_double();
      out.plain[k].push_back({total_plain[k * ns + i], tail, count_plain[k], rounding_bound(abs_sum, count_plain[k], bits)});
      out.moebius[k].push_back({total_mu[k * ns + i], tail, count_mu[k], rounding_bound(abs_sum, count_mu[k], bits)});
    }
  }
  return out;
}

}  // namespace apz
