#include "apz/derived_constants.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "apz/errors.hpp"
#include "apz/prime_zeta.hpp"
#include "apz/zeta.hpp"

namespace apz {

namespace {

double primorial_log10(int k) {
  double acc = 0;
  for (auto p : first_primes(k)) acc += std::log10(static_cast<double>(p));
  return acc;
}

// P_k(t+1) <= r P_k(t): every n in the sum is at least 2^k (p_k# when square-free)
double decay_ratio(int k, Variant v) {
  return v == Variant::plain ? std::exp2(-k) : std::pow(10.0, -primorial_log10(k));
}

Real Pk(int k, const Real& t, Variant v, const PrecisionContext& ctx) {
  return v == Variant::plain ? almost_prime_zeta(k, t, ctx) : almost_prime_zeta_moebius(k, t, ctx);
}

Real dPk(int k, const Real& t, Variant v, const PrecisionContext& ctx) {
  return v == Variant::plain ? almost_prime_zeta_prime(k, t, ctx) : almost_prime_zeta_moebius_prime(k, t, ctx);
}

void require_orders(int k, int s, const char* what) {
  if (k < 1) throw DomainError(std::string(what) + " requires k >= 1");
  if (s < 1) throw DomainError(std::string(what) + " requires s >= 1");
}

// Evaluates with `extra` digits and retries with more when the largest
// contribution exceeds the result by more than the guard digits can absorb.
template <class Eval>
Real monitored(const PrecisionContext& ctx, int extra, Eval eval) {
  for (int attempt = 0;; ++attempt) {
    const PrecisionContext work = ctx.escalated(extra);
    double max_log10 = -std::numeric_limits<double>::infinity();
    const Real r = eval(work, max_log10);
    const double lost = r.is_zero() ? std::numeric_limits<double>::infinity() : max_log10 - r.log10_abs();
    if (lost <= extra + ctx.guard / 2.0) return r.with_precision(ctx.working_bits());
    if (attempt >= 4) throw NumericError("cancellation could not be controlled by raising the precision");
    extra = std::isfinite(lost) ? static_cast<int>(std::ceil(lost)) + 2 : 2 * extra + 16;
  }
}

// sum_{t >= first} P_k(t), certified by the geometric decay of P_k in t
Real tail_sum(int k, long first, Variant v, const PrecisionContext& ctx) {
  const Bits bits = ctx.working_bits();
  PrecisionScope scope(bits);
  const double r = decay_ratio(k, v);
  const Real factor(r / (1 - r));
  const Real tol = ctx.series_tol();
  Real sum = 0;
  for (long t = first;; ++t) {
    const Real term = Pk(k, Real(t), v, ctx);
    sum += term;
    if (abs(term) * factor < tol * abs(sum)) break;
    if (t - first > 100000) throw NumericError("almost-prime tail sum did not converge");
  }
  return sum;
}

}  // namespace

Real zeta_partial_fraction_sum(int s, const PrecisionContext& ctx) {
  if (s < 1) throw DomainError("zeta_partial_fraction_sum requires s >= 1");
  ctx.validate();
  if (s == 1) return Real::zero(ctx.working_bits()) + 1;
  // the result exceeds 2^-s while the zeta values are of order one
  const int extra = static_cast<int>(std::ceil(std::log10(s) + s * std::log10(2.0))) + 2;
  const PrecisionContext work = ctx.escalated(extra);
  PrecisionScope scope(work.working_bits());
  Real acc(s);
  for (long l = 2; l <= s; ++l) acc -= zeta(Real(l), work);
  return acc.with_precision(ctx.working_bits());
}

Real B_geometric(int k, int s, const PrecisionContext& ctx) {
  require_orders(k, s, "B");
  ctx.validate();
  return tail_sum(k, s + 1, Variant::plain, ctx);
}

Real B(int k, int s, const PrecisionContext& ctx) {
  require_orders(k, s, "B");
  ctx.validate();
  if (s == 1) return tail_sum(k, 2, Variant::plain, ctx);
  // B_{k,s} >= 1/(2^{ks} (2^k - 1)) while B_{k,1} < 1
  const int extra = static_cast<int>(std::ceil(k * s * std::log10(2.0) + std::log10(std::exp2(k) - 1))) + 2;
  const PrecisionContext work = ctx.escalated(extra);
  PrecisionScope scope(work.working_bits());
  Real acc = tail_sum(k, 2, Variant::plain, work);
  for (long l = 2; l <= s; ++l) acc -= almost_prime_zeta(k, Real(l), work);
  return acc.with_precision(ctx.working_bits());
}

Real B_moebius_geometric(int k, int s, const PrecisionContext& ctx) {
  require_orders(k, s, "B_moebius");
  ctx.validate();
  return tail_sum(k, s + 1, Variant::moebius, ctx);
}

Real B_moebius(int k, int s, const PrecisionContext& ctx) {
  require_orders(k, s, "B_moebius");
  ctx.validate();
  if (s == 1) return tail_sum(k, 2, Variant::moebius, ctx);
  // |B^mu_{k,s}| >= (p_k#)^-s / (p_k# - 1)
  const double lp = primorial_log10(k);
  const int extra = static_cast<int>(std::ceil((s + 1) * lp)) + 2;
  const PrecisionContext work = ctx.escalated(extra);
  PrecisionScope scope(work.working_bits());
  Real acc = tail_sum(k, 2, Variant::moebius, work);
  for (long l = 2; l <= s; ++l) acc -= almost_prime_zeta_moebius(k, Real(l), work);
  return acc.with_precision(ctx.working_bits());
}

Real squared_prime_constant(int s, const PrecisionContext& ctx) {
  if (s < 1) throw DomainError("squared_prime_constant requires s >= 1");
  ctx.validate();
  const Bits bits = ctx.working_bits();
  PrecisionScope scope(bits);
  const Real tol = ctx.series_tol();
  auto& cache = PrimeZetaCache::global();
  Real direct = 0;
  // P(t + 2) <= P(t)/4, so the tail after a term is at most a third of it
  for (long l = 0;; ++l) {
    const Real term = cache.value(Real(2 * (1 + s + l)), ctx);
    direct += term;
    if (term < 3 * tol * direct) break;
  }
  const Real other = B(2, s, ctx) - B_moebius(2, s, ctx);
  if (abs(direct - other) > power_of_ten(-(ctx.digits + ctx.guard / 2), bits) * direct)
    throw VerificationError("squared prime constant: the two evaluation routes disagree");
  return direct;
}

namespace {

Real hurwitz_series(int k, const Real& s_in, const Real& a_in, Variant v, bool derivative,
                    const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("Hurwitz almost-prime zeta requires k >= 1");
  if (!s_in.is_finite() || !(s_in > 1)) throw DomainError("Hurwitz almost-prime zeta requires s > 1");
  if (!a_in.is_finite() || !(a_in > -1) || !(a_in < 3))
    throw DomainError("Hurwitz almost-prime zeta requires -1 < a < 3");
  ctx.validate();
  const double r = decay_ratio(k, v);
  const double spread = std::fabs(1 - a_in.to_double());
  if (spread * r >= 1) throw DomainError("binomial series in (1 - a) diverges for this k and a");
  if (a_in == 1) return derivative ? dPk(k, s_in, v, ctx) : Pk(k, s_in, v, ctx);

  const double sd = s_in.to_double();
  return monitored(ctx, 0, [&](const PrecisionContext& work, double& max_log10) {
    const Bits bits = work.working_bits();
    PrecisionScope scope(bits);
    const Real s = s_in.with_precision(bits);
    const Real x = 1 - a_in.with_precision(bits);
    const Real tol = work.series_tol();
    Real sum = 0, c = 1, h = 0;  // c = (s)_l (1-a)^l / l!,  h = psi(s+l) - psi(s)
    double h_d = 0;
    for (long l = 0;; ++l) {
      if (l > 200000) throw NumericError("Hurwitz binomial series did not converge");
      const Real t = s + l;
      const Real p = Pk(k, t, v, work);
      Real term, size;
      if (derivative) {
        const Real dp = dPk(k, t, v, work);
        term = c * (h * p + dp);
        size = abs(c) * (h * abs(p) + abs(dp));
      } else {
        term = c * p;
        size = abs(term);
      }
      sum += term;
      if (!size.is_zero()) max_log10 = std::max(max_log10, size.log10_abs());

      // ratio bound for every later contribution; decreasing in l
      double rho = spread * (sd + l) / (l + 1) * r;
      const double h_next = h_d + 1 / (sd + l);
      if (derivative) rho *= l == 0 ? std::numeric_limits<double>::infinity() : h_next / h_d;
      if (l >= 1 && rho < 1 && size * Real(rho / (1 - rho)) < tol * abs(sum)) break;

      c *= x * (s + l);
      c /= l + 1;
      h += 1 / (s + l);
      h_d = h_next;
    }
    return sum;
  });
}

}  // namespace

Real hurwitz_almost_prime(int k, const Real& s, const Real& a, Variant variant, const PrecisionContext& ctx) {
  return hurwitz_series(k, s, a, variant, false, ctx);
}

Real hurwitz_almost_prime_prime(int k, const Real& s, const Real& a, const PrecisionContext& ctx, Variant variant) {
  return hurwitz_series(k, s, a, variant, true, ctx);
}

TauTable& TauTable::global() {
  static TauTable table;
  return table;
}

Rational TauTable::tau(int i, int l) {
  if (i < 2 || i > l) throw DomainError("tau requires 2 <= i <= l");
  std::lock_guard lock(mutex_);
  if (auto it = values_.find({i, l}); it != values_.end()) return it->second;
  // fill every (i', l') with l' <= l so the recurrence finds its inputs
  for (int ll = 2; ll <= l; ++ll)
    for (int ii = 2; ii <= ll; ++ii)
      if (!values_.count({ii, ll})) values_[{ii, ll}] = compute(ii, ll);
  return values_.at({i, l});
}

Rational TauTable::compute(int i, int l) {
  if (i == 2) return Rational(2 * l - 1, 2);
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(l - 1), static_cast<unsigned long>(i - 1));
  const Rational signed_binom = (i % 2 == 0) ? Rational(binom) : Rational(-binom);
  Rational r = (signed_binom - Rational(l) * values_.at({i - 1, l - 1})) / Rational(i);
  r.canonicalize();
  return r;
}

Rational tau(int i, int l) { return TauTable::global().tau(i, l); }

Real L(int k, int l, const PrecisionContext& ctx) {
  if (k < 1 || l < 1) throw DomainError("L requires k >= 1 and l >= 1");
  ctx.validate();
  const double r = decay_ratio(k, Variant::plain);
  return monitored(ctx, 0, [&](const PrecisionContext& work, double& max_log10) {
    const Bits bits = work.working_bits();
    PrecisionScope scope(bits);
    Real polynomial_part = 0;
    for (int i = 2; i <= l; ++i) {
      const Real term = Real::from_rational(tau(i, l), bits) * almost_prime_zeta(k, Real(i), work);
      polynomial_part += term;
      max_log10 = std::max(max_log10, term.log10_abs());
    }
    // sum_{s>=1} P_k(s+l) / (s (s+1) ... (s+l))
    const Real tol = work.series_tol();
    Real series = 0;
    for (long s = 1;; ++s) {
      Real denominator = 1;
      for (long i = 0; i <= l; ++i) denominator *= s + i;
      const Real term = almost_prime_zeta(k, Real(s + l), work) / denominator;
      series += term;
      const double rho = r * static_cast<double>(s) / static_cast<double>(s + l + 1);
      if (term * Real(rho / (1 - rho)) < tol * series) break;
      if (s > 100000) throw NumericError("L series did not converge");
    }
    Integer l_factorial;
    mpz_fac_ui(l_factorial.get_mpz_t(), static_cast<unsigned long>(l));
    Real scaled = series * Real(l_factorial);
    max_log10 = std::max(max_log10, scaled.log10_abs());
    return l % 2 == 0 ? polynomial_part - scaled : polynomial_part + scaled;
  });
}

std::uint64_t log2_component_limit(int k, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("log2_component requires k >= 1");
  if (k > 40) throw ResourceError("log2_component order " + std::to_string(k) + " needs an astronomically large sieve");
  // the component exceeds 2^-(2^k) / 2^k; the tail past N is below 2^-N
  const double n = std::ceil(ctx.working_digits() * std::log2(10.0) + std::exp2(k) + k + 8);
  return static_cast<std::uint64_t>(n);
}

Real log2_component(int k, const PrecisionContext& ctx) {
  ctx.validate();
  const std::uint64_t n = log2_component_limit(k, ctx);
  return log2_component(k, build_sieve(n), ctx);
}

Real log2_component(int k, const FactorSieve& sieve, const PrecisionContext& ctx) {
  ctx.validate();
  const std::uint64_t n = log2_component_limit(k, ctx);
  if (sieve.limit() < n)
    throw ResourceError("log2_component needs a sieve up to " + std::to_string(n) + ", got " +
                        std::to_string(sieve.limit()));
  const Bits bits = ctx.working_bits();
  PrecisionScope scope(bits);
  const auto omega = sieve.big_omega_table();
  Real sum = 0;
  for (std::uint64_t m = 2; m <= n; ++m) {
    if (omega[m] != k) continue;
    Real term = Real(1) / Real(m);
    mpfr_div_2ui(term.get(), term.get(), static_cast<unsigned long>(m), MPFR_RNDN);
    sum += term;
  }
  return sum;
}

Real factorial_reciprocal_identity(int k, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("factorial_reciprocal_identity requires k >= 1");
  ctx.validate();
  const Bits bits = ctx.working_bits();
  PrecisionScope scope(bits);
  const unsigned long n0 = 8UL * static_cast<unsigned long>(k) + 8;

  // exact head
  Rational head = 0;
  for (unsigned long n = 1; n <= n0; ++n) {
    Integer product = 1;
    for (unsigned long i = 0; i <= static_cast<unsigned long>(k); ++i) product *= n + i;
    head += Rational(Integer(1), product);
  }
  head.canonicalize();

  Integer k_factorial;
  mpz_fac_ui(k_factorial.get_mpz_t(), static_cast<unsigned long>(k));
  const Rational exact(Integer(1), k_factorial * k);
  const double target = ctx.log10_tol() + std::log10(exact.get_d());

  // 1/(n (n+1) ... (n+k)) = sum_m a_m n^-(k+1+m), a_m = (-1)^m h_m(1..k)
  std::vector<Integer> h(static_cast<std::size_t>(k) + 1, Integer(1));  // h_0(1..j) = 1
  Real tail = 0;
  const double q = static_cast<double>(n0 + 1);
  for (long m = 0;; ++m) {
    if (m > 0) {
      // h_m(1..j) = h_m(1..j-1) + j h_{m-1}(1..j)
      h[0] = 0;
      for (int j = 1; j <= k; ++j) h[j] = h[j - 1] + j * h[j];
    }
    const Real coefficient(m % 2 == 0 ? h[k] : Integer(-h[k]));
    tail += coefficient * hurwitz_zeta(Real(k + 1 + m), n0 + 1, ctx);

    // |a_m| <= C(m+k-1, k-1) k^m and zeta(t, q) <= q^-t (1 + q/(t-1))
    const double next = static_cast<double>(m + 1);
    const double log10_binom = (std::lgamma(next + k) - std::lgamma(static_cast<double>(k)) - std::lgamma(next + 1)) / std::log(10.0);
    const double log10_major = log10_binom + next * std::log10(k) - (k + 1 + next) * std::log10(q) +
                               std::log10(1 + q / (k + next));
    const double rho = k * (next + k) / ((next + 1) * q);
    if (rho < 1 && log10_major - std::log10(1 - rho) < target) break;
    if (m > 100000) throw NumericError("factorial reciprocal tail did not converge");
  }
  const Real series = Real::from_rational(head, bits) + tail;
  const Real expected = Real::from_rational(exact, bits);
  if (abs(series - expected) > power_of_ten(-(ctx.digits + ctx.guard / 2), bits) * expected)
    throw VerificationError("series for 1/(k k!) disagrees with the exact value");
  return series;
}

}  // namespace apz
