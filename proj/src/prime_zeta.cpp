#include "apz/prime_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "apz/errors.hpp"
#include "apz/factor_sieve.hpp"
#include "apz/zeta.hpp"

namespace apz {

namespace {

void require_above_one(const Real& s, const char* what) {
  if (!s.is_finite() || !(s > 1)) throw DomainError(std::string(what) + " requires s > 1");
}

void require_prime_cutoff(std::uint64_t m) {
  if (!is_prime(m)) throw DomainError("cutoff " + std::to_string(m) + " is not prime");
}

std::string exact_key(const Real& t) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%Ra", t.get());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

// log10 of the bound |log P(M,t)| <= q^-t (1 + q/(t-1)), q the prime after M
double log10_log_product_bound(double q, double t) {
  return -t * std::log10(q) + std::log10(1 + q / (t - 1));
}

// log10 of |P'(M,t)/P(M,t)| <= 2 [log q q^-t + q^(1-t) (log q/(t-1) + 1/(t-1)^2)]
double log10_log_derivative_bound(double q, double t) {
  const double lq = std::log(q);
  const double inner = lq + q * (lq / (t - 1) + 1 / ((t - 1) * (t - 1)));
  return std::log10(2 * inner) - t * std::log10(q);
}

// log2 |x| for a nonzero rational
double log2_abs(const Rational& x) {
  long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, x.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, x.get_den_mpz_t());
  return std::log2(std::fabs(mn)) + static_cast<double>(en) - std::log2(md) - static_cast<double>(ed);
}

// max |c_j|^(1/j) over the upper half of the list (element i is c_{i+2})
double growth_rate(const std::vector<Rational>& coeffs) {
  double rho = 0;
  for (std::size_t i = coeffs.size() / 2; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    rho = std::max(rho, std::exp2(log2_abs(coeffs[i]) / static_cast<double>(i + 2)));
  }
  return rho;
}

Polynomial trimmed(Polynomial p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

}  // namespace

PrimeZetaCache& PrimeZetaCache::global() {
  static PrimeZetaCache cache;
  return cache;
}

Real PrimeZetaCache::value(const Real& t, const PrecisionContext& ctx) {
  Key key{ctx.working_bits(), ctx.cutoff_prime, exact_key(t)};
  {
    std::lock_guard lock(mutex_);
    if (auto it = values_.find(key); it != values_.end()) return it->second;
  }
  Real v = prime_zeta(t, ctx);
  std::lock_guard lock(mutex_);
  return values_.emplace(std::move(key), std::move(v)).first->second;
}

Real PrimeZetaCache::derivative(const Real& t, const PrecisionContext& ctx) {
  Key key{ctx.working_bits(), ctx.cutoff_prime, exact_key(t)};
  {
    std::lock_guard lock(mutex_);
    if (auto it = derivatives_.find(key); it != derivatives_.end()) return it->second;
  }
  Real v = prime_zeta_prime(t, ctx);
  std::lock_guard lock(mutex_);
  return derivatives_.emplace(std::move(key), std::move(v)).first->second;
}

std::size_t PrimeZetaCache::size() const {
  std::lock_guard lock(mutex_);
  return values_.size() + derivatives_.size();
}

void PrimeZetaCache::clear() {
  std::lock_guard lock(mutex_);
  values_.clear();
  derivatives_.clear();
}

Real partial_product(std::uint64_t m, const Real& s, const PrecisionContext& ctx) {
  require_above_one(s, "partial_product");
  require_prime_cutoff(m);
  PrecisionScope scope(ctx.working_bits());
  const Real t = s.with_precision(ctx.working_bits());
  Real product = zeta(t, ctx);
  for (auto p : primes_up_to(m)) product *= 1 - inverse_power(p, t);
  return product;
}

Real log_partial_product(std::uint64_t m, const Real& s, const PrecisionContext& ctx) {
  require_above_one(s, "log_partial_product");
  require_prime_cutoff(m);
  PrecisionScope scope(ctx.working_bits());
  const Real t = s.with_precision(ctx.working_bits());
  // log zeta(t) = log1p(zeta(t) - 1) keeps full relative accuracy of the 2^-t
  // leading term even when t is large
  Real acc = log1p(hurwitz_zeta(t, 2, ctx));
  for (auto p : primes_up_to(m)) acc += log1p(-inverse_power(p, t));
  return acc;
}

Real log_partial_product_derivative(std::uint64_t m, const Real& s, const PrecisionContext& ctx) {
  require_above_one(s, "log_partial_product_derivative");
  require_prime_cutoff(m);
  const Bits bits = ctx.working_bits();
  PrecisionScope scope(bits);
  const Real t = s.with_precision(bits);
  Real acc = zeta_log_derivative(t, ctx);
  for (auto p : primes_up_to(m)) {
    const Real x = inverse_power(p, t);
    acc += log_of(p, bits) * x / (1 - x);
  }
  return acc;
}

Real prime_zeta(const Real& s_in, const PrecisionContext& ctx) {
  require_above_one(s_in, "prime_zeta");
  ctx.validate();
  const Bits bits = ctx.working_bits();
  PrecisionScope scope(bits);
  const Real s = s_in.with_precision(bits);
  const std::uint64_t m = ctx.cutoff_prime;

  Real direct = 0;
  for (auto p : primes_up_to(m)) direct += inverse_power(p, s);

  const double q = static_cast<double>(next_prime(m));
  const double sd = s.to_double();
  const double target = ctx.log10_tol() + direct.log10_abs();
  Real correction = 0;
  for (long n = 1;; ++n) {
    // all remaining terms together stay below 1.2 times the n-th bound
    if (std::log10(1.2) + log10_log_product_bound(q, sd * n) - std::log10(n) < target) break;
    if (n > 100000) throw NumericError("prime zeta Moebius series did not terminate");
    const int mu = moebius_of(static_cast<std::uint64_t>(n));
    if (mu == 0) continue;
    const Real term = log_partial_product(m, s * n, ctx) / n;
    if (mu > 0)
      correction += term;
    else
      correction -= term;
  }
  return direct + correction;
}

Real prime_zeta_prime(const Real& s_in, const PrecisionContext& ctx) {
  require_above_one(s_in, "prime_zeta_prime");
  ctx.validate();
  const Bits bits = ctx.working_bits();
  PrecisionScope scope(bits);
  const Real s = s_in.with_precision(bits);
  const std::uint64_t m = ctx.cutoff_prime;

  Real direct = 0;
  for (auto p : primes_up_to(m)) direct -= log_of(p, bits) * inverse_power(p, s);

  const double q = static_cast<double>(next_prime(m));
  const double sd = s.to_double();
  const double target = ctx.log10_tol() + direct.log10_abs();
  Real correction = 0;
  for (long n = 1;; ++n) {
    if (std::log10(1.2) + log10_log_derivative_bound(q, sd * n) < target) break;
    if (n > 100000) throw NumericError("prime zeta derivative series did not terminate");
    const int mu = moebius_of(static_cast<std::uint64_t>(n));
    if (mu == 0) continue;
    const Real term = log_partial_product_derivative(m, s * n, ctx);
    if (mu > 0)
      correction += term;
    else
      correction -= term;
  }
  return direct + correction;
}

Real prime_zeta_moment(int u, const PrecisionContext& ctx) {
  if (u < 1) throw DomainError("moment order u must be >= 1");
  ctx.validate();
  const Bits bits = ctx.working_bits();
  PrecisionScope scope(bits);
  const Real tol = ctx.series_tol();
  auto& cache = PrimeZetaCache::global();
  Real sum = 0;
  // P(s+1) <= P(s)/2, so the tail after a term never exceeds that term
  for (long s = 2;; ++s) {
    const Real term = cache.value(Real(s), ctx) / pow(Real(s), static_cast<long>(u));
    sum += term;
    if (term < tol * sum) break;
  }
  return sum;
}

Real prime_zeta_moment_total(const PrecisionContext& ctx) {
  ctx.validate();
  const Bits bits = ctx.working_bits();
  PrecisionScope scope(bits);
  const Real tol = ctx.series_tol();
  auto& cache = PrimeZetaCache::global();
  Real sum = 0;
  for (long s = 2;; ++s) {
    const Real term = cache.value(Real(s), ctx) / (s - 1);
    sum += term;
    if (term < tol * sum) break;
  }
  return sum;
}

Rational RationalFunction::operator()(std::uint64_t p) const {
  auto horner = [p](const Polynomial& c) {
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * Rational(Integer(static_cast<unsigned long>(p))) + *it;
    return acc;
  };
  const Rational d = horner(denominator);
  if (d == 0) throw DomainError("rational function has a pole at p = " + std::to_string(p));
  Rational r = horner(numerator) / d;
  r.canonicalize();
  return r;
}

std::vector<Rational> expand_rational_to_basis(const Polynomial& numerator_in, const Polynomial& denominator_in,
                                               int order) {
  if (order < 2) throw DomainError("expansion order must be >= 2");
  const Polynomial num = trimmed(numerator_in);
  const Polynomial den = trimmed(denominator_in);
  if (den.empty()) throw DomainError("zero denominator polynomial");
  std::vector<Rational> a(static_cast<std::size_t>(order) + 1, Rational(0));
  if (!num.empty()) {
    const long n = static_cast<long>(num.size()) - 1, d = static_cast<long>(den.size()) - 1;
    const long shift = d - n;  // R(1/x) = x^shift * num~(x) / den~(x)
    if (shift < 2) throw BasisError("R(p) must decay like p^-2: it has a constant or 1/p term");
    std::vector<Rational> f(static_cast<std::size_t>(std::max(0L, order - shift)) + 1, Rational(0));
    for (long i = 0; i < static_cast<long>(f.size()); ++i) {
      Rational acc = i <= n ? num[n - i] : Rational(0);
      for (long l = 1; l <= std::min(i, d); ++l) acc -= den[d - l] * f[i - l];
      f[i] = acc / den[d];
      f[i].canonicalize();
      if (i + shift <= order) a[i + shift] = f[i];
    }
  }
  // 1/(p^j - 1) = sum_{m>=1} x^{jm}, so a_m = sum_{j | m, j >= 2} c_j
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int m = 2; m <= order; ++m) {
    Rational acc = a[m];
    for (int j = 2; j < m; ++j)
      if (m % j == 0) acc -= c[j];
    c[m] = acc;
  }
  return {c.begin() + 2, c.end()};
}

Real log_weighted_prime_sum(const std::vector<Rational>& coeffs, const PrecisionContext& ctx) {
  ctx.validate();
  if (coeffs.size() >= 8 && growth_rate(coeffs) >= 2.0)
    throw DivergenceError("coefficients grow like 2^j or faster; the log-weighted sum diverges");
  const Bits bits = ctx.working_bits();
  PrecisionScope scope(bits);
  Real sum = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const long j = static_cast<long>(i) + 2;
    sum -= Real::from_rational(coeffs[i], bits) * zeta_log_derivative(Real(j), ctx);
  }
  return sum;
}

Real log_weighted_prime_sum(const RationalFunction& r, const PrecisionContext& ctx) {
  ctx.validate();
  const Bits bits = ctx.working_bits();
  PrecisionScope scope(bits);
  const std::uint64_t m = ctx.cutoff_prime;
  const double q = static_cast<double>(next_prime(m));

  Real direct = 0;
  for (auto p : primes_up_to(m)) direct += Real::from_rational(r(p), bits) * log_of(p, bits);

  // the remainder over p > M converges like (rho/q)^j with rho the growth of c_j
  int order = 32;
  std::vector<Rational> c;
  for (int attempt = 0;; ++attempt) {
    c = expand_rational_to_basis(r.numerator, r.denominator, order);
    const double rho = std::max(1.0, growth_rate(c));
    if (rho >= q / 2) throw DivergenceError("basis expansion does not converge beyond the cutoff prime");
    const int needed =
        static_cast<int>(std::ceil((ctx.working_digits() + 4 + std::log10(q)) / std::log10(q / rho))) + 4;
    if (needed <= order || attempt == 2) break;
    order = needed;
  }

  Real remainder = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const long j = static_cast<long>(i) + 2;
    remainder -= Real::from_rational(c[i], bits) * log_partial_product_derivative(m, Real(j), ctx);
  }
  return direct + remainder;
}

}  // namespace apz
