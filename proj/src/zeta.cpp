#include "apz/zeta.hpp"

#include <cmath>
#include <optional>

#include "apz/errors.hpp"

namespace apz {

BernoulliTable& BernoulliTable::global() {
  static BernoulliTable table;
  return table;
}

void BernoulliTable::extend_to(int pairs) {
  if (even_.empty()) {
    even_.emplace_back(1);
    weight_.emplace_back(1);
  }
  Integer factorial = 1;
  for (int j = 1; j < static_cast<int>(even_.size()); ++j) factorial *= (2 * j - 1) * (2 * j);
  for (int j = static_cast<int>(even_.size()); j < pairs; ++j) {
    const unsigned long m = 2UL * static_cast<unsigned long>(j);
    Integer binom;
    // sum_{k<m} C(m+1,k) B_k with B_1 = -1/2 and the other odd terms zero
    Rational acc = Rational(1) - Rational(m + 1, 2);
    for (unsigned long k = 2; k < m; k += 2) {
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, k);
      acc += Rational(binom) * even_[k / 2];
    }
    Rational b = -acc / Rational(m + 1);
    b.canonicalize();
    even_.push_back(b);
    factorial *= (m - 1) * m;
    Rational w = b / Rational(factorial);
    w.canonicalize();
    weight_.push_back(w);
  }
}

Rational BernoulliTable::bernoulli(int n) {
  if (n < 0) throw DomainError("Bernoulli index must be non-negative");
  if (n == 1) return Rational(-1, 2);
  if (n % 2 == 1) return Rational(0);
  std::lock_guard lock(mutex_);
  if (n / 2 >= static_cast<int>(even_.size())) extend_to(n / 2 + 1);
  return even_[n / 2];
}

Rational BernoulliTable::euler_maclaurin_weight(int k) {
  std::lock_guard lock(mutex_);
  if (k >= static_cast<int>(weight_.size())) extend_to(std::max(k + 1, 2 * static_cast<int>(weight_.size())));
  return weight_[k];
}

namespace {

struct PowerSums {
  Real value;
  Real derivative;
};

// sum_{n>=a} n^{-s} and, optionally, -sum_{n>=a} log(n) n^{-s} by
// Euler-Maclaurin: N direct terms, then the integral, the half term and
// B_{2k} corrections until the next correction is below the tolerance.
// N is doubled whenever the asymptotic corrections start growing first.
PowerSums power_sums(const Real& s_in, std::uint64_t a, bool with_derivative, const PrecisionContext& ctx) {
  const Bits bits = ctx.working_bits() + 16;
  PrecisionScope scope(bits);
  const Real s = s_in.with_precision(bits);
  const Real tol = power_of_ten(-ctx.working_digits() - 2, bits);
  const Real s_minus_1 = s - 1;
  auto& bern = BernoulliTable::global();

  std::uint64_t n_direct = static_cast<std::uint64_t>(std::max(16.0, 0.45 * ctx.working_digits()));
  for (int attempt = 0; attempt < 12; ++attempt, n_direct *= 2) {
    Real value = 0, derivative = 0;
    bool done = false;
    for (std::uint64_t i = 0; i < n_direct; ++i) {
      const std::uint64_t n = a + i;
      const Real term = inverse_power(n, s);
      value += term;
      Real log_n;
      if (with_derivative) {
        log_n = log_of(n, bits);
        derivative -= log_n * term;
      }
      // integral bounds on the remaining direct tail
      if (n >= 3) {
        const Real tail = term * n / s_minus_1;
        bool small = tail < tol * value;
        if (small && with_derivative) {
          const Real dtail = tail * (log_n + 1 / s_minus_1);
          small = dtail < tol * abs(derivative);
        }
        if (small) {
          done = true;
          break;
        }
      }
    }
    if (done) return {value, derivative};

    const std::uint64_t x_int = a + n_direct;
    const Real x = Real(x_int);
    const Real log_x = log_of(x_int, bits);
    const Real x_pow = inverse_power(x_int, s);  // X^{-s}
    value += x_pow * x / s_minus_1 + x_pow / 2;
    if (with_derivative) {
      derivative -= x_pow * x * (log_x / s_minus_1 + 1 / (s_minus_1 * s_minus_1));
      derivative -= log_x * x_pow / 2;
    }

    // term_k = w_k (s)_{2k-1} X^{-s-2k+1}
    Real poch = s;                 // (s)_{2k-1}
    Real harmonic = 1 / s;         // sum_{j<2k-1} 1/(s+j)
    Real x_power = x_pow / x;      // X^{-s-2k+1}
    const Real inv_x2 = 1 / (x * x);
    std::optional<Real> previous;
    bool converged = false;
    for (int k = 1; k < 8 * ctx.working_digits() + 64; ++k) {
      const Real w = Real::from_rational(bern.euler_maclaurin_weight(k), bits);
      const Real term = w * poch * x_power;
      const Real dterm = term * (harmonic - log_x);
      const Real magnitude = with_derivative ? max_abs(term, dterm) : abs(term);
      if (previous && magnitude > *previous) break;
      value += term;
      if (with_derivative) derivative += dterm;
      if (abs(term) < tol * abs(value) && (!with_derivative || abs(dterm) < tol * abs(derivative))) {
        converged = true;
        break;
      }
      previous = magnitude;
      const Real u = s + (2 * k - 1), v = s + 2 * k;
      poch *= u * v;
      harmonic += 1 / u + 1 / v;
      x_power *= inv_x2;
    }
    if (converged) return {value, derivative};
  }
  throw NumericError("Euler-Maclaurin summation did not converge");
}

void require_above_one(const Real& s, const char* what) {
  if (!s.is_finite() || !(s > 1)) throw DomainError(std::string(what) + " requires s > 1");
}

}  // namespace

Real zeta(const Real& s, const PrecisionContext& ctx) {
  require_above_one(s, "zeta");
  return power_sums(s, 1, false, ctx).value.with_precision(ctx.working_bits());
}

Real zeta_prime(const Real& s, const PrecisionContext& ctx) {
  require_above_one(s, "zeta_prime");
  return power_sums(s, 1, true, ctx).derivative.with_precision(ctx.working_bits());
}

Real zeta_log_derivative(const Real& s, const PrecisionContext& ctx) {
  require_above_one(s, "zeta_log_derivative");
  const PowerSums r = power_sums(s, 1, true, ctx);
  return (r.derivative / r.value).with_precision(ctx.working_bits());
}

Real hurwitz_zeta(const Real& s, std::uint64_t a, const PrecisionContext& ctx) {
  require_above_one(s, "hurwitz_zeta");
  if (a < 1) throw DomainError("hurwitz_zeta requires a >= 1");
  return power_sums(s, a, false, ctx).value.with_precision(ctx.working_bits());
}

Real hurwitz_zeta_prime(const Real& s, std::uint64_t a, const PrecisionContext& ctx) {
  require_above_one(s, "hurwitz_zeta_prime");
  if (a < 1) throw DomainError("hurwitz_zeta_prime requires a >= 1");
  return power_sums(s, a, true, ctx).derivative.with_precision(ctx.working_bits());
}

Real digamma(const Real& s_in, const PrecisionContext& ctx) {
  if (!s_in.is_finite() || !(s_in > 0)) throw DomainError("digamma requires s > 0");
  const Bits bits = ctx.working_bits() + 16;
  PrecisionScope scope(bits);
  Real x = s_in.with_precision(bits);
  const Real tol = power_of_ten(-ctx.working_digits() - 2, bits);

  // psi(x) = psi(x + 1) - 1/x until the asymptotic series is accurate
  const double shift_to = 0.45 * ctx.working_digits() + 10;
  Real shift_sum = 0;
  while (x.to_double() < shift_to) {
    shift_sum += 1 / x;
    x += 1;
  }
  auto& bern = BernoulliTable::global();
  Real result = log(x) - 1 / (2 * x) - shift_sum;
  const Real inv_x2 = 1 / (x * x);
  Real x_power = inv_x2;
  for (int k = 1;; ++k) {
    if (k > 8 * ctx.working_digits() + 64) throw NumericError("digamma asymptotic series did not converge");
    const Real term = Real::from_rational(bern.bernoulli(2 * k), bits) * x_power / (2 * k);
    result -= term;
    if (abs(term) < tol * max_abs(result, Real(1))) break;
    x_power *= inv_x2;
  }
  return result.with_precision(ctx.working_bits());
}

Real digamma_shift(const Real& s, long l, const PrecisionContext& ctx) {
  if (l < 0) throw DomainError("digamma_shift requires l >= 0");
  PrecisionScope scope(ctx.working_bits());
  Real acc = 0;
  const Real base = s.with_precision(ctx.working_bits());
  for (long j = 0; j < l; ++j) {
    const Real d = base + j;
    if (d.is_zero()) throw DomainError("digamma_shift crosses a pole");
    acc += 1 / d;
  }
  return acc;
}

Real pochhammer(const Real& s, long l, const PrecisionContext& ctx) {
  if (l < 0) throw DomainError("pochhammer requires l >= 0");
  PrecisionScope scope(ctx.working_bits());
  Real acc = 1;
  const Real base = s.with_precision(ctx.working_bits());
  for (long j = 0; j < l; ++j) acc *= base + j;
  return acc;
}

}  // namespace apz
