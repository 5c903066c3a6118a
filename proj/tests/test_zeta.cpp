#include "doctest.h"

#include <random>
#include <string>

#include "apz/errors.hpp"
#include "apz/factor_sieve.hpp"
#include "apz/zeta.hpp"

using namespace apz;

namespace {

// zeta(3) = 5/2 sum (-1)^{n+1} / (n^3 C(2n,n)), geometric 1/4 convergence.
Real zeta3_markov(Bits bits) {
  Rational acc = 0;
  Integer central = 1;  // C(2n, n)
  for (long n = 1; n <= 260; ++n) {
    central = central * (2 * n) * (2 * n - 1) / (n * n);
    Rational term(1, 1);
    term /= Rational(Integer(n) * n * n * central);
    acc += n % 2 ? term : Rational(-term);
  }
  return Real::from_rational(acc * Rational(5, 2), bits);
}

// -sum log n / n^2 with a hand-written Euler-Maclaurin tail at N = 1000.
Real zeta_prime_2_oracle(Bits bits) {
  PrecisionScope scope(bits);
  const long n_cut = 1000;
  Real sum = 0;
  for (long n = 2; n < n_cut; ++n) sum -= log_of(n, bits) / (Real(n) * n);
  const Rational bernoulli[] = {{1, 6},          {-1, 30},         {1, 42},          {-1, 30},
                                {5, 66},         {-691, 2730},     {7, 6},           {-3617, 510},
                                {43867, 798},    {-174611, 330},   {854513, 138},    {-236364091, 2730},
                                {8553103, 6}};
  // f(x) = -log x / x^2 ; tail = int_N^inf f + f(N)/2 - sum B_2k/(2k)! f^{(2k-1)}(N)
  const Real x = Real(n_cut), lx = log(x);
  sum += -(lx + 1) / x;       // integral
  sum += -lx / (x * x) / 2;   // half term
  // f^{(m)}(x) = (-1)^{m+1} [(m+1)! log x - c_m] / x^{m+2},  c_m = (m+1)! H_{m+1} - (m+1)!... via recurrence
  // d/dx [ (a log x + b) x^{-q} ] = (a - q b - q a log x) x^{-q-1}
  Real a = -1, b = 0;  // f = (a log x + b) x^{-2}
  long q = 2;
  Integer fact = 1;
  for (int k = 1; k <= 13; ++k) {
    // advance to derivative order 2k-1
    const int steps = k == 1 ? 1 : 2;
    for (int i = 0; i < steps; ++i) {
      Real na = -q * a, nb = a - q * b;
      a = na;
      b = nb;
      ++q;
    }
    fact *= (2 * k - 1) * (2 * k);
    const Real deriv = (a * lx + b) / pow(x, q);
    sum -= Real::from_rational(bernoulli[k - 1] / Rational(fact), bits) * deriv;
  }
  return sum;
}

Real rel_err(const Real& a, const Real& b) { return abs(a - b) / abs(b); }

}  // namespace

TEST_CASE("zeta closed forms") {
  PrecisionContext ctx;
  const Bits bits = ctx.working_bits();
  const Real p = pi(bits);
  CHECK(rel_err(zeta(2, ctx), p * p / 6) < power_of_ten(-75, bits));
  CHECK(rel_err(zeta(4, ctx), pow(p, 4) / 90) < power_of_ten(-75, bits));
  CHECK(zeta(2, ctx).decimal_digits(17).first == "16449340668482264");
}

TEST_CASE("zeta(3) against the central binomial series") {
  PrecisionContext ctx;
  const Real z3 = zeta(3, ctx);
  CHECK(rel_err(z3, zeta3_markov(ctx.working_bits())) < power_of_ten(-75, ctx.working_bits()));
  CHECK(z3.decimal_digits(22).first == "1202056903159594285399");
}

TEST_CASE("zeta'(2) against an independent Euler-Maclaurin oracle") {
  PrecisionContext ctx;
  const Real zp = zeta_prime(2, ctx);
  const Real oracle = zeta_prime_2_oracle(ctx.working_bits());
  CHECK(rel_err(zp, oracle) < power_of_ten(-45, ctx.working_bits()));
  CHECK(zp < 0);
  CHECK(zp.decimal_digits(20).first == "93754825431584375370");
}

TEST_CASE("zeta'(s) at large s is dominated by the n = 2 term") {
  PrecisionContext ctx;
  const Real zp = zeta_prime(50, ctx);
  const Real lead = -log_of(2, ctx.working_bits()) * inverse_power(2, Real(50));
  // the n = 3 term contributes a relative 2.5e-9
  CHECK(rel_err(zp, lead) < Real(3e-9));
  const Real two_terms = lead - log_of(3, ctx.working_bits()) * inverse_power(3, Real(50));
  CHECK(rel_err(zp, two_terms) < Real(1e-14));
}

TEST_CASE("zeta' matches central differences") {
  PrecisionContext ctx{.digits = 80};
  const Bits bits = ctx.working_bits();
  PrecisionScope scope(bits);
  const Real h = power_of_ten(-20, bits);
  const Real three = Real::parse("3", bits);
  const Real fd = (zeta(three + h, ctx) - zeta(three - h, ctx)) / (2 * h);
  CHECK(abs(fd - zeta_prime(three, ctx)) < power_of_ten(-38, bits));

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(1.5, 10.0);
  PrecisionContext base;
  const Real h2 = power_of_ten(-36, base.working_bits());
  for (int i = 0; i < 3; ++i) {
    const Real s = Real::parse(std::to_string(dist(rng)), base.working_bits());
    const Real central = (zeta(s + h2, base) - zeta(s - h2, base)) / (2 * h2);
    CHECK(abs(central - zeta_prime(s, base)) < power_of_ten(-base.digits / 2, base.working_bits()));
  }
}

TEST_CASE("Euler-Maclaurin split point does not matter") {
  PrecisionContext ctx;
  PrecisionScope scope(ctx.working_bits());
  for (const char* text : {"1.5", "2", "7.25"}) {
    const Real s = Real::parse(text, ctx.working_bits());
    Real head = 0;
    for (unsigned long n = 1; n < 40; ++n) head += inverse_power(n, s);
    CHECK(rel_err(head + hurwitz_zeta(s, 40, ctx), zeta(s, ctx)) < power_of_ten(-76, ctx.working_bits()));
    Real dhead = 0;
    for (unsigned long n = 2; n < 40; ++n) dhead -= log_of(n, ctx.working_bits()) * inverse_power(n, s);
    CHECK(rel_err(dhead + hurwitz_zeta_prime(s, 40, ctx), zeta_prime(s, ctx)) <
          power_of_ten(-74, ctx.working_bits()));
  }
  const Real p = pi(ctx.working_bits());
  CHECK(rel_err(hurwitz_zeta(2, 2, ctx), p * p / 6 - 1) < power_of_ten(-75, ctx.working_bits()));
}

TEST_CASE("partial Euler products lie strictly between 1 and zeta") {
  PrecisionContext ctx;
  PrecisionScope scope(ctx.working_bits());
  for (long s = 1; s <= 3; ++s) {
    for (std::uint64_t m : {11ULL, 101ULL}) {
      const Real z = zeta(2 * s, ctx);
      Real product = z;
      for (auto p : primes_up_to(m)) product *= 1 - inverse_power(p, Real(2 * s));
      CHECK(product > 1);
      CHECK(product < z);
    }
  }
}

TEST_CASE("zeta domain errors") {
  PrecisionContext ctx;
  CHECK_THROWS_AS(zeta(1, ctx), DomainError);
  CHECK_THROWS_AS(zeta(Real(0.5), ctx), DomainError);
  CHECK_THROWS_AS(zeta_prime(1, ctx), DomainError);
  CHECK_THROWS_AS(digamma(0, ctx), DomainError);
  CHECK_THROWS_AS(digamma(-2, ctx), DomainError);
}

TEST_CASE("digamma") {
  PrecisionContext ctx;
  const Bits bits = ctx.working_bits();
  const Real gamma = euler_gamma(bits);
  CHECK(abs(digamma(1, ctx) + gamma) < power_of_ten(-76, bits));
  CHECK(abs(digamma(2, ctx) - (1 - gamma)) < power_of_ten(-76, bits));
  CHECK(digamma(1, ctx).decimal_digits(17).first == "57721566490153286");
  const Real shift = digamma(7, ctx) - digamma(3, ctx);
  const Real expected = Real::from_rational(Rational(1, 3) + Rational(1, 4) + Rational(1, 5) + Rational(1, 6), bits);
  CHECK(abs(shift - expected) < power_of_ten(-76, bits));
  CHECK(abs(digamma_shift(3, 4, ctx) - expected) < power_of_ten(-76, bits));

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(0.05, 30.0);
  for (int i = 0; i < 5; ++i) {
    const Real s = Real::parse(std::to_string(dist(rng)), bits);
    CHECK(abs(digamma(s + 1, ctx) - digamma(s, ctx) - 1 / s) < power_of_ten(-75, bits));
  }
}

TEST_CASE("pochhammer") {
  PrecisionContext ctx;
  CHECK(pochhammer(2, 3, ctx) == 24);
  CHECK(pochhammer(Real(0.37), 0, ctx) == 1);
  CHECK(pochhammer(3, 5, ctx) == 2520);
  CHECK_THROWS_AS(pochhammer(3, -1, ctx), DomainError);
}

TEST_CASE("Bernoulli numbers") {
  auto& table = BernoulliTable::global();
  CHECK(table.bernoulli(0) == 1);
  CHECK(table.bernoulli(1) == Rational(-1, 2));
  CHECK(table.bernoulli(2) == Rational(1, 6));
  CHECK(table.bernoulli(4) == Rational(-1, 30));
  CHECK(table.bernoulli(12) == Rational(-691, 2730));
  CHECK(table.bernoulli(7) == 0);
  // von Staudt-Clausen: denominator of B_2n is the product of primes p with (p-1) | 2n
  for (int n = 2; n <= 80; n += 2) {
    Integer denominator = 1;
    for (auto p : primes_up_to(static_cast<std::uint64_t>(n) + 1))
      if (n % (p - 1) == 0) denominator *= p;
    CHECK(table.bernoulli(n).get_den() == denominator);
  }
}
