#include "doctest.h"

#include "apz/almost_prime_zeta.hpp"
#include "apz/derived_constants.hpp"
#include "apz/errors.hpp"
#include "apz/oracle.hpp"
#include "test_support.hpp"

using namespace apz;

namespace {

const FactorSieve& sieve() {
  static const FactorSieve s = build_sieve(1000000);
  return s;
}

}  // namespace

TEST_CASE("oracle prime sum matches an exact rational sum") {
  const auto ctx = oracle_context();
  const auto r = direct_Pk(sieve(), 1, 4, 100, ctx);
  CHECK(r.terms_used == 25);
  Rational exact = 0;
  for (auto p : primes_up_to(100)) exact += Rational(1, p * p * p * p);
  CHECK(rel_err(r.partial_sum, Real::from_rational(exact, ctx.working_bits())) < 1e-28);
  // 100^-3/3
  CHECK(std::abs(r.tail_bound.to_double() - 1e-6 / 3) < 1e-18);
}

TEST_CASE("oracle Moebius sum for primes is the negated plain sum") {
  const auto ctx = oracle_context();
  const auto plain = direct_Pk(sieve(), 1, Real(2.5), 5000, ctx);
  const auto mu = direct_Pk_moebius(sieve(), 1, Real(2.5), 5000, ctx);
  CHECK(mu.partial_sum == -plain.partial_sum);
  CHECK(mu.terms_used == plain.terms_used);
}

TEST_CASE("oracle sums bracket the analytic values") {
  const auto ctx = oracle_context();
  PrecisionContext hi;
  const auto batch = direct_batch(sieve(), 4, {2, 3, 5}, 1000000, ctx);
  for (int k = 1; k <= 4; ++k) {
    for (std::size_t i = 0; i < batch.s_values.size(); ++i) {
      const Real s = batch.s_values[i];
      INFO("k=", k, " s=", batch.s_values[i]);
      CHECK(batch.plain[k - 1][i].brackets(almost_prime_zeta(k, s, hi)));
      CHECK(batch.moebius[k - 1][i].brackets(almost_prime_zeta_moebius(k, s, hi)));
    }
  }
}

TEST_CASE("batch and single-sum oracles agree") {
  const auto ctx = oracle_context();
  const auto batch = direct_batch(sieve(), 3, {4, 2}, 20000, ctx);
  for (int k = 1; k <= 3; ++k) {
    for (std::size_t i = 0; i < 2; ++i) {
      const Real s = batch.s_values[i];
      const auto single = direct_Pk(sieve(), k, s, 20000, ctx);
      const auto mu = direct_Pk_moebius(sieve(), k, s, 20000, ctx);
      CHECK(rel_err(batch.plain[k - 1][i].partial_sum, single.partial_sum) < 1e-27);
      CHECK(rel_err(batch.moebius[k - 1][i].partial_sum, mu.partial_sum) < 1e-27);
      CHECK(batch.plain[k - 1][i].terms_used == single.terms_used);
      CHECK(batch.moebius[k - 1][i].terms_used == mu.terms_used);
    }
  }
}

TEST_CASE("oracle partial sums grow with the cutoff") {
  const auto ctx = oracle_context();
  Real previous = 0;
  for (std::uint64_t n : {10, 100, 1000, 10000}) {
    const auto r = direct_Pk(sieve(), 2, 2, n, ctx);
    CHECK(r.partial_sum > previous);
    previous = r.partial_sum;
  }
}

TEST_CASE("weighted oracles") {
  const auto ctx = oracle_context();
  PrecisionContext hi;
  SUBCASE("log 2 components converge geometrically") {
    for (int k = 1; k <= 3; ++k) {
      const auto r = direct_weighted(sieve(), k, 0, 500, OracleWeight::pow2, ctx);
      CHECK(r.tail_bound < 1e-150);
      CHECK(rel_err(r.partial_sum, log2_component(k, hi)) < 1e-28);
      // far below the tail: only the rounding allowance makes this bracket
      CHECK(r.brackets(log2_component(k, hi)));
      CHECK(r.rounding_bound < 1e-25);
    }
  }
  SUBCASE("shifted reciprocal sums converge at s = 1") {
    const auto r = direct_weighted(sieve(), 1, 1, 1000000, OracleWeight::reciprocal_shift, ctx);
    CHECK(r.tail_bound.to_double() == doctest::Approx(2e-6));
    CHECK(r.brackets(B(1, 1, hi)));
    check_reference(r.partial_sum, ".77315", 5);
  }
  SUBCASE("shifted reciprocal sums bracket B") {
    for (int k = 1; k <= 3; ++k) {
      const auto r = direct_weighted(sieve(), k, 2, 100000, OracleWeight::reciprocal_shift, ctx);
      CHECK(r.brackets(B(k, 2, hi)));
    }
  }
  SUBCASE("shifted logarithmic sums bracket the a = 0 Hurwitz derivative") {
    for (int k = 1; k <= 2; ++k) {
      const auto r = direct_weighted(sieve(), k, 3, 100000, OracleWeight::log_shift, ctx);
      CHECK(r.brackets(-hurwitz_almost_prime_prime(k, 3, 0, hi)));
    }
  }
}

TEST_CASE("oracle argument checks") {
  const auto ctx = oracle_context();
  CHECK_THROWS_AS(direct_Pk(sieve(), 2, 2, 2000000, ctx), ResourceError);
  CHECK_THROWS_AS(direct_Pk(sieve(), 2, 1, 1000, ctx), DomainError);
  CHECK_THROWS_AS(direct_Pk(sieve(), 0, 2, 1000, ctx), DomainError);
  CHECK_THROWS_AS(direct_batch(sieve(), 2, {1}, 1000, ctx), DomainError);
  CHECK_NOTHROW(direct_weighted(sieve(), 1, 0, 100, OracleWeight::pow2, ctx));
}
