#include "apz/verification.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include "apz/almost_prime_zeta.hpp"
#include "apz/derived_constants.hpp"
#include "apz/errors.hpp"
#include "apz/factor_sieve.hpp"
#include "apz/oracle.hpp"
#include "apz/partitions.hpp"
#include "apz/prime_zeta.hpp"
#include "apz/tables.hpp"
#include "apz/zeta.hpp"

namespace apz {

namespace {

using Clock = std::chrono::steady_clock;

// Runs `body`, which fills in detail and returns pass/fail; exceptions fail.
CheckResult timed(std::string name, const std::function<bool(std::string&)>& body) {
  CheckResult r;
  r.name = std::move(name);
  const auto start = Clock::now();
  try {
    r.ok = body(r.detail);
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::string sci(const Real& x) { return x.is_finite() ? x.to_scientific(3) : "nan"; }

Real rel(const Real& a, const Real& b) { return abs(a - b) / abs(b); }

}  // namespace

std::vector<CheckResult> run_identity_suite(const PrecisionContext& ctx) {
  std::vector<CheckResult> out;
  const Bits bits = ctx.working_bits();
  const Real tol = ctx.series_tol();

  out.push_back(timed("partition sum equals recurrence, k <= 10", [&](std::string& d) {
    Real worst = Real::zero(bits);
    for (int s : {2, 3, 5})
      for (int k = 1; k <= 10; ++k) {
        const Real a = almost_prime_zeta(k, s, ctx, Evaluation::partition_sum);
        const Real b = almost_prime_zeta(k, s, ctx, Evaluation::recurrence);
        worst = max_abs(worst, rel(a, b));
        const Real da = almost_prime_zeta_prime(k, s, ctx, Evaluation::partition_sum);
        const Real db = almost_prime_zeta_prime(k, s, ctx, Evaluation::recurrence);
        worst = max_abs(worst, rel(da, db));
      }
    d = "max relative difference " + sci(worst);
    return worst <= tol;
  }));

  out.push_back(timed("1 + sum_{k<=60} P_k(2) = zeta(2)", [&](std::string& d) {
    const auto z = almost_prime_zeta_all(60, 2, Variant::plain, ctx);
    Real sum = Real::zero(bits);
    for (const auto& v : z) sum += v;  // z[0] = 1
    const Real err = abs(sum - zeta(2, ctx));
    d = "difference " + sci(err);
    return err < power_of_ten(-30, bits);
  }));

  out.push_back(timed("1 + sum_{k<=60} P_k^(mu)(2) = 1/zeta(2)", [&](std::string& d) {
    const auto z = almost_prime_zeta_all(60, 2, Variant::moebius, ctx);
    Real sum = Real::zero(bits);
    for (const auto& v : z) sum += v;
    const Real err = abs(sum - 1 / zeta(2, ctx));
    d = "difference " + sci(err);
    return err < power_of_ten(-20, bits);
  }));

  out.push_back(timed("odd-index sums: pi^2/20 and -9/(2 pi^2)", [&](std::string& d) {
    const Real pi2 = pi(bits) * pi(bits);
    const auto plain = almost_prime_zeta_all(79, 2, Variant::plain, ctx);
    const auto mu = almost_prime_zeta_all(79, 2, Variant::moebius, ctx);
    Real sp = Real::zero(bits), sm = Real::zero(bits);
    for (int k = 1; k <= 40; ++k) {
      sp += plain[2 * k - 1];
      sm += mu[2 * k - 1];
    }
    const Real ep = abs(sp - pi2 / 20), em = abs(sm + 9 / (2 * pi2));
    const Real cp = abs(odd_index_sum(2, Variant::plain, ctx) - pi2 / 20);
    const Real cm = abs(odd_index_sum(2, Variant::moebius, ctx) + 9 / (2 * pi2));
    d = "plain " + sci(ep) + ", square-free " + sci(em) + ", closed forms " + sci(max_abs(cp, cm));
    const Real lim = power_of_ten(-40, bits);
    return ep < lim && em < lim && cp < tol && cm < tol;
  }));

  out.push_back(timed("2 P_2(s) = P(s)^2 + P(2s), s = 2, 3, 4", [&](std::string& d) {
    Real worst = Real::zero(bits);
    for (int s : {2, 3, 4}) {
      const Real p = prime_zeta(s, ctx);
      worst = max_abs(worst, rel(2 * almost_prime_zeta(2, s, ctx), p * p + prime_zeta(2 * s, ctx)));
    }
    d = "max relative difference " + sci(worst);
    return worst <= tol;
  }));

  out.push_back(timed("B: geometric route equals decomposition", [&](std::string& d) {
    Real worst = Real::zero(bits);
    for (int k = 1; k <= 5; ++k)
      for (int s = 2; s <= 4; ++s) {
        worst = max_abs(worst, rel(B(k, s, ctx), B_geometric(k, s, ctx)));
        worst = max_abs(worst, rel(B_moebius(k, s, ctx), B_moebius_geometric(k, s, ctx)));
      }
    d = "max relative difference " + sci(worst);
    return worst <= tol;
  }));

  out.push_back(timed("cutoff invariance M -> nextprime(2M)", [&](std::string& d) {
    PrecisionContext other = ctx;
    other.cutoff_prime = next_prime(2 * ctx.cutoff_prime);
    const Real lim = power_of_ten(-ctx.digits, bits);
    Real worst = Real::zero(bits);
    for (int s : {2, 3, 7, 20}) {
      worst = max_abs(worst, rel(prime_zeta(s, ctx), prime_zeta(s, other)));
      worst = max_abs(worst, rel(prime_zeta_prime(s, ctx), prime_zeta_prime(s, other)));
      worst = max_abs(worst, rel(almost_prime_zeta(3, s, ctx), almost_prime_zeta(3, s, other)));
    }
    d = "M = " + std::to_string(ctx.cutoff_prime) + " vs " + std::to_string(other.cutoff_prime) +
        ", max relative difference " + sci(worst);
    return worst < lim;
  }));
  return out;
}

std::vector<CheckResult> run_combinatorics_suite() {
  std::vector<CheckResult> out;
  out.push_back(timed("partition weights for k <= 4", [](std::string& d) {
    const std::vector<std::vector<long>> expected{{1}, {1, 1}, {1, 3, 2}, {1, 6, 3, 8, 6}};
    bool ok = true;
    for (int k = 1; k <= 4; ++k) {
      std::vector<long> got;
      for (const auto& p : partitions_of(k)) got.push_back(p.weight.get_si());
      if (got != expected[k - 1]) {
        ok = false;
        d += "k=" + std::to_string(k) + " differs; ";
      }
    }
    if (ok) d = "{1} {1,1} {1,3,2} {1,6,3,8,6}";
    return ok;
  }));
  out.push_back(timed("partition weights sum to k!, k <= 12", [](std::string& d) {
    for (int k = 1; k <= 12; ++k) {
      Integer sum = 0, fact = 1;
      for (const auto& p : partitions_of(k)) sum += p.weight;
      for (int i = 2; i <= k; ++i) fact *= i;
      if (sum != fact) {
        d = "k=" + std::to_string(k) + ": " + sum.get_str() + " != " + fact.get_str();
        return false;
      }
    }
    d = "all equal";
    return true;
  }));
  out.push_back(timed("tau coefficients", [](std::string& d) {
    const std::vector<std::tuple<int, int, Rational>> expected{
        {2, 2, Rational(3, 2)},  {2, 3, Rational(5, 2)},  {3, 3, Rational(-11, 6)},
        {2, 4, Rational(7, 2)},  {3, 4, Rational(-13, 3)}, {4, 4, Rational(25, 12)}};
    for (const auto& [i, l, q] : expected) {
      if (tau(i, l) != q) {
        d = "tau(" + std::to_string(i) + "," + std::to_string(l) + ") = " + tau(i, l).get_str();
        return false;
      }
    }
    d = "3/2 5/2 -11/6 7/2 -13/3 25/12";
    return true;
  }));
  return out;
}

std::vector<CheckResult> run_table_suite(const std::filesystem::path& golden_dir, const PrecisionContext& ctx) {
  std::vector<CheckResult> out;
  for (const auto& table : table_registry()) {
    out.push_back(timed("table " + table.name, [&](std::string& d) {
      const auto check = check_table(table, load_golden(golden_dir / (table.name + ".txt")), ctx);
      d = std::to_string(check.rows_checked - check.failures.size()) + "/" + std::to_string(check.rows_checked) +
          " rows match";
      if (!check.failures.empty()) d += "; first failure: " + check.failures.front();
      return check.ok();
    }));
  }
  return out;
}

std::vector<CheckResult> run_oracle_suite(std::uint64_t limit, const PrecisionContext& ctx) {
  std::vector<CheckResult> out;
  const auto octx = oracle_context();
  std::optional<FactorSieve> sieve;
  out.push_back(timed("sieve up to " + std::to_string(limit), [&](std::string& d) {
    sieve = build_sieve(limit);
    d = std::to_string(sieve->memory_bytes() / (1 << 20)) + " MiB";
    return true;
  }));
  if (!sieve) return out;

  out.push_back(timed("almost-prime tables bracketed, s <= 4", [&](std::string& d) {
    const std::vector<long> svals{2, 3, 4};
    const auto batch = direct_batch(*sieve, 6, svals, limit, octx);
    int checked = 0;
    std::ostringstream bad;
    for (int k = 2; k <= 6; ++k)
      for (std::size_t i = 0; i < svals.size(); ++i) {
        const Real s = svals[i];
        const auto& p = batch.plain[k - 1][i];
        const auto& m = batch.moebius[k - 1][i];
        if (!p.brackets(almost_prime_zeta(k, s, ctx))) bad << " P_" << k << "(" << svals[i] << ")";
        if (!m.brackets(almost_prime_zeta_moebius(k, s, ctx))) bad << " Pmu_" << k << "(" << svals[i] << ")";
        checked += 2;
      }
    d = std::to_string(checked) + " values";
    if (!bad.str().empty()) d += ", outside bound:" + bad.str();
    return bad.str().empty();
  }));

  out.push_back(timed("weighted sums bracketed (B, log-Hurwitz, log 2 parts)", [&](std::string& d) {
    std::ostringstream bad;
    int checked = 0;
    for (int k = 1; k <= 3; ++k) {
      for (int s : {1, 2}) {
        if (!direct_weighted(*sieve, k, s, limit, OracleWeight::reciprocal_shift, octx).brackets(B(k, s, ctx)))
          bad << " B_" << k << "," << s;
        ++checked;
      }
      if (!direct_weighted(*sieve, k, 2, limit, OracleWeight::log_shift, octx)
               .brackets(abs(hurwitz_almost_prime_prime(k, 2, 0, ctx))))
        bad << " Hlog_" << k;
      ++checked;
    }
    for (int k = 1; k <= 4; ++k) {
      if (!direct_weighted(*sieve, k, 0, std::min<std::uint64_t>(500, limit), OracleWeight::pow2, octx)
               .brackets(log2_component(k, ctx)))
        bad << " log2_" << k;
      ++checked;
    }
    d = std::to_string(checked) + " values";
    if (!bad.str().empty()) d += ", outside bound:" + bad.str();
    return bad.str().empty();
  }));
  return out;
}

}  // namespace apz
