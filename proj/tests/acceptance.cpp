// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "apz/tables.hpp"
#include "apz/verification.hpp"

using namespace apz;

namespace {

const std::filesystem::path kGolden = APZ_GOLDEN_DIR;

struct Outcome {
  bool ok = true;
  std::string detail;

  void add(bool pass, const std::string& text) {
    ok = ok && pass;
    detail += (detail.empty() ? "" : "; ") + text;
  }
};

// Compares a table, optionally restricted to some golden rows, and checks its run time.
void table_against_golden(Outcome& out, const std::string& name, const PrecisionContext& ctx, double budget_s,
                          const std::function<bool(const GoldenRow&)>& keep = nullptr) {
  auto golden = load_golden(kGolden / (name + ".txt"));
  if (keep) std::erase_if(golden.rows, [&](const GoldenRow& r) { return !keep(r); });
  const auto check = check_table(find_table(name), golden, ctx);
  std::string text = name + " " + std::to_string(check.rows_checked - check.failures.size()) + "/" +
                     std::to_string(check.rows_checked);
  char t[32];
  std::snprintf(t, sizeof t, " %.1fs", check.seconds);
  text += t;
  if (!check.failures.empty()) {
    text += " [";
    for (std::size_t i = 0; i < check.failures.size(); ++i) text += (i ? " | " : "") + check.failures[i];
    text += "]";
  }
  if (check.seconds > budget_s) text += " over the " + std::to_string(static_cast<int>(budget_s)) + "s budget";
  out.add(check.ok() && check.seconds <= budget_s, text);
}

void suite(Outcome& out, const std::vector<CheckResult>& results, double budget_s) {
  double total = 0;
  for (const auto& r : results) {
    total += r.seconds;
    out.add(r.ok, (r.ok ? "" : "FAILED ") + r.name + " (" + r.detail + ")");
  }
  char t[64];
  std::snprintf(t, sizeof t, "total %.1fs", total);
  out.add(total <= budget_s, t);
}

}  // namespace

int main() {
  const PrecisionContext ctx;
  std::uint64_t oracle_limit = 10'000'000;
  if (const char* env = std::getenv("APZ_ORACLE_LIMIT")) oracle_limit = std::stoull(env);

  struct Criterion {
    const char* title;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {"prime zeta P(s), s = 10..39", [&](Outcome& o) { table_against_golden(o, "P", ctx, 10); }},
      {"derivative P'(s), s = 2..29", [&](Outcome& o) { table_against_golden(o, "Pprime", ctx, 30); }},
      {"almost-prime tables P_k, P_k', P_k^(mu)",
       [&](Outcome& o) {
         for (const char* t : {"Pk", "Pkprime", "Pkmu"}) table_against_golden(o, t, ctx, 60);
       }},
      {"derived constants B, B^(mu), Hurwitz, L, moments",
       [&](Outcome& o) {
         for (const char* t : {"Nk1", "Nks", "Nk1mu", "Nksmu", "H0", "Hlog", "Lkl", "moments"})
           table_against_golden(o, t, ctx, 120);
         table_against_golden(o, "remarks", ctx, 60, [](const GoldenRow& r) { return r.key[0] == "moment_total"; });
       }},
      {"remark constants: unitary-divisor sums and log 2 parts",
       [&](Outcome& o) {
         table_against_golden(o, "remarks", ctx, 60, [](const GoldenRow& r) { return r.key[0] != "moment_total"; });
         table_against_golden(o, "log2parts", ctx, 60);
       }},
      {"identity suite", [&](Outcome& o) { suite(o, run_identity_suite(ctx), 300); }},
      {"oracle bracketing, n <= 10^7 direct sums",
       [&](Outcome& o) { suite(o, run_oracle_suite(oracle_limit, ctx), 300); }},
      {"exact combinatorics", [&](Outcome& o) { suite(o, run_combinatorics_suite(), 10); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(o);
    } catch (const std::exception& e) {
      o.add(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%.1fs) -- %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].title, secs,
                o.detail.c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
