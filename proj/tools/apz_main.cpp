// apz: command-line front end for the prime and almost-prime zeta library.
//
//   apz P --s 10 --digits 60 --format paper
//   apz table Pk --format csv
//   apz verify --suite identities
//
// Settings may also come from a key=value file named by $APZ_CONFIG
// (keys: digits, guard, cutoff, format, oracle-limit, golden-dir);
// command-line flags take precedence.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "apz/almost_prime_zeta.hpp"
#include "apz/derived_constants.hpp"
#include "apz/errors.hpp"
#include "apz/prime_zeta.hpp"
#include "apz/tables.hpp"
#include "apz/verification.hpp"

namespace {

using namespace apz;

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kDomain = 3, kVerification = 4 };

struct Settings {
  int k = 0, l = 0, u = 0, guard = 15, digits = 64;
  std::string s, a, format = "plain", suite = "identities", table, golden_dir = APZ_GOLDEN_DIR;
  std::uint64_t cutoff = 101, oracle_limit = 10'000'000;
  bool moebius = false;
};

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto trim = [](std::string t) {
      const auto b = t.find_first_not_of(" \t\r");
      const auto e = t.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

template <class T>
T config_number(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size() || v < 0) throw std::invalid_argument(text);
    return static_cast<T>(v);
  } catch (const std::exception&) {
    throw UsageError("config value for '" + key + "' is not a non-negative integer: " + text);
  }
}

// Config values fill in whatever the command line left unset.
void apply_config(Settings& st, const CLI::App& app) {
  const char* path = std::getenv("APZ_CONFIG");
  if (!path || !*path) return;
  for (const auto& [key, value] : read_config(path)) {
    const auto unset = [&](const char* flag) { return app.count(flag) == 0; };
    if (key == "digits") {
      if (unset("--digits")) st.digits = config_number<int>(key, value);
    } else if (key == "guard") {
      if (unset("--guard")) st.guard = config_number<int>(key, value);
    } else if (key == "cutoff") {
      if (unset("--cutoff")) st.cutoff = config_number<std::uint64_t>(key, value);
    } else if (key == "oracle-limit") {
      if (unset("--oracle-limit")) st.oracle_limit = config_number<std::uint64_t>(key, value);
    } else if (key == "format") {
      if (unset("--format")) st.format = value;
    } else if (key == "golden-dir") {
      if (unset("--golden-dir")) st.golden_dir = value;
    } else {
      throw UsageError(std::string(path) + ": unknown key '" + key + "'");
    }
  }
}

class Runner {
 public:
  Runner(const Settings& st, const CLI::App& app) : st_(st), app_(app) {
    ctx_.digits = st.digits;
    ctx_.guard = st.guard;
    ctx_.cutoff_prime = st.cutoff;
    ctx_.validate();
    mode_ = parse_output_mode(st.format);
  }

  int run(const std::string& command) {
    if (command == "table") return table();
    if (command == "verify") return verify();
    if (command == "tau") return tau_row();

    if (command == "P") return emit({"s"}, {s_text()}, prime_zeta(s(), ctx_));
    if (command == "dP") return emit({"s"}, {s_text()}, prime_zeta_prime(s(), ctx_));
    if (command == "Pk") return emit({"k", "s"}, {k_text(), s_text()}, almost_prime_zeta(k(), s(), ctx_));
    if (command == "dPk")
      return emit({"k", "s"}, {k_text(), s_text()},
                  st_.moebius ? almost_prime_zeta_moebius_prime(k(), s(), ctx_) : almost_prime_zeta_prime(k(), s(), ctx_));
    if (command == "Pmu") return emit({"k", "s"}, {k_text(), s_text()}, almost_prime_zeta_moebius(k(), s(), ctx_));
    if (command == "B") return emit({"k", "s"}, {k_text(), s_text()}, B(k(), int_s(), ctx_));
    if (command == "Bmu") return emit({"k", "s"}, {k_text(), s_text()}, B_moebius(k(), int_s(), ctx_));
    if (command == "hurwitz")
      return emit({"k", "s", "a"}, {k_text(), s_text(), a_text()},
                  hurwitz_almost_prime(k(), s(), a(), variant(), ctx_));
    if (command == "dhurwitz")
      return emit({"k", "s", "a"}, {k_text(), s_text(), a_text()},
                  hurwitz_almost_prime_prime(k(), s(), a(), ctx_, variant()));
    if (command == "L") return emit({"k", "l"}, {k_text(), std::to_string(l())}, L(k(), l(), ctx_));
    if (command == "moment") {
      if (app_.count("--u") == 0) return emit({"u"}, {"total"}, prime_zeta_moment_total(ctx_));
      return emit({"u"}, {std::to_string(st_.u)}, prime_zeta_moment(st_.u, ctx_));
    }
    if (command == "log2part") return emit({"k"}, {k_text()}, log2_component(k(), ctx_));
    throw UsageError("unknown command " + command);
  }

 private:
  void require(const char* flag) const {
    if (app_.count(flag) == 0) throw UsageError(std::string("missing required flag ") + flag);
  }
  int k() const {
    require("--k");
    return st_.k;
  }
  int l() const {
    require("--l");
    return st_.l;
  }
  std::string k_text() const { return std::to_string(k()); }
  std::string s_text() const {
    require("--s");
    return st_.s;
  }
  std::string a_text() const {
    require("--a");
    return st_.a;
  }
  Real s() const { return Real::parse(s_text(), ctx_.working_bits()); }
  Real a() const { return Real::parse(a_text(), ctx_.working_bits()); }
  int int_s() const {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s_text(), &used);
      if (used == st_.s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("this command needs an integer --s, got " + st_.s);
  }
  Variant variant() const { return st_.moebius ? Variant::moebius : Variant::plain; }

  int emit(const std::vector<std::string>& columns, const std::vector<std::string>& key, const Real& value) const {
    const int shown = ctx_.digits;
    switch (mode_) {
      case OutputMode::plain:
        std::cout << format_scientific(value, shown) << '\n';
        break;
      case OutputMode::paper:
        std::cout << format_paper_style(value, shown) << '\n';
        break;
      case OutputMode::csv:
        for (const auto& c : columns) std::cout << c << ',';
        std::cout << "value\n";
        for (const auto& c : key) std::cout << c << ',';
        std::cout << format_scientific(value, shown) << '\n';
        break;
    }
    return kOk;
  }

  int tau_row() const {
    const int last = l();
    const int first = app_.count("--k") ? st_.k : 2, stop = app_.count("--k") ? st_.k : last;
    if (mode_ == OutputMode::csv) std::cout << "i,l,value\n";
    for (int i = first; i <= stop; ++i) {
      const Rational q = tau(i, last);
      if (mode_ == OutputMode::csv)
        std::cout << i << ',' << last << ',' << q.get_str() << '\n';
      else
        std::cout << "tau(" << i << "," << last << ") = " << q.get_str() << '\n';
    }
    return kOk;
  }

  int table() const {
    const auto& def = find_table(st_.table);
    const auto rows = generate_table(def, ctx_);
    std::cout << render_table(def, rows, mode_, std::min(def.digits, ctx_.digits));
    return kOk;
  }

  int verify() const {
    std::vector<CheckResult> results;
    const auto add = [&](std::vector<CheckResult> more) {
      for (auto& r : more) {
        std::cout << (r.ok ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ") ["
                  << static_cast<long>(r.seconds * 1000) << " ms]" << std::endl;
        results.push_back(std::move(r));
      }
    };
    if (st_.suite == "identities" || st_.suite == "all") {
      add(run_combinatorics_suite());
      add(run_identity_suite(ctx_));
    }
    if (st_.suite == "tables" || st_.suite == "all") add(run_table_suite(st_.golden_dir, ctx_));
    if (st_.suite == "oracle" || st_.suite == "all") add(run_oracle_suite(st_.oracle_limit, ctx_));
    if (results.empty()) throw UsageError("unknown suite '" + st_.suite + "' (identities, tables, oracle, all)");
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.ok ? 0 : 1;
    std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
    return failed ? kVerification : kOk;
  }

  const Settings& st_;
  const CLI::App& app_;
  PrecisionContext ctx_;
  OutputMode mode_ = OutputMode::plain;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-precision prime and almost-prime zeta functions", "apz"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  Settings st;

  app.add_option("--k", st.k, "almost-prime order k (tau: coefficient index i)")->check(CLI::PositiveNumber);
  app.add_option("--s", st.s, "real argument s");
  app.add_option("--l", st.l, "order l for L and tau")->check(CLI::PositiveNumber);
  app.add_option("--u", st.u, "moment order u (omit for the total)")->check(CLI::PositiveNumber);
  app.add_option("--a", st.a, "Hurwitz shift a");
  app.add_flag("--moebius", st.moebius, "square-free variant for dPk, hurwitz and dhurwitz");
  app.add_option("--digits", st.digits, "significant digits");
  app.add_option("--guard", st.guard, "extra working digits");
  app.add_option("--cutoff", st.cutoff, "largest prime summed explicitly");
  app.add_option("--format", st.format, "plain, paper or csv");
  app.add_option("--oracle-limit", st.oracle_limit, "largest n in the brute-force oracle");
  app.add_option("--golden-dir", st.golden_dir, "directory of reference tables");

  const std::vector<std::pair<const char*, const char*>> commands{
      {"P", "prime zeta P(s)"},
      {"dP", "derivative P'(s)"},
      {"Pk", "almost-prime zeta P_k(s)"},
      {"dPk", "derivative P_k'(s)"},
      {"Pmu", "square-free variant P_k^(mu)(s)"},
      {"B", "B_{k,s} = sum 1/(n^s (n-1)) over Omega(n) = k"},
      {"Bmu", "square-free B_{k,s}^(mu)"},
      {"hurwitz", "Hurwitz projection P_k(s,a)"},
      {"dhurwitz", "derivative of P_k(s,a) in s"},
      {"L", "logarithmic sum L_{k,l}"},
      {"tau", "exact tau_{i,l} coefficients"},
      {"moment", "prime zeta moment sum_s P(s)/s^u"},
      {"log2part", "component of log 2 from Omega(n) = k"},
      {"table", "regenerate a reference table"},
      {"verify", "run a verification suite"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);
  app.get_subcommand("table")->add_option("name", st.table, "table name")->required();
  app.get_subcommand("verify")->add_option("--suite", st.suite, "identities, tables, oracle or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    apply_config(st, app);
    Runner runner(st, app);
    return runner.run(app.get_subcommands().front()->get_name());
  } catch (const UsageError& e) {
    std::cerr << "apz: " << e.what() << '\n';
    return kUsage;
  } catch (const VerificationError& e) {
    std::cerr << "apz: verification failed: " << e.what() << '\n';
    return kVerification;
  } catch (const DomainError& e) {
    std::cerr << "apz: " << e.what() << '\n';
    return kDomain;
  } catch (const ResourceError& e) {
    std::cerr << "apz: " << e.what() << '\n';
    return kDomain;
  } catch (const NumericError& e) {
    std::cerr << "apz: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "apz: internal error: " << e.what() << '\n';
    return kFailure;
  }
}
