#include "apz/tables.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "apz/almost_prime_zeta.hpp"
#include "apz/derived_constants.hpp"
#include "apz/errors.hpp"
#include "apz/prime_zeta.hpp"

namespace apz {

namespace {

long key_int(const TableKey& key, std::size_t i) { return std::stol(key.at(i)); }

std::vector<TableKey> range1(long lo, long hi) {
  std::vector<TableKey> out;
  for (long i = lo; i <= hi; ++i) out.push_back({std::to_string(i)});
  return out;
}

// outer index first, as the rows are printed
std::vector<TableKey> range2(long outer_lo, long outer_hi, long inner_lo, long inner_hi, bool outer_first) {
  std::vector<TableKey> out;
  for (long a = outer_lo; a <= outer_hi; ++a)
    for (long b = inner_lo; b <= inner_hi; ++b) {
      if (outer_first)
        out.push_back({std::to_string(a), std::to_string(b)});
      else
        out.push_back({std::to_string(b), std::to_string(a)});
    }
  return out;
}

Real signed_moebius_B(long k, long s, const PrecisionContext& ctx) {
  Real b = B_moebius(static_cast<int>(k), static_cast<int>(s), ctx);
  return k % 2 ? -b : b;
}

std::vector<TableDefinition> build_registry() {
  std::vector<TableDefinition> t;
  const PaperStyle dot = PaperStyle::leading_dot, unit = PaperStyle::unit_digit;

  t.push_back({"P", "prime zeta function P(s)", {"s"}, range1(10, 39), dot, 61,
               [](const TableKey& k, const PrecisionContext& c) { return prime_zeta(key_int(k, 0), c); }, {}});
  t.push_back({"moments", "moments sum_s P(s)/s^u", {"u"}, range1(1, 6), dot, 60,
               [](const TableKey& k, const PrecisionContext& c) {
                 return prime_zeta_moment(static_cast<int>(key_int(k, 0)), c);
               },
               {}});
  // the s = 2 entry is only trusted to 40 digits: the printed value and an
  // earlier published one part ways after 42
  t.push_back({"Pprime", "derivative P'(s)", {"s"}, range1(2, 29), unit, 61,
               [](const TableKey& k, const PrecisionContext& c) { return prime_zeta_prime(key_int(k, 0), c); },
               {{{"2"}, 40}}});
  t.push_back({"Pk", "almost-prime zeta P_k(s)", {"k", "s"}, range2(2, 6, 2, 8, true), unit, 61,
               [](const TableKey& k, const PrecisionContext& c) {
                 return almost_prime_zeta(static_cast<int>(key_int(k, 0)), key_int(k, 1), c);
               },
               {}});
  t.push_back({"Pkprime", "derivative P_k'(s)", {"k", "s"}, range2(2, 6, 2, 8, true), unit, 61,
               [](const TableKey& k, const PrecisionContext& c) {
                 return almost_prime_zeta_prime(static_cast<int>(key_int(k, 0)), key_int(k, 1), c);
               },
               {}});
  t.push_back({"Pkmu", "square-free variant P_k^(mu)(s)", {"k", "s"}, range2(2, 6, 2, 8, true), unit, 60,
               [](const TableKey& k, const PrecisionContext& c) {
                 return almost_prime_zeta_moebius(static_cast<int>(key_int(k, 0)), key_int(k, 1), c);
               },
               {}});
  t.push_back({"mm", "sum_n 1/(n^s (n-1))", {"s"}, range1(1, 10), dot, 55,
               [](const TableKey& k, const PrecisionContext& c) {
                 return zeta_partial_fraction_sum(static_cast<int>(key_int(k, 0)), c);
               },
               {}});
  t.push_back({"Nk1", "B_{k,1}", {"k"}, range1(1, 25), dot, 62,
               [](const TableKey& k, const PrecisionContext& c) { return B(static_cast<int>(key_int(k, 0)), 1, c); },
               {}});
  {
    auto keys = range2(2, 6, 1, 5, false);
    keys.erase(keys.begin() + 4);  // k = 5, s = 2 is not printed
    t.push_back({"Nks", "B_{k,s}", {"k", "s"}, keys, dot, 62,
                 [](const TableKey& k, const PrecisionContext& c) {
                   return B(static_cast<int>(key_int(k, 0)), static_cast<int>(key_int(k, 1)), c);
                 },
                 {}});
  }
  t.push_back({"Nk1mu", "(-1)^k B_{k,1}^(mu)", {"k"}, range1(1, 25), dot, 62,
               [](const TableKey& k, const PrecisionContext& c) { return signed_moebius_B(key_int(k, 0), 1, c); },
               {}});
  t.push_back({"Nksmu", "(-1)^k B_{k,s}^(mu)", {"k", "s"}, range2(2, 6, 2, 5, false), dot, 62,
               [](const TableKey& k, const PrecisionContext& c) {
                 return signed_moebius_B(key_int(k, 0), key_int(k, 1), c);
               },
               {}});
  t.push_back({"H0", "Hurwitz projection P_k(s,0)", {"k", "s"}, range2(2, 6, 1, 5, false), dot, 63,
               [](const TableKey& k, const PrecisionContext& c) {
                 return hurwitz_almost_prime(static_cast<int>(key_int(k, 0)), key_int(k, 1), 0, Variant::plain, c);
               },
               {}});
  t.push_back({"Hlog", "|P_k'(s,0)|", {"k", "s"}, range2(2, 6, 1, 5, false), dot, 63,
               [](const TableKey& k, const PrecisionContext& c) {
                 return abs(hurwitz_almost_prime_prime(static_cast<int>(key_int(k, 0)), key_int(k, 1), 0, c));
               },
               {}});
  t.push_back({"Lkl", "L_{k,l}", {"k", "l"}, range2(1, 3, 1, 4, true), dot, 60,
               [](const TableKey& k, const PrecisionContext& c) {
                 return L(static_cast<int>(key_int(k, 0)), static_cast<int>(key_int(k, 1)), c);
               },
               {}});
  t.push_back({"log2parts", "sum over Omega(n)=k of 1/(n 2^n)", {"k"}, range1(1, 4), dot, 58,
               [](const TableKey& k, const PrecisionContext& c) {
                 return log2_component(static_cast<int>(key_int(k, 0)), c);
               },
               {}});
  t.push_back({"remarks", "constants quoted in the text",
               {"name"},
               {{"unitary_squarefree"}, {"unitary_cubefree"}, {"moment_total"}},
               dot, 48,
               [](const TableKey& k, const PrecisionContext& c) -> Real {
                 const std::string& name = k.at(0);
                 if (name == "unitary_squarefree")
                   return log_weighted_prime_sum(RationalFunction{{1, 2}, {-1, 0, 2, 1}}, c);
                 if (name == "unitary_cubefree")
                   return log_weighted_prime_sum(RationalFunction{{-2, -1, 4}, {1, -1, -2, 1, 1}}, c);
                 if (name == "moment_total") return prime_zeta_moment_total(c);
                 throw UsageError("unknown remark constant '" + name + "'");
               },
               {}});
  return t;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

int TableDefinition::compare_digits(const TableKey& key) const {
  for (const auto& [k, d] : digit_limits)
    if (k == key) return d;
  return -1;
}

const std::vector<TableDefinition>& table_registry() {
  static const std::vector<TableDefinition> registry = build_registry();
  return registry;
}

const TableDefinition& find_table(std::string_view name) {
  for (const auto& t : table_registry())
    if (t.name == name) return t;
  std::string known;
  for (const auto& t : table_registry()) known += (known.empty() ? "" : ", ") + t.name;
  throw UsageError("unknown table '" + std::string(name) + "' (known: " + known + ")");
}

std::vector<TableRow> generate_table(const TableDefinition& table, const PrecisionContext& ctx) {
  std::vector<TableRow> rows;
  rows.reserve(table.keys.size());
  for (const auto& key : table.keys) rows.push_back({key, table.value(key, ctx)});
  return rows;
}

OutputMode parse_output_mode(std::string_view text) {
  if (text == "plain") return OutputMode::plain;
  if (text == "paper") return OutputMode::paper;
  if (text == "csv") return OutputMode::csv;
  throw UsageError("unknown output format '" + std::string(text) + "' (plain, paper or csv)");
}

std::string render_table(const TableDefinition& table, const std::vector<TableRow>& rows, OutputMode mode,
                         int digits_shown) {
  std::ostringstream out;
  const char sep = mode == OutputMode::csv ? ',' : ' ';
  if (mode == OutputMode::csv) {
    for (const auto& c : table.columns) out << csv_escape(c) << ',';
    out << "value\n";
  }
  for (const auto& row : rows) {
    for (const auto& k : row.key) out << (mode == OutputMode::csv ? csv_escape(k) : k) << sep;
    if (mode == OutputMode::paper)
      out << format_paper_style(row.value, digits_shown, table.style);
    else
      out << format_scientific(row.value, digits_shown);
    out << '\n';
  }
  return out.str();
}

GoldenTable load_golden(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open golden file " + path.string());
  GoldenTable g;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto colon = line.find(':');
      if (colon == std::string::npos) continue;
      const std::string tag = line.substr(2, colon - 2);
      const std::string rest = line.substr(std::min(line.size(), colon + 2));
      if (tag == "columns") {
        std::istringstream cols(rest);
        for (std::string c; cols >> c;) g.columns.push_back(c);
      } else if (g.name.empty()) {
        g.name = tag;
        g.header = rest;
      }
      continue;
    }
    std::istringstream fields(line);
    std::vector<std::string> parts;
    for (std::string f; fields >> f;) parts.push_back(f);
    if (parts.size() != g.columns.size())
      throw UsageError("golden file " + path.string() + ": row '" + line + "' does not match its columns");
    GoldenRow row;
    row.value = parts.back();
    parts.pop_back();
    row.key = std::move(parts);
    g.rows.push_back(std::move(row));
  }
  if (g.name.empty() || g.columns.empty()) throw UsageError("golden file " + path.string() + " has no header");
  return g;
}

TableCheck check_table(const TableDefinition& table, const GoldenTable& golden, const PrecisionContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  TableCheck result;
  result.table = table.name;
  for (const auto& row : golden.rows) {
    ++result.rows_checked;
    std::string where = table.name;
    for (const auto& k : row.key) where += " " + k;
    try {
      const Real v = table.value(row.key, ctx);
      const auto cmp = compare_to_reference(v, row.value, table.compare_digits(row.key));
      if (!cmp.ok) result.failures.push_back(where + ": " + cmp.message);
    } catch (const std::exception& e) {
      result.failures.push_back(where + ": " + e.what());
    }
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace apz
