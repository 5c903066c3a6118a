#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "apz/format.hpp"
#include "apz/precision.hpp"
#include "apz/real.hpp"

namespace apz {

using TableKey = std::vector<std::string>;

/// One reproducible reference table: its index grid in printed row order and
/// the function that evaluates a cell.
struct TableDefinition {
  std::string name;
  std::string description;
  std::vector<std::string> columns;  // index columns; the value column is implicit
  std::vector<TableKey> keys;
  PaperStyle style = PaperStyle::leading_dot;
  int digits = 62;  // digits shown in paper format
  std::function<Real(const TableKey&, const PrecisionContext&)> value;
  /// Rows that are only trusted to a reduced number of digits.
  std::vector<std::pair<TableKey, int>> digit_limits;

  int compare_digits(const TableKey& key) const;
};

const std::vector<TableDefinition>& table_registry();
/// Throws UsageError for an unknown name.
const TableDefinition& find_table(std::string_view name);

struct TableRow {
  TableKey key;
  Real value;
};
std::vector<TableRow> generate_table(const TableDefinition& table, const PrecisionContext& ctx);

enum class OutputMode { plain, paper, csv };
OutputMode parse_output_mode(std::string_view text);

/// plain: "k s value" with scientific values; paper: truncated paper style;
/// csv: header row then comma-separated rows, LF line endings.
std::string render_table(const TableDefinition& table, const std::vector<TableRow>& rows, OutputMode mode,
                         int digits_shown);

struct GoldenRow {
  TableKey key;
  std::string value;
};
struct GoldenTable {
  std::string name;
  std::string header;
  std::vector<std::string> columns;  // including the trailing "value"
  std::vector<GoldenRow> rows;
};
/// Reads "# name: header", "# columns: ..." and whitespace-separated rows.
GoldenTable load_golden(const std::filesystem::path& path);

struct TableCheck {
  std::string table;
  std::size_t rows_checked = 0;
  std::vector<std::string> failures;
  double seconds = 0;
  bool ok() const { return failures.empty() && rows_checked > 0; }
};
/// Evaluates every golden row and requires a prefix match of its digits.
TableCheck check_table(const TableDefinition& table, const GoldenTable& golden, const PrecisionContext& ctx);

}  // namespace apz
