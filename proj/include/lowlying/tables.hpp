#pragma once

// Row-oriented tables with CSV and JSON emission, and the report builders
// behind the CLI (Table 1, growth laws, depth audits).

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lowlying/counting.hpp"
#include "lowlying/geometry.hpp"
#include "lowlying/numeric.hpp"

namespace lowlying {

using Cell = std::variant<std::monostate, BigInt, double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// Reals with 12 significant digits.
std::string format_real(double value);

/// Header row, comma separated, integers unquoted, empty cell for missing.
std::string to_csv(const Table& table);

/// Array of objects keyed by column name. Integers that fit in 64 bits are
/// numbers, larger ones are decimal strings; missing cells are null.
std::string to_json(const Table& table);

Table count_table(const std::vector<CountRecord>& records);

struct TableOptions {
  int oracle_max = 16;
  unsigned threads = 1;
};

struct CheckedTable {
  Table table;
  /// Every dual-sourced cell agreed.
  bool consistent = true;
};

/// Four family rows: geodesics of length 2t, reciprocal geodesics of length
/// 4t, geodesics in S_m, reciprocal geodesics in S_m.
CheckedTable table1(int t, int m, const TableOptions& options = {});

/// Columns t, exact, target, ratio, source for one growth law over 1..t_max.
/// `primitive` switches items 1 and 2 to primitive classes; items 3 and 4
/// always count primitive hyperbolic classes.
Table growth_table(int item, int t_max, std::optional<int> m, bool primitive,
                   const TableOptions& options = {});

Table depth_table(const std::vector<DepthReport>& reports);
Table audit_table(const AuditReport& report);
Table audit_summary_table(const AuditSummary& summary);

}  // namespace lowlying
