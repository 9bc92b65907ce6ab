#include "lowlying/tables.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "lowlying/enumerate.hpp"

namespace lowlying {
namespace {

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(const BigInt& v) const { return v.str(); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(const std::string& v) const {
      if (v.find_first_of(",\"\n") == std::string::npos) return v;
      std::string quoted = "\"";
      for (char ch : v) {
        if (ch == '"') quoted.push_back('"');
        quoted.push_back(ch);
      }
      return quoted + "\"";
    }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::json cell_json(const Cell& cell) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(const BigInt& v) const {
      if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
      }
      return v.str();
    }
    nlohmann::json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      return std::stod(format_real(v));
    }
    nlohmann::json operator()(const std::string& v) const { return v; }
    nlohmann::json operator()(bool v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

Cell optional_int(std::optional<int> v) { return v ? Cell{BigInt(*v)} : Cell{}; }

double ratio(const BigInt& exact, double target) { return static_cast<double>(exact) / target; }

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match columns");
  rows.push_back(std::move(row));
}

std::string format_real(double value) {
  std::ostringstream out;
  out.precision(12);
  out << value;
  return out.str();
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += table.columns[i];
  }
  out.push_back('\n');
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) out.push_back(',');
      out += cell_text(row[i]);
    }
    out.push_back('\n');
  }
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) object[table.columns[i]] = cell_json(row[i]);
    out.push_back(std::move(object));
  }
  return out.dump(2) + "\n";
}

Table count_table(const std::vector<CountRecord>& records) {
  Table table{{"family", "t", "m", "exact", "target"}, {}};
  for (const auto& r : records) {
    table.add_row({std::string(to_string(r.family)), BigInt(r.t), optional_int(r.m), r.exact,
                   r.target ? Cell{*r.target} : Cell{}});
  }
  return table;
}

CheckedTable table1(int t, int m, const TableOptions& options) {
  if (t < 1) throw std::domain_error("table1: t must be >= 1");
  if (m < 2) throw std::domain_error("table1: m must be >= 2");
  const bool oracle = t <= options.oracle_max && t <= kMaxEnumerationLength;

  CheckedTable out;
  out.table.columns = {"family", "word_length", "t", "m", "value", "value_kind",
                       "enumerated", "hyperbolic", "dual_sourced", "agrees"};
  const auto add = [&](const std::string& family, int length, std::optional<int> mm, Cell value,
                       const std::string& kind, std::optional<std::uint64_t> enumerated,
                       Cell hyperbolic, bool agrees) {
    out.consistent = out.consistent && agrees;
    out.table.add_row({family, BigInt(length), BigInt(t), optional_int(mm), std::move(value), kind,
                       enumerated ? Cell{BigInt(*enumerated)} : Cell{}, std::move(hyperbolic),
                       enumerated.has_value(), agrees});
  };

  {
    const BigInt value = necklace_count(t);
    std::optional<std::uint64_t> e;
    if (oracle) e = count_classes(t, ClassFilter::all(), options.threads);
    add("geodesics", 2 * t, std::nullopt, value, "exact", e, Cell{value - 2}, !e || BigInt(*e) == value);
  }
  {
    const BigInt value = reciprocal_count(t, false);
    std::optional<std::uint64_t> e;
    if (oracle) e = count_reciprocal_classes(t, std::nullopt, false, options.threads);
    add("reciprocal", 4 * t, std::nullopt, value, "exact", e, Cell{value}, !e || BigInt(*e) == value);
  }
  {
    const double bound = lowlying_lower_bound(t, m);
    std::optional<std::uint64_t> e;
    Cell hyperbolic;
    if (oracle) {
      e = count_classes(t, ClassFilter::lowlying(m), options.threads);
      hyperbolic = BigInt(count_classes(t, ClassFilter{false, true, m}, options.threads));
    }
    add("lowlying", 2 * t, m, bound, "lower_bound", e, std::move(hyperbolic),
        !e || static_cast<double>(*e) >= bound);
  }
  {
    const BigInt value = closed_form_compositions(t, m);
    bool agrees = value == bounded_compositions(t, m);
    std::optional<std::uint64_t> e;
    if (oracle) {
      e = count_reciprocal_classes(t, m, false, options.threads);
      agrees = agrees && BigInt(*e) == value;
    }
    add("lowlying-reciprocal", 4 * t, m, value, "exact", e, Cell{value}, agrees);
  }
  return out;
}

Table growth_table(int item, int t_max, std::optional<int> m, bool primitive, const TableOptions& options) {
  if (t_max < 1) throw std::domain_error("growth: t must be >= 1");
  if (item < 1 || item > 4) throw std::domain_error("growth: item must be 1, 2, 3 or 4");
  if ((item == 2 || item == 4) && !m) throw std::invalid_argument("growth item " + std::to_string(item) + " requires m");
  if (item == 2 && *m < 2) throw std::domain_error("growth item 2 requires m >= 2");
  if (item == 4 && *m < 3) throw std::domain_error("growth item 4 requires m >= 3");

  Table table{{"t", "exact", "target", "ratio", "source"}, {}};

  // Per-length counts, index n = number of binary entries (or half-length for reciprocal).
  std::vector<BigInt> per_length(static_cast<std::size_t>(t_max) + 1, 0);
  const int ceiling = std::min(options.oracle_max, kMaxEnumerationLength);
  for (int n = 1; n <= t_max; ++n) {
    auto& slot = per_length[static_cast<std::size_t>(n)];
    switch (item) {
      case 1:
        slot = reciprocal_count(n, primitive);
        break;
      case 2:
        slot = primitive ? lowlying_reciprocal_primitive_count(n, *m) : bounded_compositions(n, *m);
        break;
      case 3:
        slot = primitive_class_count(n) - (n == 1 ? 2 : 0);
        break;
      case 4:
        if (n <= ceiling) slot = count_classes(n, ClassFilter{true, true, *m}, options.threads);
        break;
    }
  }

  BigInt running = 0;
  double bound_tail = 0.0;
  for (int t = 1; t <= t_max; ++t) {
    const double target = growth_target(item, t, m);
    // Items 1 and 2 count reciprocal classes of length 4n <= 2t.
    const int top = (item == 1 || item == 2) ? t / 2 : t;
    if (item == 1 || item == 2) {
      running = 0;
      for (int n = 1; n <= top; ++n) running += per_length[static_cast<std::size_t>(n)];
    } else {
      running += per_length[static_cast<std::size_t>(t)];
    }
    if (item == 4 && t > ceiling) {
      bound_tail += 0.5 * lowlying_lower_bound(t, *m);
      const double value = static_cast<double>(running) + bound_tail;
      table.add_row({BigInt(t), value, target, value / target, std::string("bound")});
      continue;
    }
    table.add_row({BigInt(t), running, target, ratio(running, target),
                   std::string(item == 4 ? "enumerated" : "exact")});
  }
  return table;
}

Table depth_table(const std::vector<DepthReport>& reports) {
  Table table{{"word", "tau", "max_run", "trace_abs", "length", "apex", "depth", "winding",
               "min_c", "search_agrees"},
              {}};
  for (const auto& r : reports) {
    table.add_row({r.word.to_string(), BigInt(r.word.length()), BigInt(r.max_run), r.trace_abs,
                   r.geo_length, r.apex, r.depth, BigInt(r.winding), r.min_c, r.search_agrees});
  }
  return table;
}

Table audit_table(const AuditReport& report) {
  Table table{{"word", "tau", "max_run", "trace_abs", "length", "apex", "depth", "paper_bracket_hit",
               "shifted_bracket_hit"},
              {}};
  for (const auto& row : report.rows) {
    const auto& r = row.report;
    table.add_row({r.word.to_string(), BigInt(row.tau), BigInt(r.max_run), r.trace_abs, r.geo_length,
                   r.apex, r.depth, row.hits.paper, row.hits.shifted});
  }
  return table;
}

Table audit_summary_table(const AuditSummary& s) {
  Table table{{"classes", "paper_bracket_hits", "shifted_bracket_hits", "neither", "widened_bracket_hits",
               "widened_rate", "boundary_hits", "search_disagreements"},
              {}};
  const double rate = s.classes == 0 ? 0.0 : static_cast<double>(s.widened_hits) / static_cast<double>(s.classes);
  table.add_row({BigInt(s.classes), BigInt(s.paper_hits), BigInt(s.shifted_hits), BigInt(s.neither),
                 BigInt(s.widened_hits), rate, BigInt(s.boundary), BigInt(s.search_disagreements)});
  return table;
}

}  // namespace lowlying
