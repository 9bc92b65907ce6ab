#include "lowlying/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lowlying/binary_word.hpp"
#include "lowlying/counting.hpp"
#include "lowlying/enumerate.hpp"
#include "lowlying/geometry.hpp"
#include "lowlying/tables.hpp"
#include "lowlying/verify.hpp"

namespace lowlying::cli {
namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Settings {
  std::string family;
  std::optional<int> t;
  std::optional<int> m;
  bool cumulative = false;
  bool primitive = false;
  bool torsion = false;
  std::string format;
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  int oracle_max = 16;
  double tol = 1e-13;
  int item = 0;
  std::string suite = "all";
  int tmax = 12;
  std::string word;
  std::string syllables;
  bool summary_only = false;
};

void emit(const Table& table, const std::string& format, std::ostream& out) {
  out << (format == "json" ? to_json(table) : to_csv(table));
}

std::optional<double> count_target(Family family, int t, std::optional<int> m, bool cumulative) {
  switch (family) {
    case Family::classes:
    case Family::primitive:
      return cumulative ? growth_target(3, t) : std::exp2(t) / t;
    case Family::lowlying:
      return cumulative ? std::nullopt : std::optional<double>(lowlying_lower_bound(t, std::max(*m, 2)));
    case Family::lowlying_reciprocal:
    case Family::compositions: {
      if (*m < 2) return std::nullopt;
      const AlphaData a = alpha(*m);
      const double base = std::pow(a.alpha_value(), t);
      return cumulative ? a.alpha_value() / (2.0 + (*m + 1) * (a.alpha_value() - 2.0)) * base
                        : a.d_value() * base;
    }
    default:
      return std::nullopt;
  }
}

int do_count(const Settings& s, std::ostream& out) {
  const auto parsed = parse_family(s.family);
  if (!parsed) throw std::invalid_argument("unknown family '" + s.family + "'");
  Family family = *parsed;
  if (s.primitive) {
    if (family == Family::classes) family = Family::primitive;
    if (family == Family::reciprocal) family = Family::reciprocal_primitive;
  }
  if (is_m_parameterized(family) && !s.m) throw std::invalid_argument(s.family + " requires --m");
  if (s.m && !is_m_parameterized(family)) throw std::invalid_argument(s.family + " takes no --m");
  const int t = *s.t;
  if (t < 1) throw std::domain_error("--t must be >= 1");

  const auto at = [&](int n) -> BigInt {
    if (family == Family::lowlying) {
      if (n > s.oracle_max) throw std::domain_error("lowlying counts are enumerated; raise --oracle-max");
      return count_classes(n, ClassFilter{s.primitive, false, s.m}, s.threads);
    }
    if (family == Family::lowlying_reciprocal && s.primitive) return lowlying_reciprocal_primitive_count(n, *s.m);
    return count_at(family, n, s.m);
  };

  BigInt exact = 0;
  if (!s.cumulative) {
    exact = at(t);
  } else if (family == Family::lowlying || (family == Family::lowlying_reciprocal && s.primitive)) {
    for (int n = 1; n <= t; ++n) exact += at(n);
  } else {
    exact = cumulative(family, t, {s.torsion, s.m});
  }
  if (s.torsion && s.cumulative && family != Family::classes && family != Family::primitive) {
    throw std::invalid_argument("--torsion applies to classes and primitive only");
  }

  if (s.format == "plain") {
    out << exact.str() << "\n";
    return kOk;
  }
  const CountRecord record{family, t, s.m, exact, count_target(family, t, s.m, s.cumulative)};
  emit(count_table({record}), s.format, out);
  return kOk;
}

int do_enumerate(const Settings& s, std::ostream& out) {
  const auto parsed = parse_family(s.family);
  if (!parsed) throw std::invalid_argument("unknown family '" + s.family + "'");
  const int t = *s.t;
  Table table;
  switch (*parsed) {
    case Family::classes:
    case Family::primitive:
    case Family::lowlying: {
      ClassFilter filter;
      filter.primitive_only = s.primitive || *parsed == Family::primitive;
      if (*parsed == Family::lowlying) {
        if (!s.m) throw std::invalid_argument("lowlying requires --m");
        filter.max_run = *s.m;
      }
      table.columns = {"word", "syllables", "tau", "max_run", "primitive", "kind"};
      for (const auto& w : classes(t, filter)) {
        table.add_row({w.to_string(), w.to_syllables(), BigInt(w.length()), BigInt(max_cyclic_run(w)),
                       is_primitive(w), std::string(to_string(classify(encode(w))))});
      }
      break;
    }
    case Family::reciprocal:
    case Family::reciprocal_primitive:
    case Family::lowlying_reciprocal: {
      std::optional<int> m;
      if (*parsed == Family::lowlying_reciprocal) {
        if (!s.m) throw std::invalid_argument("lowlying-reciprocal requires --m");
        m = s.m;
      }
      const bool primitive_only = s.primitive || *parsed == Family::reciprocal_primitive;
      table.columns = {"word", "first_half", "t", "k0", "primitive", "composition"};
      for (const auto& h : reciprocal_classes(t, m)) {
        const bool primitive = h.k0() == h.half_length();
        if (primitive_only && !primitive) continue;
        table.add_row({h.word().to_string(), h.first_half().to_string(), BigInt(t), BigInt(h.k0()), primitive,
                       phi(h).to_string()});
      }
      break;
    }
    case Family::compositions: {
      if (!s.m) throw std::invalid_argument("compositions requires --m");
      table.columns = {"composition", "t", "m"};
      for (const auto& c : composition_list(t, *s.m)) table.add_row({c.to_string(), BigInt(t), BigInt(*s.m)});
      break;
    }
  }
  emit(table, s.format, out);
  return kOk;
}

int do_alpha(const Settings& s, std::ostream& out) {
  const AlphaData a = alpha(*s.m, s.tol);
  const auto digits = [](const HighPrecision& x) { return x.str(20); };
  const auto sci = [](const HighPrecision& x) { return x.str(3, std::ios_base::scientific); };
  if (s.format == "plain") {
    out << digits(a.alpha) << " residual " << sci(a.residual) << " d " << digits(a.d) << "\n";
    return kOk;
  }
  Table table{{"m", "alpha", "d", "residual"}, {}};
  table.add_row({BigInt(a.m), a.alpha_value(), a.d_value(), static_cast<double>(a.residual)});
  emit(table, s.format, out);
  return kOk;
}

int do_verify(const Settings& s, std::ostream& out) {
  const auto suite = parse_suite(s.suite);
  if (!suite) throw std::invalid_argument("unknown suite '" + s.suite + "'");
  const auto results = run_suite(*suite, {s.tmax, s.oracle_max, s.threads});
  int failures = 0;
  for (const auto& r : results) {
    failures += !r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.suite << "/" << r.name;
    if (!r.detail.empty()) out << "  " << r.detail;
    out << "\n";
  }
  out << results.size() - static_cast<std::size_t>(failures) << "/" << results.size() << " checks passed\n";
  return failures == 0 ? kOk : kFailed;
}

int do_growth(const Settings& s, std::ostream& out) {
  emit(growth_table(s.item, *s.t, s.m, s.primitive, {s.oracle_max, s.threads}), s.format, out);
  return kOk;
}

int do_table1(const Settings& s, std::ostream& out, std::ostream& err) {
  const CheckedTable result = table1(*s.t, *s.m, {s.oracle_max, s.threads});
  emit(result.table, s.format, out);
  if (!result.consistent) {
    err << "table1: formula and enumeration disagree\n";
    return kFailed;
  }
  return kOk;
}

int do_depth(const Settings& s, std::ostream& out) {
  if (s.word.empty() == s.syllables.empty()) throw std::invalid_argument("give exactly one of --word or --syllables");
  const BinaryWord w = s.word.empty() ? BinaryWord::parse_syllables(s.syllables) : BinaryWord::parse(s.word);
  emit(depth_table({max_depth(w)}), s.format, out);
  return kOk;
}

int do_audit(const Settings& s, std::ostream& out) {
  const AuditReport report = audit_excursion_brackets(s.tmax, s.threads);
  if (s.format == "json") {
    auto doc = nlohmann::ordered_json::object();
    if (!s.summary_only) doc["rows"] = nlohmann::ordered_json::parse(to_json(audit_table(report)));
    doc["summary"] = nlohmann::ordered_json::parse(to_json(audit_summary_table(report.summary)));
    out << doc.dump(2) << "\n";
    return kOk;
  }
  if (!s.summary_only) out << to_csv(audit_table(report)) << "\n";
  out << to_csv(audit_summary_table(report.summary));
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count and enumerate conjugacy classes in Z2*Z3: closed, reciprocal and low-lying geodesics."};
  app.name("lowlying");
  app.require_subcommand(1);
  Settings s;
  const std::vector<std::string> formats{"plain", "csv", "json"};

  std::map<const CLI::App*, std::string> default_format;
  const auto add_common = [&](CLI::App* sub, const std::string& fallback) {
    default_format[sub] = fallback;
    sub->add_option("--format", s.format, "Output format (default " + fallback + ")")->check(CLI::IsMember(formats));
    sub->add_option("--threads", s.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--oracle-max", s.oracle_max, "Largest length cross-checked by enumeration")
        ->check(CLI::Range(1, kMaxEnumerationLength));
  };

  auto* count = app.add_subcommand("count", "Exact class counts");
  count->add_option("--family", s.family, "classes|primitive|reciprocal|reciprocal-primitive|lowlying|lowlying-reciprocal|compositions")->required();
  count->add_option("--t", s.t, "Length parameter")->required();
  count->add_option("--m", s.m, "Run bound");
  count->add_flag("--cumulative", s.cumulative, "Sum over lengths 1..t");
  count->add_flag("--primitive", s.primitive, "Primitive classes only");
  count->add_flag("--torsion", s.torsion, "Add the three torsion classes (cumulative classes)");
  add_common(count, "plain");

  auto* enumerate = app.add_subcommand("enumerate", "List class representatives");
  enumerate->add_option("--family", s.family, "Family to list")->required();
  enumerate->add_option("--t", s.t, "Length parameter")->required()->check(CLI::Range(1, kMaxEnumerationLength));
  enumerate->add_option("--m", s.m, "Run bound");
  enumerate->add_flag("--primitive", s.primitive, "Primitive classes only");
  add_common(enumerate, "csv");

  auto* alpha_cmd = app.add_subcommand("alpha", "Root of z^m - z^{m-1} - ... - 1");
  alpha_cmd->add_option("--m", s.m, "Run bound (>= 2)")->required();
  alpha_cmd->add_option("--tol", s.tol, "Bracket width and residual tolerance");
  add_common(alpha_cmd, "plain");

  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("--suite", s.suite, "binwords|counting|enumerate|geometry|all");
  verify->add_option("--tmax", s.tmax, "Largest exhaustive length")->check(CLI::Range(2, kMaxEnumerationLength));
  add_common(verify, "plain");

  auto* growth = app.add_subcommand("growth", "Exact counts against a growth law");
  growth->add_option("--item", s.item, "Growth law 1..4")->required()->check(CLI::Range(1, 4));
  growth->add_option("--t,--tmax", s.t, "Largest t")->required();
  growth->add_option("--m", s.m, "Run bound (items 2 and 4)");
  growth->add_flag("--primitive", s.primitive, "Primitive counts for items 1 and 2");
  add_common(growth, "csv");

  auto* table = app.add_subcommand("table1", "Cardinalities of the four geodesic families");
  table->add_option("--t", s.t, "Length parameter")->required();
  table->add_option("--m", s.m, "Run bound (>= 2)")->required();
  add_common(table, "csv");

  auto* depth = app.add_subcommand("depth", "Deepest cusp excursion of one word");
  depth->add_option("--word", s.word, "Word over {+,-}");
  depth->add_option("--syllables", s.syllables, "Word as a/b/B syllables, e.g. abaB");
  add_common(depth, "csv");

  auto* audit = app.add_subcommand("audit-lemma71", "Excursion depth against winding brackets");
  audit->add_option("--tmax", s.tmax, "Largest tau")->default_val(10)->check(CLI::Range(2, kMaxEnumerationLength));
  audit->add_flag("--summary", s.summary_only, "Summary histogram only");
  add_common(audit, "csv");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  if (s.format.empty()) s.format = default_format.at(app.get_subcommands().front());

  try {
    if (*count) return do_count(s, out);
    if (*enumerate) return do_enumerate(s, out);
    if (*alpha_cmd) return do_alpha(s, out);
    if (*verify) return do_verify(s, out);
    if (*growth) return do_growth(s, out);
    if (*table) return do_table1(s, out, err);
    if (*depth) return do_depth(s, out);
    if (*audit) return do_audit(s, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::range_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, out, err);
}

}  // namespace lowlying::cli
