#include "lowlying/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "lowlying/enumerate.hpp"

namespace lowlying {
namespace {

const ProjectiveMatrix& factor_plus() {
  static const ProjectiveMatrix m = ProjectiveMatrix::generator_a() * ProjectiveMatrix::generator_b();
  return m;
}

const ProjectiveMatrix& factor_minus() {
  static const ProjectiveMatrix m =
      ProjectiveMatrix::generator_a() * ProjectiveMatrix::generator_b().inverse();
  return m;
}

BigInt max_abs_entry(const ProjectiveMatrix& m) {
  return std::max({abs(m.a()), abs(m.b()), abs(m.c()), abs(m.d())});
}

double apex_from(const BigInt& trace_abs, const BigInt& c) {
  const HighPrecision tr(trace_abs);
  const HighPrecision r = sqrt((tr - 2) * (tr + 2)) / (2 * HighPrecision(abs(c)));
  return static_cast<double>(r);
}

/// Key for visited sets.
using Entries = std::tuple<BigInt, BigInt, BigInt, BigInt>;
Entries key(const ProjectiveMatrix& m) { return {m.a(), m.b(), m.c(), m.d()}; }

}  // namespace

ProjectiveMatrix::ProjectiveMatrix(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1) throw std::domain_error("matrix determinant must be 1");
  const BigInt& lead = a_ != 0 ? a_ : (b_ != 0 ? b_ : (c_ != 0 ? c_ : d_));
  if (lead < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

ProjectiveMatrix operator*(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
          x.c_ * y.b_ + x.d_ * y.d_};
}

std::string ProjectiveMatrix::to_string() const {
  return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
}

ProjectiveMatrix encode(const BinaryWord& w) {
  ProjectiveMatrix m = ProjectiveMatrix::identity();
  for (int j = 0; j < w.length(); ++j) m = m * (w[j] > 0 ? factor_plus() : factor_minus());
  return m;
}

const char* to_string(MatrixKind kind) noexcept {
  switch (kind) {
    case MatrixKind::elliptic:
      return "elliptic";
    case MatrixKind::parabolic:
      return "parabolic";
    case MatrixKind::hyperbolic:
      return "hyperbolic";
  }
  return "unknown";
}

MatrixKind classify(const ProjectiveMatrix& m) {
  const BigInt tr = m.trace_abs();
  if (tr < 2) return MatrixKind::elliptic;
  if (tr == 2) return MatrixKind::parabolic;
  return MatrixKind::hyperbolic;
}

double geodesic_length(const ProjectiveMatrix& m) {
  if (classify(m) != MatrixKind::hyperbolic) {
    throw std::domain_error("geodesic length needs a hyperbolic matrix, got " + m.to_string());
  }
  const HighPrecision half = HighPrecision(m.trace_abs()) / 2;
  return static_cast<double>(2 * acosh(half));
}

double apex_height(const ProjectiveMatrix& m) {
  if (classify(m) != MatrixKind::hyperbolic) {
    throw std::domain_error("apex height needs a hyperbolic matrix, got " + m.to_string());
  }
  if (m.c() == 0) throw std::domain_error("axis of " + m.to_string() + " is vertical (c = 0)");
  return apex_from(m.trace_abs(), m.c());
}

BracketHits bracket_hits(int k, double depth) {
  const double lo = std::log(k / 2.0);
  const double mid = std::log((k + 1) / 2.0);
  const double hi = std::log((k + 2) / 2.0);
  BracketHits hits;
  hits.paper = lo < depth && depth < mid;
  hits.shifted = mid < depth && depth < hi;
  hits.widened = lo - kBracketMargin < depth && depth < hi + kBracketMargin;
  hits.boundary = std::abs(depth - lo) <= kBracketMargin || std::abs(depth - mid) <= kBracketMargin ||
                  std::abs(depth - hi) <= kBracketMargin;
  return hits;
}

DepthReport max_depth(const BinaryWord& w, const DepthSearchOptions& options) {
  const ProjectiveMatrix base = encode(w);
  if (classify(base) != MatrixKind::hyperbolic) {
    throw std::domain_error("max_depth needs a hyperbolic word, got " + w.to_string());
  }
  const ProjectiveMatrix a = ProjectiveMatrix::generator_a();

  std::vector<ProjectiveMatrix> candidates;
  for (int k = 0; k < w.length(); ++k) {
    const ProjectiveMatrix m = encode(rotate(w, k));
    candidates.push_back(m);
    candidates.push_back(m.conjugated_by(a));
  }

  DepthReport report{w, base.trace_abs(), 0.0, 0, 0.0, 0.0, BigInt(0), 0, true, 0};
  report.geo_length = geodesic_length(base);
  report.max_run = max_cyclic_run(w);
  BigInt entry_bound = 0;
  for (const auto& m : candidates) {
    entry_bound = std::max(entry_bound, max_abs_entry(m));
    if (m.c() != 0 && (report.min_c == 0 || abs(m.c()) < report.min_c)) report.min_c = abs(m.c());
  }
  report.apex = apex_from(report.trace_abs, report.min_c);
  report.depth = std::log(report.apex);
  report.winding = static_cast<int>(std::floor(2.0 * report.apex));

  if (options.visit_limit > 0) {
    // Breadth-first over conjugates by the generators and the cusp translation.
    const ProjectiveMatrix b = ProjectiveMatrix::generator_b();
    const ProjectiveMatrix shift(1, 1, 0, 1);
    const std::vector<ProjectiveMatrix> moves{a, b, b.inverse(), shift, shift.inverse()};
    entry_bound = std::max(entry_bound, BigInt(2)) * options.entry_growth;

    std::set<Entries> seen;
    std::deque<ProjectiveMatrix> queue;
    for (const auto& m : candidates) {
      if (seen.insert(key(m)).second) queue.push_back(m);
    }
    BigInt best = report.min_c;
    while (!queue.empty() && seen.size() < options.visit_limit) {
      const ProjectiveMatrix m = queue.front();
      queue.pop_front();
      if (m.c() != 0 && abs(m.c()) < best) best = abs(m.c());
      for (const auto& g : moves) {
        ProjectiveMatrix next = m.conjugated_by(g);
        if (max_abs_entry(next) > entry_bound) continue;
        if (seen.insert(key(next)).second) queue.push_back(std::move(next));
      }
    }
    report.search_visited = seen.size();
    report.search_agrees = best == report.min_c;
  }
  return report;
}

bool in_thick_part(const BinaryWord& w, int m) {
  if (m < 1) throw std::domain_error("in_thick_part: m must be >= 1");
  return max_cyclic_run(w) <= m;
}

AuditReport audit_excursion_brackets(int tau_max, unsigned threads) {
  if (tau_max < 2) throw std::domain_error("audit: tau_max must be >= 2");
  std::vector<BinaryWord> words;
  for (int tau = 1; tau <= tau_max; ++tau) {
    for_each_class(tau, ClassFilter{false, true, std::nullopt},
                   [&words](const BinaryWord& w) { words.push_back(w); });
  }

  std::vector<std::optional<AuditRow>> slots(words.size());
  const auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      AuditRow row{max_depth(words[i]), words[i].length(), {}};
      row.hits = bracket_hits(row.report.max_run, row.report.depth);
      slots[i] = std::move(row);
    }
  };
  threads = std::max(1U, threads);
  if (threads == 1) {
    work(0, words.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t step = (words.size() + threads - 1) / threads;
    for (std::size_t lo = 0; lo < words.size(); lo += step) {
      pool.emplace_back(work, lo, std::min(words.size(), lo + step));
    }
    for (auto& th : pool) th.join();
  }

  AuditReport report;
  report.rows.reserve(slots.size());
  for (auto& slot : slots) report.rows.push_back(std::move(*slot));
  auto& s = report.summary;
  for (const auto& row : report.rows) {
    ++s.classes;
    s.paper_hits += row.hits.paper;
    s.shifted_hits += row.hits.shifted;
    s.widened_hits += row.hits.widened;
    s.neither += !row.hits.paper && !row.hits.shifted;
    s.boundary += row.hits.boundary;
    s.search_disagreements += !row.report.search_agrees;
  }
  return report;
}

}  // namespace lowlying
