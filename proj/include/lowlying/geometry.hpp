#pragma once

// Words as PSL(2,Z) elements via a -> [[0,-1],[1,0]], b -> [[1,-1],[1,0]].
// Matrix arithmetic is exact; only apex, depth and length are floating point.

#include <cstdint>
#include <string>
#include <vector>

#include "lowlying/binary_word.hpp"
#include "lowlying/numeric.hpp"

namespace lowlying {

/// [[a, b], [c, d]] with ad - bc = 1, identified with its negative. Stored with
/// the first nonzero of (a, b, c, d) positive.
class ProjectiveMatrix {
 public:
  /// Throws std::domain_error unless ad - bc == 1.
  ProjectiveMatrix(BigInt a, BigInt b, BigInt c, BigInt d);

  static ProjectiveMatrix identity() { return {1, 0, 0, 1}; }
  static ProjectiveMatrix generator_a() { return {0, -1, 1, 0}; }
  static ProjectiveMatrix generator_b() { return {1, -1, 1, 0}; }

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  const BigInt& c() const noexcept { return c_; }
  const BigInt& d() const noexcept { return d_; }

  BigInt trace_abs() const { return abs(a_ + d_); }
  ProjectiveMatrix inverse() const { return {d_, -b_, -c_, a_}; }
  /// g * this * g^-1
  ProjectiveMatrix conjugated_by(const ProjectiveMatrix& g) const { return g * *this * g.inverse(); }

  std::string to_string() const;

  friend ProjectiveMatrix operator*(const ProjectiveMatrix& x, const ProjectiveMatrix& y);
  friend bool operator==(const ProjectiveMatrix&, const ProjectiveMatrix&) = default;

 private:
  BigInt a_, b_, c_, d_;
};

/// Product over entries of A*B (for +1) or A*B^-1 (for -1).
ProjectiveMatrix encode(const BinaryWord& w);

enum class MatrixKind { elliptic, parabolic, hyperbolic };

const char* to_string(MatrixKind kind) noexcept;
MatrixKind classify(const ProjectiveMatrix& m);

/// 2 arccosh(|trace| / 2). Throws std::domain_error unless hyperbolic.
double geodesic_length(const ProjectiveMatrix& m);

/// Euclidean radius of the axis semicircle: sqrt(trace^2 - 4) / (2|c|).
/// Throws std::domain_error for c == 0 or non-hyperbolic m.
double apex_height(const ProjectiveMatrix& m);

/// Where a depth sits relative to the excursion brackets for run length k.
struct BracketHits {
  /// log(k/2) < depth < log((k+1)/2)
  bool paper = false;
  /// log((k+1)/2) < depth < log((k+2)/2)
  bool shifted = false;
  /// log(k/2) - margin < depth < log((k+2)/2) + margin
  bool widened = false;
  /// Depth within the margin of a bracket endpoint.
  bool boundary = false;
};

inline constexpr double kBracketMargin = 1e-9;

BracketHits bracket_hits(int k, double depth);

struct DepthReport {
  BinaryWord word;
  BigInt trace_abs;
  double geo_length = 0.0;
  int max_run = 0;
  double apex = 0.0;
  double depth = 0.0;
  /// Smallest nonzero |c| among the rotation and A-conjugate candidates.
  BigInt min_c;
  /// Integer k with k/2 < apex < (k+1)/2: the excursion's winding count.
  int winding = 0;
  /// The bounded conjugation search found no conjugate with smaller |c|.
  bool search_agrees = true;
  std::uint64_t search_visited = 0;
};

struct DepthSearchOptions {
  /// Cap on matrices explored by the conjugation search; 0 disables it.
  std::uint64_t visit_limit = 4096;
  /// Entries are allowed to grow to this multiple of the largest candidate entry.
  int entry_growth = 4;
};

/// Deepest cusp excursion of the closed geodesic of w.
/// Throws std::domain_error unless encode(w) is hyperbolic.
DepthReport max_depth(const BinaryWord& w, const DepthSearchOptions& options = {});

/// max_cyclic_run(w) <= m.
bool in_thick_part(const BinaryWord& w, int m);

struct AuditRow {
  DepthReport report;
  int tau = 0;
  BracketHits hits;
};

struct AuditSummary {
  std::uint64_t classes = 0;
  std::uint64_t paper_hits = 0;
  std::uint64_t shifted_hits = 0;
  std::uint64_t widened_hits = 0;
  std::uint64_t neither = 0;
  std::uint64_t boundary = 0;
  std::uint64_t search_disagreements = 0;
};

struct AuditReport {
  std::vector<AuditRow> rows;
  AuditSummary summary;
};

/// Depth of every hyperbolic class with tau <= tau_max against the excursion
/// brackets. Measures only; never throws on a miss.
AuditReport audit_excursion_brackets(int tau_max, unsigned threads = 1);

}  // namespace lowlying
