#pragma once

// Exact counters for conjugacy classes of Z2 * Z3.
//
// Length bookkeeping: `tau` is the number of entries of a binary word, i.e.
// group word length 2*tau. Reciprocal counts take `t` with group length 4t.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lowlying/numeric.hpp"

namespace lowlying {

/// Thrown when a floating-point closed form cannot be trusted to round correctly.
class PrecisionError : public std::range_error {
 public:
  using std::range_error::range_error;
};

enum class Family {
  classes,
  primitive,
  reciprocal,
  reciprocal_primitive,
  lowlying,
  lowlying_reciprocal,
  compositions,
};

std::string_view to_string(Family f) noexcept;
/// Accepts the hyphenated CLI spelling, e.g. "reciprocal-primitive".
std::optional<Family> parse_family(std::string_view name) noexcept;
/// True for families whose counts depend on a run bound m.
bool is_m_parameterized(Family f) noexcept;

/// One row of a counting table.
struct CountRecord {
  Family family;
  int t;
  std::optional<int> m;
  BigInt exact;
  std::optional<double> target;
};

/// Number of rotation orbits of binary words of length tau: (1/tau) sum_j 2^gcd(j,tau).
BigInt necklace_count(int tau);

/// Primitive classes of length 2*tau, by subtracting powers of shorter primitives.
BigInt primitive_class_count(int tau);

/// Reciprocal classes of length 4t: 2^{t-1}, or the primitive ones only.
BigInt reciprocal_count(int t, bool primitive);

/// Compositions of t with all parts <= m; C_0 = 1.
BigInt bounded_compositions(int t, int m);

/// Primitive m-low-lying reciprocal classes of length 4t (C_{t,m} minus proper powers).
BigInt lowlying_reciprocal_primitive_count(int t, int m);

struct CumulativeOptions {
  /// Adds the three length-one torsion classes [a], [b], [b^-1] (classes family only).
  bool include_torsion = false;
  std::optional<int> m;
};

/// Count at a single length for the closed-form families. The `lowlying`
/// family has no closed form and throws std::invalid_argument; use enumerate.
BigInt count_at(Family family, int t, std::optional<int> m = std::nullopt);

/// Sum of count_at over lengths 1..t_max (plus torsion when requested).
BigInt cumulative(Family family, int t_max, const CumulativeOptions& options = {});

/// Root data for z^m - z^{m-1} - ... - 1.
struct AlphaData {
  int m;
  HighPrecision alpha;
  /// (alpha - 1) / (2 + (m+1)(alpha - 2))
  HighPrecision d;
  /// Polynomial value at alpha.
  HighPrecision residual;

  double alpha_value() const { return static_cast<double>(alpha); }
  double d_value() const { return static_cast<double>(d); }
};

/// Bisection on [2(1 - 2^-m), 2] until the bracket is narrower than tol and
/// |p(mid)| <= tol. Results are cached per (m, tol).
AlphaData alpha(int m, double tol = 1e-13);

/// Evaluates z^m - z^{m-1} - ... - 1.
HighPrecision alpha_polynomial(int m, const HighPrecision& z);

/// Largest d_m * alpha_m^t accepted by closed_form_compositions.
inline constexpr double kClosedFormCeiling = 4503599627370496.0;  // 2^52

/// floor(d_m alpha_m^t + 1/2). Throws PrecisionError at or above the ceiling.
BigInt closed_form_compositions(int t, int m);

/// 2^{t - t/m - 1} / t
double lowlying_lower_bound(int t, int m);

/// Right-hand sides of the four growth laws, items 1..4.
double growth_target(int item, int t, std::optional<int> m = std::nullopt);

}  // namespace lowlying
