#include "lowlying/counting.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>
#include <vector>

namespace lowlying {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::domain_error(message);
}

/// Divisor recursion P(n) = total(n) - sum_{s | n, s < n} P(s), for all n <= top.
template <class Total>
std::vector<BigInt> primitive_table(int top, Total total) {
  std::vector<BigInt> p(static_cast<std::size_t>(top) + 1);
  for (int n = 1; n <= top; ++n) {
    BigInt value = total(n);
    for (int s = 1; s < n; ++s) {
      if (n % s == 0) value -= p[static_cast<std::size_t>(s)];
    }
    p[static_cast<std::size_t>(n)] = value;
  }
  return p;
}

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames{{
    {Family::classes, "classes"},
    {Family::primitive, "primitive"},
    {Family::reciprocal, "reciprocal"},
    {Family::reciprocal_primitive, "reciprocal-primitive"},
    {Family::lowlying, "lowlying"},
    {Family::lowlying_reciprocal, "lowlying-reciprocal"},
    {Family::compositions, "compositions"},
}};

}  // namespace

std::string_view to_string(Family f) noexcept {
  for (const auto& [family, name] : kFamilyNames) {
    if (family == f) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (const auto& [family, spelled] : kFamilyNames) {
    if (spelled == name) return family;
  }
  return std::nullopt;
}

bool is_m_parameterized(Family f) noexcept {
  return f == Family::lowlying || f == Family::lowlying_reciprocal || f == Family::compositions;
}

BigInt necklace_count(int tau) {
  require(tau >= 1, "necklace_count: tau must be >= 1");
  BigInt sum = 0;
  for (int j = 1; j <= tau; ++j) sum += pow2(static_cast<unsigned>(std::gcd(j, tau)));
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(sum, BigInt(tau), q, r);
  if (r != 0) throw std::logic_error("Burnside sum not divisible by tau");
  return q;
}

BigInt primitive_class_count(int tau) {
  require(tau >= 1, "primitive_class_count: tau must be >= 1");
  return primitive_table(tau, necklace_count)[static_cast<std::size_t>(tau)];
}

BigInt reciprocal_count(int t, bool primitive) {
  require(t >= 1, "reciprocal_count: t must be >= 1");
  const auto all = [](int n) { return pow2(static_cast<unsigned>(n - 1)); };
  if (!primitive) return all(t);
  return primitive_table(t, all)[static_cast<std::size_t>(t)];
}

BigInt bounded_compositions(int t, int m) {
  require(m >= 1, "bounded_compositions: m must be >= 1");
  if (t < 0) return 0;
  std::vector<BigInt> c(static_cast<std::size_t>(t) + 1);
  c[0] = 1;
  for (int n = 1; n <= t; ++n) {
    BigInt sum = 0;
    for (int i = 1; i <= m && i <= n; ++i) sum += c[static_cast<std::size_t>(n - i)];
    c[static_cast<std::size_t>(n)] = sum;
  }
  return c[static_cast<std::size_t>(t)];
}

BigInt lowlying_reciprocal_primitive_count(int t, int m) {
  require(t >= 1, "lowlying_reciprocal_primitive_count: t must be >= 1");
  require(m >= 1, "lowlying_reciprocal_primitive_count: m must be >= 1");
  return primitive_table(t, [m](int n) { return bounded_compositions(n, m); })[static_cast<std::size_t>(t)];
}

BigInt count_at(Family family, int t, std::optional<int> m) {
  require(t >= 1, "count: t must be >= 1");
  if (is_m_parameterized(family) && !m) {
    throw std::invalid_argument(std::string(to_string(family)) + " requires m");
  }
  switch (family) {
    case Family::classes:
      return necklace_count(t);
    case Family::primitive:
      return primitive_class_count(t);
    case Family::reciprocal:
      return reciprocal_count(t, false);
    case Family::reciprocal_primitive:
      return reciprocal_count(t, true);
    case Family::lowlying_reciprocal:
    case Family::compositions:
      return bounded_compositions(t, *m);
    case Family::lowlying:
      throw std::invalid_argument("lowlying counts have no closed form; enumerate them");
  }
  throw std::invalid_argument("unknown family");
}

BigInt cumulative(Family family, int t_max, const CumulativeOptions& options) {
  require(t_max >= 1, "cumulative: t_max must be >= 1");
  if (family == Family::reciprocal) {
    return pow2(static_cast<unsigned>(t_max)) - 1;
  }
  BigInt sum = 0;
  if (family == Family::primitive) {
    const auto p = primitive_table(t_max, necklace_count);
    for (int n = 1; n <= t_max; ++n) sum += p[static_cast<std::size_t>(n)];
  } else if (family == Family::reciprocal_primitive) {
    const auto p = primitive_table(t_max, [](int n) { return pow2(static_cast<unsigned>(n - 1)); });
    for (int n = 1; n <= t_max; ++n) sum += p[static_cast<std::size_t>(n)];
  } else {
    for (int n = 1; n <= t_max; ++n) sum += count_at(family, n, options.m);
  }
  if (options.include_torsion && (family == Family::classes || family == Family::primitive)) sum += 3;
  return sum;
}

HighPrecision alpha_polynomial(int m, const HighPrecision& z) {
  // Horner on z^m - z^{m-1} - ... - 1.
  HighPrecision value = 1;
  for (int i = 0; i < m; ++i) value = value * z - 1;
  return value;
}

AlphaData alpha(int m, double tol) {
  require(m >= 2, "alpha: m must be >= 2");
  require(tol > 0.0, "alpha: tol must be positive");
  if (tol < 1e-40) throw PrecisionError("alpha: tol below working precision");

  static std::mutex cache_mutex;
  static std::map<std::pair<int, double>, AlphaData> cache;
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find({m, tol}); it != cache.end()) return it->second;
  }

  const HighPrecision eps(tol);
  HighPrecision lo = 2 * (1 - pow(HighPrecision(2), -m));
  HighPrecision hi = 2;
  HighPrecision mid = (lo + hi) / 2;
  HighPrecision value = alpha_polynomial(m, mid);
  // p(lo) <= 0 < p(hi) = 1 on this bracket.
  for (int iter = 0; iter < 400; ++iter) {
    if (hi - lo <= eps && abs(value) <= eps) break;
    if (value > 0) {
      hi = mid;
    } else {
      lo = mid;
    }
    mid = (lo + hi) / 2;
    value = alpha_polynomial(m, mid);
  }
  if (abs(value) > eps) throw PrecisionError("alpha: bisection did not reach tolerance");

  AlphaData out{m, mid, (mid - 1) / (2 + (m + 1) * (mid - 2)), value};
  std::lock_guard lock(cache_mutex);
  cache.emplace(std::pair{m, tol}, out);
  return out;
}

BigInt closed_form_compositions(int t, int m) {
  require(m >= 2, "closed_form_compositions: m must be >= 2");
  require(t >= 0, "closed_form_compositions: t must be >= 0");
  const AlphaData a = alpha(m);
  const HighPrecision x = a.d * pow(a.alpha, t);
  if (x >= HighPrecision(kClosedFormCeiling)) {
    throw PrecisionError("closed_form_compositions: d_m alpha_m^t exceeds 2^52; use the recursion");
  }
  const HighPrecision rounded = floor(x + HighPrecision(0.5));
  return rounded.convert_to<BigInt>();
}

double lowlying_lower_bound(int t, int m) {
  require(t >= 1, "lowlying_lower_bound: t must be >= 1");
  require(m >= 2, "lowlying_lower_bound: m must be >= 2");
  const double td = t;
  return std::exp2(td - td / m - 1.0) / td;
}

double growth_target(int item, int t, std::optional<int> m) {
  require(t >= 1, "growth_target: t must be >= 1");
  const double td = t;
  switch (item) {
    case 1:
      return std::exp2(t / 2);
    case 2: {
      if (!m) throw std::invalid_argument("growth item 2 requires m");
      require(*m >= 2, "growth item 2 requires m >= 2");
      const double a = alpha(*m).alpha_value();
      return a / (2.0 + (*m + 1) * (a - 2.0)) * std::pow(a, t / 2);
    }
    case 3:
      return std::exp2(td + 1.0) / td;
    case 4:
      if (!m) throw std::invalid_argument("growth item 4 requires m");
      require(*m >= 3, "growth item 4 requires m >= 3");
      return std::exp2(td * (1.0 - 1.0 / *m)) / td;
    default:
      throw std::invalid_argument("growth item must be 1, 2, 3 or 4");
  }
}

}  // namespace lowlying
