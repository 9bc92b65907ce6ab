#pragma once

// Slow, independent reference implementations. Words are plain sign vectors;
// nothing here touches the bit-packed representation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Signs = std::vector<int>;

inline Signs signs_of(std::uint64_t bits, int n) {
  Signs s(n);
  for (int j = 0; j < n; ++j) s[j] = ((bits >> (n - 1 - j)) & 1U) ? 1 : -1;
  return s;
}

inline Signs shift_right(const Signs& s, int k) {
  Signs out(s.size());
  const int n = static_cast<int>(s.size());
  for (int j = 0; j < n; ++j) out[(j + k) % n] = s[j];
  return out;
}

inline Signs min_rotation(const Signs& s) {
  Signs best = s;
  for (int k = 1; k < static_cast<int>(s.size()); ++k) best = std::min(best, shift_right(s, k));
  return best;
}

inline int period(const Signs& s) {
  const int n = static_cast<int>(s.size());
  for (int p = 1; p < n; ++p)
    if (n % p == 0 && shift_right(s, p) == s) return p;
  return n;
}

inline int longest_cyclic_run(const Signs& s) {
  const int n = static_cast<int>(s.size());
  int best = 0;
  for (int start = 0; start < n; ++start) {
    int len = 1;
    while (len < n && s[(start + len) % n] == s[start]) ++len;
    best = std::max(best, len);
  }
  return best;
}

/// Distinct rotation orbits of length-n words, optionally filtered.
template <class Pred>
std::set<Signs> orbits(int n, Pred keep) {
  std::set<Signs> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    Signs s = signs_of(b, n);
    if (keep(s)) out.insert(min_rotation(s));
  }
  return out;
}

inline bool half_turn(const Signs& s) {
  const int n = static_cast<int>(s.size());
  for (int j = 0; j < n; ++j)
    if (s[j] != -s[n - 1 - j]) return false;
  return true;
}

/// Rotation orbits of length 2t that meet the half-turn set.
inline std::set<Signs> reciprocal_orbits(int t) {
  return orbits(2 * t, [](const Signs& s) { return half_turn(s); });
}

inline int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

/// Primitive necklaces of length n by Moebius inversion.
inline long long primitive_necklaces(int n) {
  long long sum = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) sum += mobius(n / d) * (1LL << d);
  return sum / n;
}

inline long long burnside(int n) {
  long long sum = 0;
  for (int j = 1; j <= n; ++j) sum += 1LL << std::gcd(j, n);
  return sum / n;
}

/// Compositions of t with parts <= m, by listing subsets of cut points.
inline long long compositions_brute(int t, int m) {
  long long count = 0;
  for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (t - 1)); ++cuts) {
    int run = 1;
    bool ok = true;
    for (int j = 0; j < t - 1 && ok; ++j) {
      if ((cuts >> j) & 1U) {
        run = 1;
      } else if (++run > m) {
        ok = false;
      }
    }
    count += ok;
  }
  return count;
}

/// 2x2 integer product of the generator images, then the apex from the fixed points.
struct Mat {
  long long a, b, c, d;
};

inline Mat mul(const Mat& x, const Mat& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline Mat word_matrix(const Signs& s) {
  const Mat A{0, -1, 1, 0}, B{1, -1, 1, 0}, Binv{0, 1, -1, 1};
  Mat m{1, 0, 0, 1};
  for (int e : s) m = mul(mul(m, A), e > 0 ? B : Binv);
  return m;
}

/// Half the distance between the two real fixed points of z -> (az+b)/(cz+d).
inline double apex_from_fixed_points(const Mat& m) {
  const double a = m.a, c = m.c, d = m.d;
  const double disc = (a + d) * (a + d) - 4.0;
  const double r1 = ((a - d) + std::sqrt(disc)) / (2.0 * c);
  const double r2 = ((a - d) - std::sqrt(disc)) / (2.0 * c);
  return std::abs(r1 - r2) / 2.0;
}

inline Signs random_signs(std::mt19937_64& rng, int n) {
  Signs s(n);
  for (int& e : s) e = (rng() & 1U) ? 1 : -1;
  return s;
}

}  // namespace oracle
