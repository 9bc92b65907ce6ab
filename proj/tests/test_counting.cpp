#include <cmath>
#include <random>

#include "doctest.h"
#include "lowlying/counting.hpp"
#include "lowlying/verify.hpp"
#include "oracles.hpp"

using namespace lowlying;

namespace {

long long as_ll(const BigInt& x) { return static_cast<long long>(x); }

}  // namespace

TEST_SUITE("counting") {

TEST_CASE("necklace counts") {
  CHECK(necklace_count(1) == 2);
  CHECK(necklace_count(4) == 6);
  CHECK(necklace_count(6) == 14);
  for (int tau = 1; tau <= 40; ++tau) CHECK(as_ll(necklace_count(tau)) == oracle::burnside(tau));
  CHECK(necklace_count(100) > BigInt(1) << 90);
  CHECK_THROWS_AS(necklace_count(0), std::domain_error);
}

TEST_CASE("primitive counts") {
  CHECK(primitive_class_count(1) == 2);
  CHECK(primitive_class_count(2) == 1);
  CHECK(primitive_class_count(4) == 3);
  CHECK(primitive_class_count(6) == 9);
  for (int tau = 1; tau <= 50; ++tau) {
    CHECK(as_ll(primitive_class_count(tau)) == oracle::primitive_necklaces(tau));
    CHECK(primitive_class_count(tau) == mobius_primitive_count(tau));
  }
}

TEST_CASE("reciprocal counts") {
  CHECK(reciprocal_count(3, false) == 4);
  CHECK(reciprocal_count(2, true) == 1);
  CHECK(reciprocal_count(1, false) == 1);
  CHECK(reciprocal_count(1, true) == 1);
  CHECK(reciprocal_count(64, false) == BigInt(1) << 63);
  CHECK_THROWS_AS(reciprocal_count(0, false), std::domain_error);
}

TEST_CASE("cumulative counts") {
  CHECK(cumulative(Family::reciprocal, 5) == 31);
  CHECK(cumulative(Family::reciprocal, 1) == 1);
  CHECK(cumulative(Family::classes, 2, {true, std::nullopt}) == 8);
  CHECK(cumulative(Family::classes, 2) == 5);
  CHECK(cumulative(Family::lowlying_reciprocal, 4, {false, 2}) == 11);
  CHECK_THROWS(cumulative(Family::lowlying_reciprocal, 4));
}

TEST_CASE("bounded compositions") {
  CHECK(bounded_compositions(4, 2) == 5);
  CHECK(bounded_compositions(3, 3) == 4);
  CHECK(bounded_compositions(2, 1) == 1);
  CHECK(bounded_compositions(0, 2) == 1);
  CHECK(bounded_compositions(-1, 2) == 0);
  CHECK_THROWS_AS(bounded_compositions(3, 0), std::domain_error);
  for (int t = 1; t <= 16; ++t)
    for (int m = 1; m <= t + 1; ++m) CHECK(as_ll(bounded_compositions(t, m)) == oracle::compositions_brute(t, m));
}

TEST_CASE("alpha") {
  const AlphaData a2 = alpha(2);
  CHECK(std::abs(a2.alpha_value() - (1 + std::sqrt(5.0)) / 2) < 1e-12);
  CHECK(std::abs(alpha(3).alpha_value() - 1.8392867552) < 1e-10);
  double previous = 1.0;
  for (int m = 2; m <= 40; ++m) {
    const AlphaData a = alpha(m);
    CHECK(abs(a.residual) <= 1e-12);
    CHECK(a.alpha_value() >= 2 * (1 - std::exp2(-m)));
    CHECK(a.alpha_value() < 2.0);
    CHECK(a.alpha_value() > previous);
    previous = a.alpha_value();
  }
  CHECK(alpha(40).alpha_value() > 2 - 1e-11);
  CHECK_THROWS_AS(alpha(1), std::domain_error);
  CHECK_THROWS_AS(alpha(2, 0.0), std::domain_error);
}

TEST_CASE("closed form") {
  CHECK(closed_form_compositions(3, 2) == 3);
  CHECK(closed_form_compositions(10, 2) == 89);
  for (int m = 2; m <= 10; ++m) CHECK(closed_form_compositions(1, m) == 1);
  for (int m = 2; m <= 10; ++m)
    for (int t = 1; t <= 40; ++t) CHECK(closed_form_compositions(t, m) == bounded_compositions(t, m));
  CHECK_THROWS_AS(closed_form_compositions(200, 10), PrecisionError);
}

TEST_CASE("lower bound and growth targets") {
  CHECK(lowlying_lower_bound(3, 2) == doctest::Approx(std::sqrt(2.0) / 3));
  CHECK(lowlying_lower_bound(12, 3) == doctest::Approx(128.0 / 12));
  for (int m = 2; m <= 8; ++m) CHECK(lowlying_lower_bound(m, m) == doctest::Approx(std::exp2(m - 2) / m));
  CHECK(growth_target(1, 10) == 32);
  CHECK(growth_target(3, 4) == 8);
  CHECK(growth_target(2, 8, 2) == doctest::Approx(12.98).epsilon(1e-3));
  CHECK_THROWS(growth_target(2, 8));
  CHECK_THROWS(growth_target(5, 8));
}

TEST_CASE("family names") {
  for (Family f : {Family::classes, Family::primitive, Family::reciprocal, Family::reciprocal_primitive,
                   Family::lowlying, Family::lowlying_reciprocal, Family::compositions}) {
    CHECK(parse_family(to_string(f)) == f);
  }
  CHECK_FALSE(parse_family("nope").has_value());
  CHECK_THROWS_AS(count_at(Family::lowlying, 4, 2), std::invalid_argument);
}

TEST_CASE("property: nonprimitive counts stay under their bounds") {
  for (int tau = 1; tau <= 40; ++tau) {
    const BigInt np = necklace_count(tau) - primitive_class_count(tau);
    // np <= (tau/2) 2^{tau/2}  <=>  4 np^2 <= tau^2 2^tau
    CHECK(4 * np * np <= BigInt(tau) * tau * (BigInt(1) << tau));
    const BigInt rnp = reciprocal_count(tau, false) - reciprocal_count(tau, true);
    CHECK(16 * rnp * rnp <= BigInt(tau) * tau * (BigInt(1) << tau));
  }
}

TEST_CASE("property: primitive counts sum over divisors to the total") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 60);
    BigInt sum = 0;
    BigInt weighted = 0;
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      sum += primitive_class_count(d);
      weighted += d * primitive_class_count(d);
    }
    CHECK(sum == necklace_count(n));
    CHECK(weighted == BigInt(1) << n);
  }
}

}  // TEST_SUITE
