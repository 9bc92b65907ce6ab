#include <random>
#include <set>

#include "doctest.h"
#include "lowlying/counting.hpp"
#include "lowlying/enumerate.hpp"
#include "oracles.hpp"

using namespace lowlying;

namespace {

BinaryWord W(const char* text) { return BinaryWord::parse(text); }

std::set<oracle::Signs> as_oracle(const std::vector<BinaryWord>& words) {
  std::set<oracle::Signs> out;
  for (const auto& w : words) out.insert(w.signs());
  return out;
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("classes by filter") {
  CHECK(classes(2, ClassFilter::all()) == std::vector<BinaryWord>{W("--"), W("-+"), W("++")});
  CHECK(classes(3, ClassFilter::primitive()) == std::vector<BinaryWord>{W("--+"), W("-++")});
  CHECK(classes(3, ClassFilter::lowlying(2)).size() == 2);
  CHECK(classes(1, ClassFilter::hyperbolic_primitive()).empty());
  CHECK(classes(2, ClassFilter::hyperbolic_primitive()) == std::vector<BinaryWord>{W("-+")});
  CHECK_THROWS_AS(classes(0, ClassFilter::all()), std::domain_error);
  CHECK_THROWS_AS(classes(kMaxEnumerationLength + 1, ClassFilter::all()), std::domain_error);
}

TEST_CASE("classes match the orbit oracle") {
  for (int tau = 1; tau <= 12; ++tau) {
    CHECK(as_oracle(classes(tau, ClassFilter::all())) == oracle::orbits(tau, [](const auto&) { return true; }));
    CHECK(as_oracle(classes(tau, ClassFilter::primitive())) ==
          oracle::orbits(tau, [tau](const auto& s) { return oracle::period(s) == tau; }));
    for (int m = 1; m <= 4; ++m)
      CHECK(as_oracle(classes(tau, ClassFilter::lowlying(m))) ==
            oracle::orbits(tau, [m](const auto& s) { return oracle::longest_cyclic_run(s) <= m; }));
  }
}

TEST_CASE("threaded counts equal sequential counts") {
  for (int tau : {5, 11, 16})
    for (unsigned threads : {1U, 2U, 3U, 8U})
      CHECK(count_classes(tau, ClassFilter::all(), threads) == static_cast<std::uint64_t>(necklace_count(tau)));
  CHECK(count_reciprocal_classes(14, std::nullopt, false, 4) == 1U << 13);
  CHECK(count_reciprocal_classes(14, 3, true, 3) == count_reciprocal_classes(14, 3, true, 1));
}

TEST_CASE("reciprocal classes") {
  const auto one = reciprocal_classes(1);
  REQUIRE(one.size() == 1);
  CHECK(canonical_form(one[0].word()) == W("-+"));
  CHECK(reciprocal_classes(3).size() == 4);
  CHECK(reciprocal_classes(2, 1).size() == 1);
  CHECK(canonical_form(reciprocal_classes(2, 1)[0].word()) == W("-+-+"));
  for (int t = 1; t <= 10; ++t) {
    const auto reps = reciprocal_classes(t);
    std::set<oracle::Signs> got;
    for (const auto& h : reps) {
      CHECK(is_reciprocal_representative(h));
      got.insert(oracle::min_rotation(h.word().signs()));
    }
    CHECK(got == oracle::reciprocal_orbits(t));
    CHECK(reps.size() == got.size());
  }
}

TEST_CASE("phi round trip") {
  const HalfTurnWord h = HalfTurnWord::from_first_half(W("---++-+"));
  const HalfTurnWord rep = is_reciprocal_representative(h) ? h : half_turn_partner(h).partner;
  CHECK(phi(rep) == Composition({3, 2, 1, 1}));
  CHECK(phi_inverse(Composition({1})).half_length() == 1);
  for (int t = 1; t <= 12; ++t) {
    for (int m = 1; m <= t; ++m) {
      const auto reps = reciprocal_classes(t, m);
      const auto comps = composition_list(t, m);
      REQUIRE(reps.size() == comps.size());
      CHECK(static_cast<long long>(comps.size()) == oracle::compositions_brute(t, m));
      std::set<Composition> images;
      for (const auto& r : reps) {
        const Composition c = phi(r);
        CHECK(c.max_part() <= m);
        CHECK(phi_inverse(c) == r);
        images.insert(c);
      }
      CHECK(images.size() == reps.size());
    }
  }
}

TEST_CASE("power map") {
  CHECK(power_map(W("+-"), 2) == canonical_form(W("+-+-")));
  CHECK_THROWS_AS(power_map(W("+"), 1), std::domain_error);
  CHECK_THROWS_AS(power_map(W("+-"), 0), std::domain_error);
  CHECK_THROWS_AS(power_map(W("+-+-"), 2), std::domain_error);
}

TEST_CASE("construction B") {
  CHECK(construction_b_class_count(1, 2) == 1);
  for (int m = 2; m <= 4; ++m) {
    for (int tau = 1; tau <= 16; ++tau) {
      const auto words = construction_b_words(tau, m);
      const double bound = std::exp2(tau - tau / m - 1) / tau;
      CHECK(static_cast<double>(construction_b_class_count(tau, m)) >= std::ceil(bound));
      for (const auto& w : words) CHECK(is_low_lying(w, m));
    }
  }
  CHECK_THROWS(construction_b_words(4, 1));
}

TEST_CASE("property: random low-lying words land in the filtered enumeration") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int tau = 2 + static_cast<int>(rng() % 11);
    const int m = 1 + static_cast<int>(rng() % 4);
    const BinaryWord w = BinaryWord::from_signs(oracle::random_signs(rng, tau));
    const auto list = classes(tau, ClassFilter::lowlying(m));
    const bool listed = std::binary_search(list.begin(), list.end(), canonical_form(w));
    CHECK(listed == is_low_lying(w, m));
  }
}

}  // TEST_SUITE
