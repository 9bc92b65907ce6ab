#include <random>

#include "doctest.h"
#include "lowlying/binary_word.hpp"
#include "oracles.hpp"

using namespace lowlying;

namespace {

BinaryWord W(const char* text) { return BinaryWord::parse(text); }

BinaryWord from_oracle(const oracle::Signs& s) { return BinaryWord::from_signs(s); }

}  // namespace

TEST_SUITE("binwords") {

TEST_CASE("parse and print") {
  CHECK(W("+-+").to_string() == "+-+");
  CHECK(W(" + - ").length() == 2);
  CHECK(W("+-")[0] == 1);
  CHECK(W("+-")[1] == -1);
  CHECK(W("-+") < W("+-"));
  CHECK(BinaryWord::parse_syllables("abaB") == W("+-"));
  CHECK(W("+-").to_syllables() == "abaB");
  CHECK_THROWS_AS(BinaryWord::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWord::parse("+x"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWord::parse_syllables("ab b"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWord(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWord(0, 65), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWord(4, 2), std::invalid_argument);
  CHECK(BinaryWord(~std::uint64_t{0}, 64).is_constant());
}

TEST_CASE("rotate") {
  CHECK(rotate(W("+--"), 1) == W("-+-"));
  CHECK(rotate(W("+--"), 3) == W("+--"));
  CHECK(rotate(W("++--"), 2) == W("--++"));
  CHECK(rotate(W("+--"), -1) == W("--+"));
  CHECK(rotate(W("+--"), -1) == rotate(W("+--"), 2));
  const BinaryWord full(0xF0F0F0F0F0F0F0F0ULL, 64);
  CHECK(rotate(full, 4) == BinaryWord(0x0F0F0F0F0F0F0F0FULL, 64));
}

TEST_CASE("canonical form") {
  const BinaryWord sample = W("---+---+--++");
  for (int k = 0; k < sample.length(); ++k) CHECK(canonical_form(rotate(sample, k)) == sample);
  CHECK(canonical_form(W("+++")) == W("+++"));
  CHECK(canonical_form(W("+-+-")) == W("-+-+"));
  CHECK(is_canonical(W("-++")));
  CHECK_FALSE(is_canonical(W("+-+")));
}

TEST_CASE("primitive root") {
  auto r = primitive_root(W("+-+-"));
  CHECK(r.root == W("+-"));
  CHECK(r.exponent == 2);
  r = primitive_root(W("++-"));
  CHECK(r.root == W("++-"));
  CHECK(r.exponent == 1);
  r = primitive_root(W("++++++"));
  CHECK(r.root == W("+"));
  CHECK(r.exponent == 6);
  CHECK(is_primitive(W("+")));
}

TEST_CASE("max cyclic run") {
  CHECK(max_cyclic_run(W("++-")) == 2);
  CHECK(max_cyclic_run(W("---")) == 3);
  CHECK(max_cyclic_run(W("+--+")) == 2);
  CHECK(max_cyclic_run(W("+")) == 1);
  CHECK(is_low_lying(W("+-+-"), 1));
  CHECK_FALSE(is_low_lying(W("++-"), 1));
}

TEST_CASE("half-turn partner") {
  auto p = half_turn_partner(HalfTurnWord(W("+-")));
  CHECK(p.partner.word() == W("-+"));
  CHECK(p.k0 == 1);
  p = half_turn_partner(HalfTurnWord(W("++--")));
  CHECK(p.partner.word() == W("--++"));
  CHECK(p.k0 == 2);
  p = half_turn_partner(HalfTurnWord(W("+-+-")));
  CHECK(p.partner.word() == W("-+-+"));
  CHECK(p.k0 == 1);
  CHECK_THROWS_AS(HalfTurnWord(W("++")), std::domain_error);
  CHECK_THROWS_AS(HalfTurnWord(W("+-+")), std::domain_error);
  CHECK(HalfTurnWord::from_first_half(W("+-+")).word() == W("+-+-+-"));
}

TEST_CASE("runs and compositions") {
  CHECK(runs_of(W("---++-+")) == Composition({3, 2, 1, 1}));
  CHECK(runs_of(W("+")) == Composition({1}));
  CHECK(runs_of(W("+-+-")) == Composition({1, 1, 1, 1}));
  CHECK(from_composition(Composition({3, 2, 1, 1}), -1) == W("---++-+"));
  CHECK(from_composition(Composition({1}), 1) == W("+"));
  CHECK(from_composition(Composition({2, 2}), 1) == W("++--"));
  CHECK(Composition({3, 2, 1, 1}).to_string() == "(3,2,1,1)");
  CHECK_THROWS(Composition({2, 0}));
  CHECK_THROWS(Composition({}));
  CHECK_THROWS(from_composition(Composition({1}), 0));
}

TEST_CASE("property: rotation, canonical form and runs agree with the vector oracle") {
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const oracle::Signs s = oracle::random_signs(rng, n);
    const BinaryWord w = from_oracle(s);
    const int k = static_cast<int>(rng() % 50);
    CHECK(rotate(w, k) == from_oracle(oracle::shift_right(s, k % n)));
    CHECK(canonical_form(w) == from_oracle(oracle::min_rotation(s)));
    CHECK(primitive_root(w).root.length() == oracle::period(s));
    CHECK(max_cyclic_run(w) == oracle::longest_cyclic_run(s));
    CHECK(rotate(rotate(w, k), n - k % n) == w);
  }
}

TEST_CASE("property: half-turn words pair up with k0 = t exactly when primitive") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const int t = 1 + static_cast<int>(rng() % 16);
    const HalfTurnWord h = HalfTurnWord::from_first_half(from_oracle(oracle::random_signs(rng, t)));
    const auto pair = half_turn_partner(h);
    CHECK(canonical_form(pair.partner.word()) == canonical_form(h.word()));
    CHECK((pair.k0 == t) == is_primitive(h.word()));
    CHECK(half_turn_partner(pair.partner).partner == h);
    const BinaryWord x = h.first_half();
    CHECK(from_composition(runs_of(x), x[0]) == x);
  }
}

}  // TEST_SUITE
