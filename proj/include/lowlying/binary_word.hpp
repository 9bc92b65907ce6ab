#pragma once

// Cyclic binary words over {+1, -1}.
//
// The word (e_0, ..., e_{t-1}) stands for the (ab)-word a b^{e_0} ... a b^{e_{t-1}}
// of group length 2t. Words are bit-packed: entry j lives at bit (t-1-j) and
// -1 encodes to 0, so comparing bit patterns of equal-length words is the
// lexicographic order with -1 before +1.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lowlying {

class BinaryWord {
 public:
  static constexpr int kMaxLength = 64;

  /// Throws std::invalid_argument unless 1 <= length <= kMaxLength and
  /// bits has nothing above the low `length` bits.
  BinaryWord(std::uint64_t bits, int length);

  static BinaryWord from_signs(std::span<const int> signs);
  /// Constant word of the given sign.
  static BinaryWord constant(int sign, int length);
  /// "++-" style; whitespace is ignored.
  static BinaryWord parse(std::string_view text);
  /// "abaB" style: each syllable is `a` followed by `b` (+1) or `B` (-1).
  static BinaryWord parse_syllables(std::string_view text);

  int length() const noexcept { return length_; }
  std::uint64_t bits() const noexcept { return bits_; }
  std::uint64_t mask() const noexcept { return mask_for(length_); }

  /// Entry j as +1 or -1.
  int operator[](int j) const noexcept {
    return ((bits_ >> (length_ - 1 - j)) & 1U) != 0 ? 1 : -1;
  }

  std::vector<int> signs() const;
  std::string to_string() const;
  std::string to_syllables() const;

  BinaryWord concat(const BinaryWord& tail) const;
  BinaryWord repeated(int times) const;
  /// Every entry flipped.
  BinaryWord negated() const noexcept { return {~bits_ & mask(), length_, Unchecked{}}; }
  /// Entries in reverse order.
  BinaryWord reversed() const;
  /// Entries [first, first + count).
  BinaryWord slice(int first, int count) const;

  bool is_constant() const noexcept { return bits_ == 0 || bits_ == mask(); }

  /// Shorter words first, then lexicographic.
  friend std::strong_ordering operator<=>(const BinaryWord& x, const BinaryWord& y) noexcept {
    if (auto c = x.length_ <=> y.length_; c != 0) return c;
    return x.bits_ <=> y.bits_;
  }
  friend bool operator==(const BinaryWord&, const BinaryWord&) noexcept = default;

  static constexpr std::uint64_t mask_for(int length) noexcept {
    return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
  }

 private:
  struct Unchecked {};
  BinaryWord(std::uint64_t bits, int length, Unchecked) noexcept : bits_(bits), length_(length) {}

  std::uint64_t bits_;
  int length_;

  friend BinaryWord rotate(const BinaryWord& w, long long k) noexcept;
};

/// Entry j of the result is entry (j - k mod t) of w.
BinaryWord rotate(const BinaryWord& w, long long k) noexcept;

/// Lexicographically least rotation (-1 < +1).
BinaryWord canonical_form(const BinaryWord& w) noexcept;
bool is_canonical(const BinaryWord& w) noexcept;

struct PrimitiveRoot {
  BinaryWord root;
  int exponent;
};

/// w == root^exponent with root primitive.
PrimitiveRoot primitive_root(const BinaryWord& w) noexcept;
inline bool is_primitive(const BinaryWord& w) noexcept { return primitive_root(w).exponent == 1; }

/// Longest constant-sign block read cyclically; t for a constant word.
int max_cyclic_run(const BinaryWord& w) noexcept;
inline bool is_low_lying(const BinaryWord& w, int m) noexcept { return max_cyclic_run(w) <= m; }

/// An ordered sequence of positive parts.
class Composition {
 public:
  /// Throws std::invalid_argument if empty or any part < 1.
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int total() const noexcept { return total_; }
  int max_part() const noexcept;
  std::size_t size() const noexcept { return parts_.size(); }

  /// "(3,2,1,1)"
  std::string to_string() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// Lengths of maximal constant blocks, left to right, not cyclic.
Composition runs_of(const BinaryWord& half);

/// Right inverse of runs_of: blocks alternate sign starting with leading_sign.
BinaryWord from_composition(const Composition& c, int leading_sign);

/// A word in Y_{2t}: e_j = -e_{2t-j-1} for all j. Encodes the normal form
/// [a, gamma] of a reciprocal word of group length 4t.
class HalfTurnWord {
 public:
  /// Throws std::domain_error if w fails the half-turn condition.
  explicit HalfTurnWord(BinaryWord w);

  /// (x, -reverse(x)).
  static HalfTurnWord from_first_half(const BinaryWord& x);
  static bool satisfies(const BinaryWord& w) noexcept;

  const BinaryWord& word() const noexcept { return word_; }
  int half_length() const noexcept { return word_.length() / 2; }
  BinaryWord first_half() const { return word_.slice(0, half_length()); }
  /// Smallest k >= 1 with rotate(word, k) back in Y_{2t}; 1 <= k0 <= t.
  int k0() const noexcept { return k0_; }

  friend auto operator<=>(const HalfTurnWord& x, const HalfTurnWord& y) noexcept {
    return x.word_ <=> y.word_;
  }
  friend bool operator==(const HalfTurnWord& x, const HalfTurnWord& y) noexcept {
    return x.word_ == y.word_;
  }

 private:
  BinaryWord word_;
  int k0_;
};

struct HalfTurnPair {
  HalfTurnWord partner;
  int k0;
};

/// The other element of (rotation orbit of h) ∩ Y_{2t}.
HalfTurnPair half_turn_partner(const HalfTurnWord& h);

}  // namespace lowlying
