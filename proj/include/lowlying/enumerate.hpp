#pragma once

// Brute-force enumeration of conjugacy classes by canonical rotation
// representatives, plus the explicit bijections (power map, Phi_m).

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lowlying/binary_word.hpp"

namespace lowlying {

/// Enumeration is exhaustive over 2^tau patterns; keep it at desk scale.
inline constexpr int kMaxEnumerationLength = 30;

struct ClassFilter {
  bool primitive_only = false;
  /// Drops the parabolic classes (constant words).
  bool hyperbolic_only = false;
  std::optional<int> max_run;

  static ClassFilter all() { return {}; }
  static ClassFilter primitive() { return {true, false, std::nullopt}; }
  static ClassFilter lowlying(int m) { return {false, false, m}; }
  static ClassFilter hyperbolic_primitive() { return {true, true, std::nullopt}; }

  bool accepts(const BinaryWord& canonical) const noexcept;
};

/// Calls visit once per rotation class of length tau passing the filter, with
/// the canonical representative, in increasing order.
void for_each_class(int tau, const ClassFilter& filter,
                    const std::function<void(const BinaryWord&)>& visit);

/// Sorted canonical representatives.
std::vector<BinaryWord> classes(int tau, const ClassFilter& filter);

/// Same count as classes(tau, filter).size(), sharded by high-bit prefix
/// over `threads` workers.
std::uint64_t count_classes(int tau, const ClassFilter& filter, unsigned threads = 1);

/// One representative per reciprocal class of length 4t: the lexicographically
/// smaller element of each {h, half_turn_partner(h)} pair. With m, only
/// classes whose full word has cyclic runs <= m. Sorted.
std::vector<HalfTurnWord> reciprocal_classes(int t, std::optional<int> m = std::nullopt);

std::uint64_t count_reciprocal_classes(int t, std::optional<int> m = std::nullopt,
                                       bool primitive_only = false, unsigned threads = 1);

/// True if h is the representative reciprocal_classes emits for its class.
bool is_reciprocal_representative(const HalfTurnWord& h);

/// Run lengths of the first half of a class representative.
Composition phi(const HalfTurnWord& representative);

/// The class representative whose first half has run lengths c.
/// Throws std::logic_error if neither leading sign yields a representative.
HalfTurnWord phi_inverse(const Composition& c);

/// Compositions of t with parts <= m, listed by brute force in lexicographic order.
std::vector<Composition> composition_list(int t, int m);

/// canonical_form(w^n). Throws std::domain_error if w is not primitive or n < 2.
BinaryWord power_map(const BinaryWord& w, int n);

/// Words produced by the red/black slot construction: slots grouped by m, the
/// first slot of every group after the first (and the last slot) forced to
/// break runs, all other slots free. Only words with cyclic runs <= m are kept.
std::vector<BinaryWord> construction_b_words(int tau, int m);

/// Number of distinct rotation classes among construction_b_words(tau, m).
std::uint64_t construction_b_class_count(int tau, int m);

}  // namespace lowlying
