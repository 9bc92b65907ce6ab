#include "lowlying/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace lowlying {
namespace {

void check_length(int tau) {
  if (tau < 1 || tau > kMaxEnumerationLength) {
    throw std::domain_error("enumeration length must be in [1, " +
                            std::to_string(kMaxEnumerationLength) + "], got " + std::to_string(tau));
  }
}

/// Runs body(lo, hi, slot) over [0, total) split into contiguous shards.
template <class Body>
void sharded(std::uint64_t total, unsigned threads, Body body) {
  threads = std::max(1U, threads);
  if (threads == 1 || total < 4096) {
    body(0, total, 0U);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t step = (total + threads - 1) / threads;
  for (unsigned i = 0; i < threads; ++i) {
    const std::uint64_t lo = i * step;
    const std::uint64_t hi = std::min(total, lo + step);
    if (lo >= hi) break;
    pool.emplace_back(body, lo, hi, i);
  }
  for (auto& th : pool) th.join();
}

}  // namespace

bool ClassFilter::accepts(const BinaryWord& canonical) const noexcept {
  if (hyperbolic_only && canonical.is_constant()) return false;
  if (max_run && max_cyclic_run(canonical) > *max_run) return false;
  if (primitive_only && !is_primitive(canonical)) return false;
  return true;
}

void for_each_class(int tau, const ClassFilter& filter,
                    const std::function<void(const BinaryWord&)>& visit) {
  check_length(tau);
  const std::uint64_t total = std::uint64_t{1} << tau;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const BinaryWord w(bits, tau);
    if (is_canonical(w) && filter.accepts(w)) visit(w);
  }
}

std::vector<BinaryWord> classes(int tau, const ClassFilter& filter) {
  std::vector<BinaryWord> out;
  for_each_class(tau, filter, [&out](const BinaryWord& w) { out.push_back(w); });
  return out;
}

std::uint64_t count_classes(int tau, const ClassFilter& filter, unsigned threads) {
  check_length(tau);
  std::vector<std::uint64_t> partial(std::max(1U, threads), 0);
  sharded(std::uint64_t{1} << tau, threads,
          [&](std::uint64_t lo, std::uint64_t hi, unsigned slot) {
            std::uint64_t n = 0;
            for (std::uint64_t bits = lo; bits < hi; ++bits) {
              const BinaryWord w(bits, tau);
              if (is_canonical(w) && filter.accepts(w)) ++n;
            }
            partial[slot] = n;
          });
  std::uint64_t sum = 0;
  for (auto n : partial) sum += n;
  return sum;
}

bool is_reciprocal_representative(const HalfTurnWord& h) {
  return h.word() < half_turn_partner(h).partner.word();
}

std::vector<HalfTurnWord> reciprocal_classes(int t, std::optional<int> m) {
  check_length(t);
  std::vector<HalfTurnWord> out;
  const std::uint64_t total = std::uint64_t{1} << t;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const HalfTurnWord h = HalfTurnWord::from_first_half(BinaryWord(bits, t));
    if (!is_reciprocal_representative(h)) continue;
    if (m && max_cyclic_run(h.word()) > *m) continue;
    out.push_back(h);
  }
  return out;
}

std::uint64_t count_reciprocal_classes(int t, std::optional<int> m, bool primitive_only,
                                       unsigned threads) {
  check_length(t);
  std::vector<std::uint64_t> partial(std::max(1U, threads), 0);
  sharded(std::uint64_t{1} << t, threads,
          [&](std::uint64_t lo, std::uint64_t hi, unsigned slot) {
            std::uint64_t n = 0;
            for (std::uint64_t bits = lo; bits < hi; ++bits) {
              const HalfTurnWord h = HalfTurnWord::from_first_half(BinaryWord(bits, t));
              if (!is_reciprocal_representative(h)) continue;
              if (m && max_cyclic_run(h.word()) > *m) continue;
              if (primitive_only && h.k0() != t) continue;
              ++n;
            }
            partial[slot] = n;
          });
  std::uint64_t sum = 0;
  for (auto n : partial) sum += n;
  return sum;
}

Composition phi(const HalfTurnWord& representative) { return runs_of(representative.first_half()); }

HalfTurnWord phi_inverse(const Composition& c) {
  for (int sign : {-1, 1}) {
    const HalfTurnWord h = HalfTurnWord::from_first_half(from_composition(c, sign));
    if (is_reciprocal_representative(h)) return h;
  }
  throw std::logic_error("no class representative has run lengths " + c.to_string());
}

std::vector<Composition> composition_list(int t, int m) {
  if (t < 1 || m < 1) throw std::domain_error("composition_list: t and m must be >= 1");
  std::vector<Composition> out;
  std::vector<int> parts;
  // Depth-first over the next part, smallest first.
  std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = 1; p <= std::min(m, remaining); ++p) {
      parts.push_back(p);
      extend(remaining - p);
      parts.pop_back();
    }
  };
  extend(t);
  return out;
}

BinaryWord power_map(const BinaryWord& w, int n) {
  if (n < 2) throw std::domain_error("power_map: exponent must be >= 2");
  if (!is_primitive(w)) throw std::domain_error("power_map: " + w.to_string() + " is not primitive");
  return canonical_form(w.repeated(n));
}

std::vector<BinaryWord> construction_b_words(int tau, int m) {
  check_length(tau);
  if (m < 2) throw std::domain_error("construction_b_words: m must be >= 2");
  std::vector<bool> red(static_cast<std::size_t>(tau), false);
  for (int slot = m; slot < tau; slot += m) red[static_cast<std::size_t>(slot)] = true;
  const bool last_is_group_start = red[static_cast<std::size_t>(tau - 1)];
  red[static_cast<std::size_t>(tau - 1)] = true;

  std::vector<int> black;
  for (int slot = 0; slot < tau; ++slot) {
    if (!red[static_cast<std::size_t>(slot)]) black.push_back(slot);
  }

  std::vector<BinaryWord> out;
  std::vector<int> signs(static_cast<std::size_t>(tau));
  const std::uint64_t total = std::uint64_t{1} << black.size();
  for (std::uint64_t pattern = 0; pattern < total; ++pattern) {
    for (std::size_t i = 0; i < black.size(); ++i) {
      signs[static_cast<std::size_t>(black[i])] = ((pattern >> i) & 1U) != 0 ? 1 : -1;
    }
    for (int slot = 0; slot < tau - 1; ++slot) {
      if (red[static_cast<std::size_t>(slot)]) {
        signs[static_cast<std::size_t>(slot)] = -signs[static_cast<std::size_t>(slot - 1)];
      }
    }
    auto& last = signs[static_cast<std::size_t>(tau - 1)];
    if (tau == 1) {
      last = 1;
    } else if (last_is_group_start) {
      last = -signs[static_cast<std::size_t>(tau - 2)];
      if (!is_low_lying(BinaryWord::from_signs(signs), m)) last = -signs[0];
    } else {
      last = -signs[0];
    }
    const BinaryWord w = BinaryWord::from_signs(signs);
    if (is_low_lying(w, m)) out.push_back(w);
  }
  return out;
}

std::uint64_t construction_b_class_count(int tau, int m) {
  std::set<BinaryWord> reps;
  for (const auto& w : construction_b_words(tau, m)) reps.insert(canonical_form(w));
  return reps.size();
}

}  // namespace lowlying
