#include "lowlying/binary_word.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace lowlying {

BinaryWord::BinaryWord(std::uint64_t bits, int length) : bits_(bits), length_(length) {
  if (length < 1 || length > kMaxLength) {
    throw std::invalid_argument("binary word length must be in [1, 64], got " +
                                std::to_string(length));
  }
  if ((bits & ~mask_for(length)) != 0) {
    throw std::invalid_argument("binary word has bits above its length");
  }
}

BinaryWord BinaryWord::from_signs(std::span<const int> signs) {
  if (signs.empty() || signs.size() > kMaxLength) {
    throw std::invalid_argument("binary word length must be in [1, 64]");
  }
  std::uint64_t bits = 0;
  for (int s : signs) {
    if (s != 1 && s != -1) throw std::invalid_argument("binary word entries must be +1 or -1");
    bits = (bits << 1) | (s == 1 ? 1U : 0U);
  }
  return {bits, static_cast<int>(signs.size())};
}

BinaryWord BinaryWord::constant(int sign, int length) {
  BinaryWord zero(0, length);
  return sign > 0 ? zero.negated() : zero;
}

BinaryWord BinaryWord::parse(std::string_view text) {
  std::vector<int> signs;
  for (char ch : text) {
    if (ch == '+') {
      signs.push_back(1);
    } else if (ch == '-') {
      signs.push_back(-1);
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument(std::string("unexpected character '") + ch + "' in word");
    }
  }
  return from_signs(signs);
}

BinaryWord BinaryWord::parse_syllables(std::string_view text) {
  std::vector<int> signs;
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  if (compact.size() % 2 != 0) throw std::invalid_argument("syllable word must be pairs a[b|B]");
  for (std::size_t i = 0; i < compact.size(); i += 2) {
    if (compact[i] != 'a') throw std::invalid_argument("each syllable must start with 'a'");
    if (compact[i + 1] == 'b') {
      signs.push_back(1);
    } else if (compact[i + 1] == 'B') {
      signs.push_back(-1);
    } else {
      throw std::invalid_argument("each syllable must end in 'b' or 'B'");
    }
  }
  return from_signs(signs);
}

std::vector<int> BinaryWord::signs() const {
  std::vector<int> out(static_cast<std::size_t>(length_));
  for (int j = 0; j < length_; ++j) out[static_cast<std::size_t>(j)] = (*this)[j];
  return out;
}

std::string BinaryWord::to_string() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(length_));
  for (int j = 0; j < length_; ++j) out.push_back((*this)[j] > 0 ? '+' : '-');
  return out;
}

std::string BinaryWord::to_syllables() const {
  std::string out;
  for (int j = 0; j < length_; ++j) {
    out.push_back('a');
    out.push_back((*this)[j] > 0 ? 'b' : 'B');
  }
  return out;
}

BinaryWord BinaryWord::concat(const BinaryWord& tail) const {
  const int total = length_ + tail.length_;
  if (total > kMaxLength) throw std::invalid_argument("concatenation exceeds 64 entries");
  return {(bits_ << tail.length_) | tail.bits_, total};
}

BinaryWord BinaryWord::repeated(int times) const {
  if (times < 1) throw std::invalid_argument("repeat count must be positive");
  if (static_cast<long long>(times) * length_ > kMaxLength) {
    throw std::invalid_argument("repetition exceeds 64 entries");
  }
  BinaryWord out = *this;
  for (int i = 1; i < times; ++i) out = out.concat(*this);
  return out;
}

BinaryWord BinaryWord::reversed() const {
  std::uint64_t r = 0;
  std::uint64_t b = bits_;
  for (int j = 0; j < length_; ++j) {
    r = (r << 1) | (b & 1U);
    b >>= 1;
  }
  return {r, length_, Unchecked{}};
}

BinaryWord BinaryWord::slice(int first, int count) const {
  if (first < 0 || count < 1 || first + count > length_) {
    throw std::out_of_range("slice outside word");
  }
  const int shift = length_ - first - count;
  return {(bits_ >> shift) & mask_for(count), count};
}

BinaryWord rotate(const BinaryWord& w, long long k) noexcept {
  const int t = w.length_;
  const int s = static_cast<int>(((k % t) + t) % t);
  if (s == 0) return w;
  const std::uint64_t b = w.bits_;
  const std::uint64_t out = ((b >> s) | (b << (t - s))) & w.mask();
  return {out, t, BinaryWord::Unchecked{}};
}

BinaryWord canonical_form(const BinaryWord& w) noexcept {
  BinaryWord best = w;
  for (int k = 1; k < w.length(); ++k) {
    BinaryWord r = rotate(w, k);
    if (r.bits() < best.bits()) best = r;
  }
  return best;
}

bool is_canonical(const BinaryWord& w) noexcept {
  for (int k = 1; k < w.length(); ++k) {
    if (rotate(w, k).bits() < w.bits()) return false;
  }
  return true;
}

PrimitiveRoot primitive_root(const BinaryWord& w) noexcept {
  const int t = w.length();
  for (int p = 1; p < t; ++p) {
    if (t % p == 0 && rotate(w, p) == w) {
      return {w.slice(0, p), t / p};
    }
  }
  return {w, 1};
}

int max_cyclic_run(const BinaryWord& w) noexcept {
  const int t = w.length();
  if (w.is_constant()) return t;
  // Start scanning at a run boundary so no run wraps.
  int start = 0;
  while (w[start] == w[(start + t - 1) % t]) ++start;
  int best = 0;
  int run = 0;
  int prev = 0;
  for (int i = 0; i < t; ++i) {
    const int e = w[(start + i) % t];
    run = (e == prev) ? run + 1 : 1;
    prev = e;
    best = std::max(best, run);
  }
  return best;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
    total_ += p;
  }
}

int Composition::max_part() const noexcept { return *std::max_element(parts_.begin(), parts_.end()); }

std::string Composition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += std::to_string(parts_[i]);
  }
  out.push_back(')');
  return out;
}

Composition runs_of(const BinaryWord& half) {
  std::vector<int> parts;
  int run = 1;
  for (int j = 1; j < half.length(); ++j) {
    if (half[j] == half[j - 1]) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

BinaryWord from_composition(const Composition& c, int leading_sign) {
  if (leading_sign != 1 && leading_sign != -1) {
    throw std::invalid_argument("leading sign must be +1 or -1");
  }
  std::vector<int> signs;
  signs.reserve(static_cast<std::size_t>(c.total()));
  int sign = leading_sign;
  for (int part : c.parts()) {
    signs.insert(signs.end(), static_cast<std::size_t>(part), sign);
    sign = -sign;
  }
  return BinaryWord::from_signs(signs);
}

bool HalfTurnWord::satisfies(const BinaryWord& w) noexcept {
  if (w.length() % 2 != 0) return false;
  // e_j = -e_{2t-j-1} for all j  <=>  reverse(w) == -w.
  return w.reversed() == w.negated();
}

HalfTurnWord::HalfTurnWord(BinaryWord w) : word_(w), k0_(0) {
  if (!satisfies(word_)) {
    throw std::domain_error("word " + word_.to_string() + " does not satisfy e_j = -e_{2t-j-1}");
  }
  const int t = half_length();
  for (int k = 1; k <= t; ++k) {
    if (satisfies(rotate(word_, k))) {
      k0_ = k;
      break;
    }
  }
}

HalfTurnWord HalfTurnWord::from_first_half(const BinaryWord& x) {
  return HalfTurnWord(x.concat(x.reversed().negated()));
}

HalfTurnPair half_turn_partner(const HalfTurnWord& h) {
  return {HalfTurnWord(rotate(h.word(), h.k0())), h.k0()};
}

}  // namespace lowlying
