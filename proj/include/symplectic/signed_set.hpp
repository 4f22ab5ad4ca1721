// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The signed ground set E(n) = {+-1, ..., +-n}, its subsets and their text
// encoding.
//
// A subset is stored as a 32-bit mask with one bit per element. Element +m
// lives at bit 2(m-1) and -m at bit 2(m-1)+1, so ascending bit order is the
// canonical element order 1, -1, 2, -2, ... used for all textual output.

#ifndef SYMPLECTIC_SIGNED_SET_HPP_
#define SYMPLECTIC_SIGNED_SET_HPP_

#include <bit>
#include <charconv>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symplectic {

inline constexpr int kMaxGroundSize = 16;

// Malformed input data: bad tokens, out-of-range elements, invalid families.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A parse failure with a 1-based location (line 0 means "single line").
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int column)
      : InputError(Describe(what, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string Describe(const std::string& what, int line, int column) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ", ";
    out += "column " + std::to_string(column) + ": " + what;
    return out;
  }

  int line_;
  int column_;
};

// The size n of E(n); 1 <= n <= 16.
class GroundSize {
 public:
  explicit constexpr GroundSize(int n) : n_(n) {
    if (n < 1 || n > kMaxGroundSize) {
      throw InputError("ground size must be in 1.." +
                       std::to_string(kMaxGroundSize) + ", got " +
                       std::to_string(n));
    }
  }

  constexpr int value() const { return n_; }
  constexpr int element_count() const { return 2 * n_; }
  constexpr std::uint32_t full_mask() const {
    return n_ == kMaxGroundSize ? 0xFFFFFFFFu : ((1u << (2 * n_)) - 1u);
  }

  friend constexpr bool operator==(GroundSize, GroundSize) = default;

 private:
  int n_;
};

// A nonzero integer; |value| <= n is checked against a GroundSize where one
// is in play.
class SignedElement {
 public:
  explicit constexpr SignedElement(int value) : value_(value) {
    if (value == 0) throw InputError("zero is not a signed element");
    if (value > kMaxGroundSize || value < -kMaxGroundSize) {
      throw InputError("element " + std::to_string(value) +
                       " exceeds the maximum ground size");
    }
  }

  static constexpr SignedElement FromBit(int bit) {
    const int magnitude = bit / 2 + 1;
    return SignedElement(bit % 2 == 0 ? magnitude : -magnitude);
  }

  constexpr int value() const { return value_; }
  constexpr int magnitude() const { return value_ < 0 ? -value_ : value_; }
  constexpr bool negative() const { return value_ < 0; }
  constexpr int bit() const { return 2 * (magnitude() - 1) + (negative() ? 1 : 0); }
  constexpr bool in(GroundSize n) const { return magnitude() <= n.value(); }

  friend constexpr bool operator==(SignedElement, SignedElement) = default;

 private:
  int value_;
};

constexpr SignedElement negate_element(SignedElement e) {
  return SignedElement(-e.value());
}

// A subset of E(16); membership in a particular E(n) is checked on demand.
class SignedSubset {
 public:
  constexpr SignedSubset() = default;
  explicit constexpr SignedSubset(std::uint32_t mask) : mask_(mask) {}
  SignedSubset(std::initializer_list<int> values) {
    for (int v : values) insert(SignedElement(v));
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }

  constexpr bool contains(SignedElement e) const {
    return (mask_ >> e.bit()) & 1u;
  }
  constexpr void insert(SignedElement e) { mask_ |= 1u << e.bit(); }
  constexpr void erase(SignedElement e) { mask_ &= ~(1u << e.bit()); }

  constexpr SignedSubset with(SignedElement e) const {
    return SignedSubset(mask_ | (1u << e.bit()));
  }

  constexpr bool subset_of(SignedSubset other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool within(GroundSize n) const {
    return (mask_ & ~n.full_mask()) == 0;
  }

  // Largest magnitude present, 0 for the empty set.
  constexpr int max_magnitude() const {
    return mask_ == 0 ? 0 : (31 - std::countl_zero(mask_)) / 2 + 1;
  }

  // Members in canonical order.
  std::vector<SignedElement> elements() const {
    std::vector<SignedElement> out;
    out.reserve(size());
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(SignedElement::FromBit(std::countr_zero(m)));
    }
    return out;
  }

  friend constexpr SignedSubset operator|(SignedSubset a, SignedSubset b) {
    return SignedSubset(a.mask_ | b.mask_);
  }
  friend constexpr SignedSubset operator&(SignedSubset a, SignedSubset b) {
    return SignedSubset(a.mask_ & b.mask_);
  }
  // Set difference.
  friend constexpr SignedSubset operator-(SignedSubset a, SignedSubset b) {
    return SignedSubset(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(SignedSubset, SignedSubset) = default;

 private:
  std::uint32_t mask_ = 0;
};

namespace detail {
inline constexpr std::uint32_t kPositiveBits = 0x55555555u;
}  // namespace detail

constexpr SignedSubset negate_set(SignedSubset s) {
  const std::uint32_t m = s.mask();
  return SignedSubset(((m & detail::kPositiveBits) << 1) |
                      ((m >> 1) & detail::kPositiveBits));
}

// True iff `s` holds no pair {i, -i}.
constexpr bool is_admissible(SignedSubset s) {
  return (s.mask() & (s.mask() >> 1) & detail::kPositiveBits) == 0;
}

// Mirror-pair closure: every element together with its negative.
constexpr SignedSubset mirror_closure(SignedSubset s) {
  return s | negate_set(s);
}

// Canonical set order: by cardinality, then lexicographic on the canonical
// element sequence.
inline bool canonical_less(SignedSubset a, SignedSubset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  std::uint32_t x = a.mask();
  std::uint32_t y = b.mask();
  while (x != 0 && y != 0) {
    const int bx = std::countr_zero(x);
    const int by = std::countr_zero(y);
    if (bx != by) return bx < by;
    x &= x - 1;
    y &= y - 1;
  }
  return false;
}

inline std::string format_element(SignedElement e) {
  return std::to_string(e.value());
}

// "1 -2 3", or "{}" for the empty set.
inline std::string format_set(SignedSubset s) {
  if (s.empty()) return "{}";
  std::string out;
  for (SignedElement e : s.elements()) {
    if (!out.empty()) out += ' ';
    out += format_element(e);
  }
  return out;
}

// "{1,-2,3}", used in diagnostics and traces.
inline std::string format_braced(SignedSubset s) {
  std::string out = "{";
  bool first = true;
  for (SignedElement e : s.elements()) {
    if (!first) out += ',';
    out += format_element(e);
    first = false;
  }
  return out + "}";
}

namespace detail {

inline SignedElement ParseElementToken(std::string_view token,
                                       const GroundSize* n, int line,
                                       int column) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const bool has_digits =
      token.size() > (token[0] == '-' ? 1u : 0u) && token[0] != '+';
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (!has_digits || ec != std::errc() || ptr != last) {
    throw ParseError("malformed token '" + std::string(token) + "'", line,
                     column);
  }
  if (value == 0) {
    throw ParseError("zero is not a signed element", line, column);
  }
  const int limit = n != nullptr ? n->value() : kMaxGroundSize;
  if (std::abs(value) > limit) {
    throw ParseError("element " + std::string(token) +
                         " is out of range for n = " + std::to_string(limit),
                     line, column);
  }
  return SignedElement(value);
}

// Parses one line of the family grammar. `n` may be null, in which case
// magnitudes are only bounded by kMaxGroundSize. `line` feeds diagnostics.
inline SignedSubset ParseSetLine(std::string_view text, const GroundSize* n,
                                 int line) {
  while (!text.empty() && (text.back() == '\r' || text.back() == ' ' ||
                           text.back() == '\t')) {
    text.remove_suffix(1);
  }
  std::size_t pos = 0;
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  if (pos == text.size()) throw ParseError("empty set text", line, 1);
  if (text.substr(pos) == "{}") return SignedSubset();

  SignedSubset out;
  while (pos < text.size()) {
    const int column = static_cast<int>(pos) + 1;
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view token = text.substr(pos, end - pos);
    if (token.empty()) {
      throw ParseError("expected a single space between elements", line,
                       column);
    }

    const SignedElement e = ParseElementToken(token, n, line, column);
    if (out.contains(e)) {
      throw ParseError("duplicate element " + std::string(token), line,
                       column);
    }
    out.insert(e);
    // Trailing blanks were trimmed, so a separator is always followed by text.
    pos = end < text.size() ? end + 1 : end;
  }
  return out;
}

}  // namespace detail

// Parses "-2 1 3" or "{}". Errors carry the 1-based column of the bad token.
inline SignedSubset parse_set(std::string_view text, GroundSize n) {
  return detail::ParseSetLine(text, &n, 0);
}

}  // namespace symplectic

template <>
struct std::hash<symplectic::SignedSubset> {
  std::size_t operator()(symplectic::SignedSubset s) const noexcept {
    return std::hash<std::uint32_t>()(s.mask());
  }
};

#endif  // SYMPLECTIC_SIGNED_SET_HPP_
