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

// Admissible total orderings of E(n) and weight functions on E(n).
//
// An admissible ordering is written largest-first as a signed permutation
// of 1..n (the "top row") followed by the negated reversal of the top row,
// e.g. top row (-2, 1, 3) gives -2 > 1 > 3 > -3 > -1 > 2.

#ifndef SYMPLECTIC_ORDERING_HPP_
#define SYMPLECTIC_ORDERING_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "symplectic/signed_set.hpp"

namespace symplectic {

using Weight = boost::rational<std::int64_t>;

// "3" for integers, "-7/2" otherwise.
inline std::string format_weight(const Weight& w) {
  std::string out = std::to_string(w.numerator());
  if (w.denominator() != 1) out += "/" + std::to_string(w.denominator());
  return out;
}

enum class Comparison { kLess, kEqual, kGreater };

class AdmissibleOrdering {
 public:
  AdmissibleOrdering(std::span<const SignedElement> top_row, GroundSize n)
      : n_(n) {
    if (static_cast<int>(top_row.size()) != n.value()) {
      throw InputError("ordering needs " + std::to_string(n.value()) +
                       " elements, got " + std::to_string(top_row.size()));
    }
    std::uint32_t seen_magnitudes = 0;
    for (std::size_t i = 0; i < top_row.size(); ++i) {
      const SignedElement e = top_row[i];
      if (!e.in(n)) {
        throw InputError("element " + format_element(e) +
                         " is out of range for n = " +
                         std::to_string(n.value()));
      }
      const std::uint32_t bit = 1u << (e.magnitude() - 1);
      if (seen_magnitudes & bit) {
        throw InputError("repeated magnitude " +
                         std::to_string(e.magnitude()) + " in ordering");
      }
      seen_magnitudes |= bit;
    }
    const int size = n.element_count();
    for (int i = 0; i < n.value(); ++i) {
      const int bit = top_row[i].bit();
      sequence_[i] = static_cast<std::uint8_t>(bit);
      sequence_[size - 1 - i] = static_cast<std::uint8_t>(bit ^ 1);
    }
    for (int p = 0; p < size; ++p) position_[sequence_[p]] = static_cast<std::uint8_t>(p);
  }

  GroundSize ground_size() const { return n_; }

  // Element at 0-based position p, position 0 being the largest.
  SignedElement at(int p) const { return SignedElement::FromBit(sequence_[p]); }
  int bit_at(int p) const { return sequence_[p]; }
  int position_of(SignedElement e) const { return position_[e.bit()]; }
  int position_of_bit(int bit) const { return position_[bit]; }

  std::vector<SignedElement> top_row() const {
    std::vector<SignedElement> out;
    for (int i = 0; i < n_.value(); ++i) out.push_back(at(i));
    return out;
  }

  // Full order, largest first.
  std::vector<SignedElement> sequence() const {
    std::vector<SignedElement> out;
    for (int p = 0; p < n_.element_count(); ++p) out.push_back(at(p));
    return out;
  }

  // The k largest elements.
  SignedSubset prefix(int k) const {
    std::uint32_t m = 0;
    for (int p = 0; p < k; ++p) m |= 1u << sequence_[p];
    return SignedSubset(m);
  }

  friend bool operator==(const AdmissibleOrdering& a,
                         const AdmissibleOrdering& b) {
    return a.n_ == b.n_ && a.sequence_ == b.sequence_;
  }

 private:
  GroundSize n_;
  std::array<std::uint8_t, 2 * kMaxGroundSize> sequence_{};
  std::array<std::uint8_t, 2 * kMaxGroundSize> position_{};
};

inline AdmissibleOrdering ordering_from_top_row(
    std::span<const SignedElement> top_row, GroundSize n) {
  return AdmissibleOrdering(top_row, n);
}

inline AdmissibleOrdering ordering_from_top_row(std::initializer_list<int> top_row,
                                                GroundSize n) {
  std::vector<SignedElement> elements;
  for (int v : top_row) elements.emplace_back(v);
  return AdmissibleOrdering(elements, n);
}

// Parses the `--ordering "-2 1 3"` syntax.
inline AdmissibleOrdering parse_ordering(std::string_view text, GroundSize n) {
  std::vector<SignedElement> elements;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    elements.push_back(detail::ParseElementToken(
        text.substr(pos, end - pos), &n, 0, static_cast<int>(pos) + 1));
    pos = end;
  }
  return AdmissibleOrdering(elements, n);
}

inline std::string format_ordering(const AdmissibleOrdering& o) {
  std::string out;
  for (SignedElement e : o.top_row()) {
    if (!out.empty()) out += ' ';
    out += format_element(e);
  }
  return out;
}

inline Comparison compare(const AdmissibleOrdering& o, SignedElement x,
                          SignedElement y) {
  const int px = o.position_of(x);
  const int py = o.position_of(y);
  if (px == py) return Comparison::kEqual;
  // Smaller position means larger element.
  return px < py ? Comparison::kGreater : Comparison::kLess;
}

// The ordinary integer order n > ... > 1 > -1 > ... > -n.
inline AdmissibleOrdering standard_ordering(GroundSize n) {
  std::vector<SignedElement> top;
  for (int m = n.value(); m >= 1; --m) top.emplace_back(m);
  return AdmissibleOrdering(top, n);
}

// 2^n * n!
inline std::uint64_t admissible_ordering_count(GroundSize n) {
  std::uint64_t count = 1;
  for (int i = 1; i <= n.value(); ++i) count *= 2 * static_cast<std::uint64_t>(i);
  return count;
}

// The index-th ordering of the enumeration: index = perm_rank * 2^n + signs,
// magnitude permutations in lexicographic order, sign vectors lexicographic
// with + before - and the first position most significant.
inline AdmissibleOrdering nth_admissible_ordering(GroundSize n,
                                                  std::uint64_t index) {
  const int size = n.value();
  const std::uint64_t signs = index & ((std::uint64_t{1} << size) - 1);
  std::uint64_t rank = index >> size;

  std::vector<int> pool;
  for (int m = 1; m <= size; ++m) pool.push_back(m);
  std::vector<std::uint64_t> factorial(size + 1, 1);
  for (int i = 1; i <= size; ++i) factorial[i] = factorial[i - 1] * i;

  std::vector<SignedElement> top;
  for (int i = 0; i < size; ++i) {
    const std::uint64_t block = factorial[size - 1 - i];
    const std::size_t pick = static_cast<std::size_t>(rank / block);
    rank %= block;
    const int magnitude = pool[pick];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    const bool negative = (signs >> (size - 1 - i)) & 1u;
    top.emplace_back(negative ? -magnitude : magnitude);
  }
  return AdmissibleOrdering(top, n);
}

inline std::vector<AdmissibleOrdering> all_admissible_orderings(GroundSize n) {
  std::vector<AdmissibleOrdering> out;
  const std::uint64_t count = admissible_ordering_count(n);
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(nth_admissible_ordering(n, i));
  }
  return out;
}

// A total map E(n) -> Q.
class WeightFunction {
 public:
  explicit WeightFunction(GroundSize n) : n_(n), weights_(n.element_count()) {}

  GroundSize ground_size() const { return n_; }

  Weight operator()(SignedElement e) const { return weights_[e.bit()]; }
  Weight at_bit(int bit) const { return weights_[bit]; }
  void set(SignedElement e, Weight w) { weights_[e.bit()] = w; }

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  GroundSize n_;
  std::vector<Weight> weights_;
};

// Weights must be nonincreasing when read largest-first along `o`.
inline bool is_compatible(const WeightFunction& w, const AdmissibleOrdering& o) {
  for (int p = 1; p < o.ground_size().element_count(); ++p) {
    if (w.at_bit(o.bit_at(p)) > w.at_bit(o.bit_at(p - 1))) return false;
  }
  return true;
}

// 1 on the k largest elements of `o`, 0 elsewhere.
inline WeightFunction threshold_weight(const AdmissibleOrdering& o, int k) {
  const GroundSize n = o.ground_size();
  if (k < 0 || k > n.element_count()) {
    throw InputError("threshold " + std::to_string(k) + " outside 0.." +
                     std::to_string(n.element_count()));
  }
  WeightFunction w(n);
  for (int p = 0; p < k; ++p) w.set(o.at(p), Weight(1));
  return w;
}

// Values in [-10, 10] with small denominators (so ties occur), sorted along o.
inline WeightFunction random_compatible_weight(const AdmissibleOrdering& o,
                                               std::uint64_t seed) {
  const GroundSize n = o.ground_size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> denominator(1, 10);
  std::vector<Weight> values;
  for (int i = 0; i < n.element_count(); ++i) {
    const std::int64_t d = denominator(rng);
    std::uniform_int_distribution<std::int64_t> numerator(-10 * d, 10 * d);
    values.emplace_back(numerator(rng), d);
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  WeightFunction w(n);
  for (int p = 0; p < n.element_count(); ++p) w.set(o.at(p), values[p]);
  return w;
}

}  // namespace symplectic

#endif  // SYMPLECTIC_ORDERING_HPP_
