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

// WXYZ orderings: the orderings that show why a symplectic matroid must
// satisfy the augmentation axiom. Given independent I, J,
//
//   W = I \ -J,   Y = J \ (I u -I),   Z = I n -J,
//
// and X is whatever E(n) has left once W, Y, Z and their mirrors are
// removed. A half H of X takes one element from every mirror pair of X.
// A WXYZ ordering lists W, then H, then Y, then Z in its top row.

#ifndef SYMPLECTIC_WXYZ_HPP_
#define SYMPLECTIC_WXYZ_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "symplectic/axioms.hpp"
#include "symplectic/greedy.hpp"
#include "symplectic/ordering.hpp"
#include "symplectic/signed_set.hpp"

namespace symplectic {

struct WxyzDecomposition {
  SignedSubset w;
  SignedSubset y;
  SignedSubset z;

  // Mirror pairs untouched by W, Y and Z.
  SignedSubset untouched(GroundSize n) const {
    return SignedSubset(n.full_mask()) - mirror_closure(w | y | z);
  }
};

inline WxyzDecomposition wxyz_decompose(SignedSubset i, SignedSubset j) {
  if (!is_admissible(i) || !is_admissible(j)) {
    throw InputError("WXYZ decomposition needs admissible sets");
  }
  const SignedSubset negated_j = negate_set(j);
  return {i - negated_j, j - mirror_closure(i), i & negated_j};
}

// All halves of `x`, which must be closed under negation. The i-th mirror
// pair (ascending magnitude) takes its negative element when bit
// (pairs - 1 - i) of the half index is set.
inline std::vector<SignedSubset> halves(SignedSubset x) {
  const SignedSubset positives(x.mask() & detail::kPositiveBits);
  const std::vector<SignedElement> pairs = positives.elements();
  const std::size_t count = pairs.size();
  std::vector<SignedSubset> out;
  out.reserve(std::size_t{1} << count);
  for (std::uint64_t index = 0; index < (std::uint64_t{1} << count); ++index) {
    SignedSubset half;
    for (std::size_t p = 0; p < count; ++p) {
      const bool negative = (index >> (count - 1 - p)) & 1u;
      half.insert(negative ? negate_element(pairs[p]) : pairs[p]);
    }
    out.push_back(half);
  }
  return out;
}

enum class BlockArrangement {
  kAscendingMagnitude,  // one ordering per half
  kAllPermutations,     // every arrangement inside every block
};

namespace detail {

inline std::vector<SignedElement> ByMagnitude(SignedSubset s) {
  // Canonical order is already ascending in magnitude.
  return s.elements();
}

inline void ExpandBlocks(const std::vector<std::vector<SignedElement>>& blocks,
                         std::size_t block, std::vector<SignedElement>& row,
                         GroundSize n, std::vector<AdmissibleOrdering>& out) {
  if (block == blocks.size()) {
    out.emplace_back(row, n);
    return;
  }
  std::vector<SignedElement> current = blocks[block];
  std::vector<int> index(current.size());
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = static_cast<int>(i);
  do {
    const std::size_t base = row.size();
    for (int i : index) row.push_back(current[i]);
    ExpandBlocks(blocks, block + 1, row, n, out);
    row.erase(row.begin() + static_cast<std::ptrdiff_t>(base), row.end());
  } while (std::next_permutation(index.begin(), index.end()));
}

}  // namespace detail

inline std::vector<AdmissibleOrdering> wxyz_orderings(
    const WxyzDecomposition& d, GroundSize n,
    BlockArrangement arrangement = BlockArrangement::kAscendingMagnitude) {
  std::vector<AdmissibleOrdering> out;
  for (SignedSubset h : halves(d.untouched(n))) {
    std::vector<std::vector<SignedElement>> blocks = {
        detail::ByMagnitude(d.w), detail::ByMagnitude(h),
        detail::ByMagnitude(d.y), detail::ByMagnitude(d.z)};
    if (arrangement == BlockArrangement::kAscendingMagnitude) {
      std::vector<SignedElement> row;
      for (const auto& b : blocks) row.insert(row.end(), b.begin(), b.end());
      out.emplace_back(row, n);
    } else {
      std::vector<SignedElement> row;
      detail::ExpandBlocks(blocks, 0, row, n, out);
    }
  }
  return out;
}

// One run of the repositioning construction for a pair (I, J) meeting the
// axiom hypothesis in the closure of `family`.
//
// S collects the elements x of X with both W + x and W + (-x) independent,
// and the y in Y with W + y independent. Starting from the WXYZ ordering
// whose half has the fewest x with W + x independent, the elements of
// (H u Y) n S move to just after Z and their mirrors follow suit. Every
// element up to the end of -Z gets weight one. If the greedy pass is
// optimal there, the first moved element (or mirror) it picks satisfies
// the axiom's conclusion.
struct NecessityTrace {
  WxyzDecomposition decomposition;
  SignedSubset half;
  SignedSubset special;  // S
  SignedSubset moved;    // (H u Y) n S
  AdmissibleOrdering ordering;
  int threshold;  // weight one on this many largest elements
  SignedSubset greedy;
  bool greedy_optimal;
  std::optional<SignedSubset> beating;  // a member outweighing the greedy set
  std::optional<SignedElement> picked;  // first moved element or mirror taken
};

inline NecessityTrace trace_necessity(const BasisFamily& family,
                                      SignedSubset i, SignedSubset j) {
  const GroundSize n = family.ground_size();
  const WxyzDecomposition d = wxyz_decompose(i, j);
  const auto independent = [&](SignedSubset s) {
    return feasible_extension(family, s);
  };

  const SignedSubset x = d.untouched(n);
  SignedSubset special;
  SignedSubset half;
  for (SignedElement p : SignedSubset(x.mask() & detail::kPositiveBits).elements()) {
    const SignedElement q = negate_element(p);
    const bool p_extends = independent(d.w.with(p));
    const bool q_extends = independent(d.w.with(q));
    if (p_extends && q_extends) {
      special.insert(p);
      special.insert(q);
    }
    // The count being minimized is a sum over mirror pairs, so each pair
    // picks independently; prefer the side that does not extend W.
    half.insert(p_extends && !q_extends ? q : p);
  }
  for (SignedElement y : d.y.elements()) {
    if (independent(d.w.with(y))) special.insert(y);
  }

  const SignedSubset moved = (half | d.y) & special;
  std::vector<SignedElement> row;
  for (SignedSubset block : {d.w, half - moved, d.y - moved, d.z, half & moved,
                             d.y & moved}) {
    for (SignedElement e : block.elements()) row.push_back(e);
  }
  const AdmissibleOrdering ordering(row, n);
  const int threshold = n.value() + moved.size() + d.z.size();

  const SignedSubset top = ordering.prefix(threshold);
  const SignedSubset greedy = greedy_choice(family.sets(), ordering);
  const int greedy_weight = (greedy & top).size();
  std::optional<SignedSubset> beating;
  for (SignedSubset member : family.sets()) {
    if ((member & top).size() > greedy_weight &&
        (!beating || (member & top).size() > (*beating & top).size())) {
      beating = member;
    }
  }

  std::optional<SignedElement> picked;
  const SignedSubset repositioned = mirror_closure(moved);
  for (int p = 0; p < threshold; ++p) {
    const SignedElement e = ordering.at(p);
    if (greedy.contains(e) && repositioned.contains(e)) {
      picked = e;
      break;
    }
  }

  return NecessityTrace{d,       half,      special, moved,
                        ordering, threshold, greedy,  !beating.has_value(),
                        beating, picked};
}

}  // namespace symplectic

#endif  // SYMPLECTIC_WXYZ_HPP_
