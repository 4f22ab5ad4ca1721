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

#ifndef SYMPLECTIC_GREEDY_HPP_
#define SYMPLECTIC_GREEDY_HPP_

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "symplectic/ordering.hpp"
#include "symplectic/signed_set.hpp"

namespace symplectic {

// Sorts canonically and rejects duplicates.
inline std::vector<SignedSubset> canonical_sorted(std::vector<SignedSubset> sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
  const auto dup = std::adjacent_find(sets.begin(), sets.end());
  if (dup != sets.end()) {
    throw InputError("duplicate set " + format_braced(*dup));
  }
  return sets;
}

// A nonempty family of distinct, equinumerous, admissible subsets of E(n).
// Members are kept in canonical order.
class BasisFamily {
 public:
  BasisFamily(GroundSize n, std::vector<SignedSubset> sets)
      : n_(n), sets_(canonical_sorted(std::move(sets))) {
    if (sets_.empty()) throw InputError("a basis family must be nonempty");
    rank_ = sets_.front().size();
    for (SignedSubset s : sets_) {
      if (!s.within(n)) {
        throw InputError("set " + format_braced(s) + " leaves E(" +
                         std::to_string(n.value()) + ")");
      }
      if (!is_admissible(s)) {
        throw InputError("inadmissible set " + format_braced(s));
      }
      if (s.size() != rank_) {
        throw InputError("sets of different sizes: " +
                         format_braced(sets_.front()) + " and " +
                         format_braced(s));
      }
    }
  }

  GroundSize ground_size() const { return n_; }
  int rank() const { return rank_; }
  std::span<const SignedSubset> sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }

  bool contains(SignedSubset s) const {
    return std::binary_search(sets_.begin(), sets_.end(), s, canonical_less);
  }

  // Rank n; the maximal case of the construction.
  bool is_lagrangian() const { return rank_ == n_.value(); }

  friend bool operator==(const BasisFamily&, const BasisFamily&) = default;

 private:
  GroundSize n_;
  std::vector<SignedSubset> sets_;
  int rank_ = 0;
};

// True iff `s` lies inside some member.
inline bool feasible_extension(std::span<const SignedSubset> sets,
                               SignedSubset s) {
  return std::any_of(sets.begin(), sets.end(),
                     [s](SignedSubset member) { return s.subset_of(member); });
}

inline bool feasible_extension(const BasisFamily& family, SignedSubset s) {
  return feasible_extension(family.sets(), s);
}

// The greedy pass without bookkeeping: scan largest to smallest and keep an
// element whenever the kept set still lies inside some member. Works for any
// nonempty family, equinumerous or not.
inline SignedSubset greedy_choice(std::span<const SignedSubset> sets,
                                  const AdmissibleOrdering& o) {
  SignedSubset current;
  for (int p = 0; p < o.ground_size().element_count(); ++p) {
    const SignedSubset candidate = current.with(o.at(p));
    if (feasible_extension(sets, candidate)) current = candidate;
  }
  return current;
}

struct GreedyStep {
  SignedElement element;
  bool accepted;
  std::string reason;
};

struct GreedyTrace {
  SignedSubset chosen;
  std::vector<GreedyStep> steps;
};

inline GreedyTrace greedy_solution(const BasisFamily& family,
                                   const AdmissibleOrdering& o) {
  GreedyTrace trace;
  SignedSubset current;
  for (SignedElement e : o.sequence()) {
    const SignedSubset candidate = current.with(e);
    const bool accept = feasible_extension(family, candidate);
    trace.steps.push_back(
        {e, accept,
         format_braced(candidate) +
             (accept ? " extends a member" : " extends no member")});
    if (accept) current = candidate;
  }
  trace.chosen = current;
  return trace;
}

inline Weight weight_of(SignedSubset s, const WeightFunction& w) {
  Weight total(0);
  for (SignedElement e : s.elements()) total += w(e);
  return total;
}

inline bool is_optimal(const BasisFamily& family, SignedSubset candidate,
                       const WeightFunction& w) {
  if (!family.contains(candidate)) {
    throw InputError("candidate " + format_braced(candidate) +
                     " is not a member of the family");
  }
  const Weight own = weight_of(candidate, w);
  return std::none_of(
      family.sets().begin(), family.sets().end(),
      [&](SignedSubset other) { return weight_of(other, w) > own; });
}

// Whether the i-th largest element of `a` is at least the i-th largest
// element of `b` along `o`, for every i.
inline bool gale_dominates(const AdmissibleOrdering& o, SignedSubset a,
                           SignedSubset b) {
  if (a.size() != b.size()) {
    throw InputError("gale comparison needs equal sizes, got " +
                     std::to_string(a.size()) + " and " +
                     std::to_string(b.size()));
  }
  // Equivalent prefix form: every prefix of `o` holds at least as many
  // elements of `a` as of `b`.
  int balance = 0;
  for (int p = 0; p < o.ground_size().element_count(); ++p) {
    const std::uint32_t bit = 1u << o.bit_at(p);
    if (a.mask() & bit) ++balance;
    if (b.mask() & bit) --balance;
    if (balance < 0) return false;
  }
  return true;
}

// Optimality against the 2n+1 threshold weights of `o`. A compatible weight
// is a constant plus a nonnegative combination of thresholds, and constants
// cancel between equinumerous sets, so this decides optimality for every
// weight compatible with `o`.
inline bool optimal_for_all_thresholds(const BasisFamily& family,
                                       SignedSubset candidate,
                                       const AdmissibleOrdering& o) {
  for (int k = 0; k <= o.ground_size().element_count(); ++k) {
    if (!is_optimal(family, candidate, threshold_weight(o, k))) return false;
  }
  return true;
}

// Optimality against `samples` random compatible weights, seeds
// first_seed, first_seed + 1, ...
inline bool optimal_for_sampled_weights(const BasisFamily& family,
                                        SignedSubset candidate,
                                        const AdmissibleOrdering& o,
                                        std::uint64_t first_seed, int samples) {
  for (int s = 0; s < samples; ++s) {
    if (!is_optimal(family, candidate, random_compatible_weight(o, first_seed + s))) {
      return false;
    }
  }
  return true;
}

}  // namespace symplectic

#endif  // SYMPLECTIC_GREEDY_HPP_
