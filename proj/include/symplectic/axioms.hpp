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

// The two characterizations of symplectic matroids.
//
// By definition, a basis family B is a symplectic matroid when, for every
// admissible ordering and every compatible weight, the greedy pass returns a
// member of maximum weight. Equivalently, its independence family (all
// subsets of members) satisfies the augmentation axiom: whenever |I| < |J|
// and no y in J \ I extends I, the union I u J is inadmissible and some
// x not in I has both I + x and (I \ -J) + (-x) independent.

#ifndef SYMPLECTIC_AXIOMS_HPP_
#define SYMPLECTIC_AXIOMS_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "symplectic/greedy.hpp"
#include "symplectic/ordering.hpp"
#include "symplectic/signed_set.hpp"

namespace symplectic {

// A subset-closed family of admissible subsets of E(n), kept in canonical
// order.
class IndependenceFamily {
 public:
  IndependenceFamily(GroundSize n, std::vector<SignedSubset> sets)
      : n_(n), sets_(canonical_sorted(std::move(sets))) {
    for (SignedSubset s : sets_) {
      if (!s.within(n)) {
        throw InputError("set " + format_braced(s) + " leaves E(" +
                         std::to_string(n.value()) + ")");
      }
      if (!is_admissible(s)) {
        throw InputError("inadmissible set " + format_braced(s));
      }
    }
    // One-element deletions suffice: closure then follows by induction.
    for (SignedSubset s : sets_) {
      for (SignedElement e : s.elements()) {
        SignedSubset smaller = s;
        smaller.erase(e);
        if (!contains(smaller)) {
          throw InputError("family is not subset-closed: " +
                           format_braced(s) + " is present but " +
                           format_braced(smaller) + " is not");
        }
      }
    }
  }

  GroundSize ground_size() const { return n_; }
  std::span<const SignedSubset> sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }

  bool contains(SignedSubset s) const {
    return std::binary_search(sets_.begin(), sets_.end(), s, canonical_less);
  }

  friend bool operator==(const IndependenceFamily&,
                         const IndependenceFamily&) = default;

 private:
  GroundSize n_;
  std::vector<SignedSubset> sets_;
};

inline std::vector<SignedSubset> subsets_of_members(
    std::span<const SignedSubset> sets) {
  std::unordered_set<SignedSubset> seen;
  for (SignedSubset member : sets) {
    const std::uint32_t full = member.mask();
    // Standard submask walk, including the empty set.
    for (std::uint32_t sub = full;; sub = (sub - 1) & full) {
      seen.insert(SignedSubset(sub));
      if (sub == 0) break;
    }
  }
  return {seen.begin(), seen.end()};
}

inline IndependenceFamily downward_closure(const BasisFamily& family) {
  return IndependenceFamily(family.ground_size(),
                            subsets_of_members(family.sets()));
}

// Inclusion-maximal members, canonical order.
inline std::vector<SignedSubset> maximal_sets(const IndependenceFamily& family) {
  std::vector<SignedSubset> out;
  for (SignedSubset s : family.sets()) {
    const bool dominated =
        std::any_of(family.sets().begin(), family.sets().end(),
                    [s](SignedSubset t) { return t != s && s.subset_of(t); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

// Throws InputError when the family is empty or its maximal members differ
// in size.
inline BasisFamily maximal_members(const IndependenceFamily& family) {
  if (family.empty()) {
    throw InputError("an empty family has no maximal members");
  }
  return BasisFamily(family.ground_size(), maximal_sets(family));
}

// Greedy optimality for all orderings, decided by Gale domination of every
// member by the greedy set.
inline bool is_symplectic_matroid_by_definition(const BasisFamily& family) {
  const GroundSize n = family.ground_size();
  const std::uint64_t count = admissible_ordering_count(n);
  for (std::uint64_t i = 0; i < count; ++i) {
    const AdmissibleOrdering o = nth_admissible_ordering(n, i);
    const SignedSubset chosen = greedy_choice(family.sets(), o);
    for (SignedSubset other : family.sets()) {
      if (!gale_dominates(o, chosen, other)) return false;
    }
  }
  return true;
}

enum class AxiomFailure {
  kUnionAdmissible,  // I u J is admissible
  kNoAugmentingElement,
};

inline const char* to_string(AxiomFailure kind) {
  switch (kind) {
    case AxiomFailure::kUnionAdmissible:
      return "union_admissible";
    case AxiomFailure::kNoAugmentingElement:
      return "no_augmenting_x";
  }
  return "unknown";
}

struct AxiomViolation {
  SignedSubset smaller;  // I
  SignedSubset larger;   // J
  AxiomFailure kind;
};

struct AxiomCheckResult {
  bool holds = true;
  std::optional<AxiomViolation> violation;
};

// Whether (I, J) meets the hypothesis: |I| < |J| and no y in J \ I has
// I + y independent.
inline bool axiom_hypothesis(const IndependenceFamily& family, SignedSubset i,
                             SignedSubset j) {
  if (i.size() >= j.size()) return false;
  for (SignedElement y : (j - i).elements()) {
    if (family.contains(i.with(y))) return false;
  }
  return true;
}

// Checks the conclusion for a pair meeting the hypothesis.
inline std::optional<AxiomFailure> axiom_conclusion_failure(
    const IndependenceFamily& family, SignedSubset i, SignedSubset j) {
  if (is_admissible(i | j)) return AxiomFailure::kUnionAdmissible;
  // x lies outside J here (otherwise x would augment I), so removing -J
  // touches only the I side.
  const SignedSubset kept = i - negate_set(j);
  const GroundSize n = family.ground_size();
  for (int bit = 0; bit < n.element_count(); ++bit) {
    const SignedElement x = SignedElement::FromBit(bit);
    if (i.contains(x)) continue;
    if (family.contains(i.with(x)) &&
        family.contains(kept.with(negate_element(x)))) {
      return std::nullopt;
    }
  }
  return AxiomFailure::kNoAugmentingElement;
}

// Visits every violating pair in order of (|I|, |J|, I, J), canonical set
// order within a size. Stops when `visit` returns false.
inline void for_each_axiom_violation(
    const IndependenceFamily& family,
    const std::function<bool(const AxiomViolation&)>& visit) {
  const auto sets = family.sets();
  // Members are sorted by size first, so each size is a contiguous run.
  std::vector<std::size_t> run_start;
  for (std::size_t idx = 0; idx < sets.size(); ++idx) {
    if (idx == 0 || sets[idx].size() != sets[idx - 1].size()) {
      run_start.push_back(idx);
    }
  }
  run_start.push_back(sets.size());
  const std::size_t runs = run_start.size() - 1;

  for (std::size_t a = 0; a < runs; ++a) {
    for (std::size_t b = a + 1; b < runs; ++b) {
      for (std::size_t ii = run_start[a]; ii < run_start[a + 1]; ++ii) {
        for (std::size_t jj = run_start[b]; jj < run_start[b + 1]; ++jj) {
          if (!axiom_hypothesis(family, sets[ii], sets[jj])) continue;
          const auto failure =
              axiom_conclusion_failure(family, sets[ii], sets[jj]);
          if (failure && !visit({sets[ii], sets[jj], *failure})) return;
        }
      }
    }
  }
}

inline AxiomCheckResult axiom_holds(const IndependenceFamily& family) {
  AxiomCheckResult result;
  for_each_axiom_violation(family, [&](const AxiomViolation& v) {
    result.holds = false;
    result.violation = v;
    return false;
  });
  return result;
}

}  // namespace symplectic

#endif  // SYMPLECTIC_AXIOMS_HPP_
