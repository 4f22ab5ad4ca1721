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

#ifndef SYMPLECTIC_WITNESS_HPP_
#define SYMPLECTIC_WITNESS_HPP_

#include <cstdint>
#include <optional>
#include <span>

#include "symplectic/axioms.hpp"
#include "symplectic/greedy.hpp"
#include "symplectic/ordering.hpp"
#include "symplectic/wxyz.hpp"

namespace symplectic {

enum class WitnessRoute {
  kBruteForce,
  kWxyzConstruction,
};

inline const char* to_string(WitnessRoute route) {
  return route == WitnessRoute::kBruteForce ? "brute-force" : "wxyz";
}

// An ordering and threshold weight under which the greedy set loses.
struct Witness {
  AdmissibleOrdering ordering;
  int threshold;
  SignedSubset greedy;
  SignedSubset beating;
  WitnessRoute route = WitnessRoute::kBruteForce;
  std::optional<AxiomViolation> violation;  // the pair traced, wxyz route only
};

// Best member under the 0/1 weight of `top`, if it beats the greedy set.
inline std::optional<SignedSubset> beats_greedy(std::span<const SignedSubset> sets,
                                                SignedSubset greedy,
                                                SignedSubset top) {
  std::optional<SignedSubset> best;
  int best_weight = (greedy & top).size();
  for (SignedSubset member : sets) {
    const int weight = (member & top).size();
    if (weight > best_weight) {
      best = member;
      best_weight = weight;
    }
  }
  return best;
}

// Searches orderings in enumeration order (or only `only`) and thresholds
// k = 0..2n. Accepts any nonempty family, equinumerous or not.
inline std::optional<Witness> find_greedy_failure(
    GroundSize n, std::span<const SignedSubset> sets,
    const std::optional<AdmissibleOrdering>& only = std::nullopt) {
  const auto check = [&](const AdmissibleOrdering& o) -> std::optional<Witness> {
    const SignedSubset greedy = greedy_choice(sets, o);
    for (int k = 0; k <= n.element_count(); ++k) {
      if (auto beating = beats_greedy(sets, greedy, o.prefix(k))) {
        return Witness{o, k, greedy, *beating, WitnessRoute::kBruteForce,
                         std::nullopt};
      }
    }
    return std::nullopt;
  };
  if (only) return check(*only);
  const std::uint64_t count = admissible_ordering_count(n);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (auto w = check(nth_admissible_ordering(n, i))) return w;
  }
  return std::nullopt;
}

struct CounterexampleOptions {
  // Trace the repositioning construction over the axiom violations first.
  bool wxyz = false;
  std::optional<AdmissibleOrdering> ordering;
};

// None iff the family passes the definition (or, with an ordering given,
// iff greedy is optimal for every threshold under that ordering).
inline std::optional<Witness> find_counterexample(
    const BasisFamily& family, const CounterexampleOptions& options = {}) {
  if (options.wxyz && !options.ordering) {
    std::optional<Witness> found;
    for_each_axiom_violation(
        downward_closure(family), [&](const AxiomViolation& v) {
          const NecessityTrace trace =
              trace_necessity(family, v.smaller, v.larger);
          if (trace.greedy_optimal) return true;
          found = Witness{trace.ordering, trace.threshold, trace.greedy,
                          *trace.beating, WitnessRoute::kWxyzConstruction, v};
          return false;
        });
    if (found) return found;
  }
  return find_greedy_failure(family.ground_size(), family.sets(),
                             options.ordering);
}

// Independent re-evaluation with explicit weights.
inline bool witness_verifies(const BasisFamily& family, const Witness& w) {
  const WeightFunction weight = threshold_weight(w.ordering, w.threshold);
  const SignedSubset greedy = greedy_solution(family, w.ordering).chosen;
  return greedy == w.greedy && family.contains(w.beating) &&
         weight_of(w.beating, weight) > weight_of(greedy, weight);
}

}  // namespace symplectic

#endif  // SYMPLECTIC_WITNESS_HPP_
