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

#include "symplectic/greedy.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "oracle.hpp"
#include "symplectic/enumeration.hpp"

namespace symplectic {
namespace {

const GroundSize kThree(3);

BasisFamily TwoMemberExample() {
  return BasisFamily(kThree, {SignedSubset{-2, -1, 3}, SignedSubset{-2, 1, 3}});
}

BasisFamily ExampleMatroid() {
  return BasisFamily(kThree, {SignedSubset{1, -3}, SignedSubset{2, -3},
                              SignedSubset{-1, 2}, SignedSubset{-1, 3}});
}

oracle::Set ToOracle(SignedSubset s) {
  oracle::Set out;
  for (SignedElement e : s.elements()) out.insert(e.value());
  return out;
}

TEST(BasisFamily, Validation) {
  EXPECT_THROW(BasisFamily(kThree, {}), InputError);
  EXPECT_THROW(BasisFamily(kThree, {SignedSubset{1, -1}}), InputError);
  EXPECT_THROW(BasisFamily(kThree, {SignedSubset{1}, SignedSubset{1, 2}}),
               InputError);
  EXPECT_THROW(BasisFamily(kThree, {SignedSubset{1}, SignedSubset{1}}),
               InputError);
  EXPECT_THROW(BasisFamily(GroundSize(2), {SignedSubset{3}}), InputError);
  EXPECT_NO_THROW(BasisFamily(kThree, {SignedSubset{}}));
  EXPECT_EQ(ExampleMatroid().rank(), 2);
  EXPECT_FALSE(ExampleMatroid().is_lagrangian());
  EXPECT_TRUE(TwoMemberExample().is_lagrangian());
}

TEST(FeasibleExtension, Examples) {
  EXPECT_FALSE(feasible_extension(TwoMemberExample(), SignedSubset{2, 3}));
  EXPECT_TRUE(feasible_extension(TwoMemberExample(), SignedSubset{}));
  EXPECT_TRUE(feasible_extension(ExampleMatroid(), SignedSubset{}));
  EXPECT_TRUE(feasible_extension(ExampleMatroid(), SignedSubset{-1}));
  EXPECT_FALSE(feasible_extension(ExampleMatroid(), SignedSubset{-2}));
}

TEST(FeasibleExtensionProperty, AntitoneInSubsetOrder) {
  const BasisFamily family = ExampleMatroid();
  for (std::uint32_t t = 0; t <= kThree.full_mask(); ++t) {
    if (!feasible_extension(family, SignedSubset(t))) continue;
    for (std::uint32_t s = t;; s = (s - 1) & t) {
      ASSERT_TRUE(feasible_extension(family, SignedSubset(s)));
      if (s == 0) break;
    }
  }
}

TEST(GreedySolution, TwoMemberExampleUnderStandardOrdering) {
  const GreedyTrace trace =
      greedy_solution(TwoMemberExample(), standard_ordering(kThree));
  EXPECT_EQ(trace.chosen, (SignedSubset{-2, 1, 3}));
  ASSERT_EQ(trace.steps.size(), 6u);
  EXPECT_EQ(trace.steps[0].element.value(), 3);
  EXPECT_TRUE(trace.steps[0].accepted);
  EXPECT_EQ(trace.steps[1].element.value(), 2);
  EXPECT_FALSE(trace.steps[1].accepted);
  EXPECT_EQ(trace.steps[1].reason, "{2,3} extends no member");
}

TEST(GreedySolution, SingleMemberAlwaysChosen) {
  const BasisFamily family(kThree, {SignedSubset{-1, 2}});
  for (const auto& o : all_admissible_orderings(kThree)) {
    EXPECT_EQ(greedy_solution(family, o).chosen, (SignedSubset{-1, 2}));
  }
}

// Hand simulation under 3 > 2 > 1 > -1 > -2 > -3: take 3 ({-1,3}), skip 2
// ({2,3} nowhere), skip 1 ({1,3} nowhere), take -1, then the set is full.
TEST(GreedySolution, ExampleMatroidUnderStandardOrdering) {
  const GreedyTrace trace =
      greedy_solution(ExampleMatroid(), standard_ordering(kThree));
  EXPECT_EQ(trace.chosen, (SignedSubset{-1, 3}));
  EXPECT_EQ(ToOracle(trace.chosen),
            oracle::greedy({{1, -3}, {2, -3}, {-1, 2}, {-1, 3}},
                           {3, 2, 1, -1, -2, -3}));
  std::vector<bool> accepted;
  for (const auto& step : trace.steps) accepted.push_back(step.accepted);
  EXPECT_EQ(accepted, (std::vector<bool>{true, false, false, true, false, false}));
}

// Greedy matches the literal reference (completion only with elements still
// to come) on every family of the (2,2), (3,1) and (3,3) sweeps.
TEST(GreedySolutionProperty, MatchesReferenceAndTraceInvariants) {
  for (auto [n, k] : {std::pair{2, 2}, std::pair{3, 1}, std::pair{3, 3}}) {
    const GroundSize g(n);
    const auto universe = admissible_k_subsets(g, k);
    const auto orderings = all_admissible_orderings(g);
    for (std::uint64_t id = 1; id < (std::uint64_t{1} << universe.size()); ++id) {
      const BasisFamily family(g, family_from_id(universe, id));
      oracle::Family reference;
      for (SignedSubset s : family.sets()) reference.insert(ToOracle(s));
      for (const auto& o : orderings) {
        const GreedyTrace trace = greedy_solution(family, o);
        ASSERT_TRUE(family.contains(trace.chosen));
        ASSERT_EQ(trace.chosen, greedy_choice(family.sets(), o));
        std::vector<int> order;
        for (SignedElement e : o.sequence()) order.push_back(e.value());
        ASSERT_EQ(ToOracle(trace.chosen), oracle::greedy(reference, order));
        int last_position = -1;
        for (const auto& step : trace.steps) {
          if (!step.accepted) continue;
          ASSERT_GT(o.position_of(step.element), last_position);
          last_position = o.position_of(step.element);
        }
        // Weight independence: a second run gives the same trace.
        const GreedyTrace again = greedy_solution(family, o);
        ASSERT_EQ(again.chosen, trace.chosen);
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
          ASSERT_EQ(again.steps[i].reason, trace.steps[i].reason);
        }
      }
    }
  }
}

TEST(WeightOf, Examples) {
  const auto o = ordering_from_top_row({-2, 1, 3}, kThree);
  EXPECT_EQ(weight_of(SignedSubset{}, threshold_weight(o, 3)), Weight(0));
  EXPECT_EQ(weight_of(SignedSubset{-2, 3}, threshold_weight(o, 2)), Weight(1));
  for (std::uint32_t m = 0; m <= kThree.full_mask(); ++m) {
    EXPECT_EQ(weight_of(SignedSubset(m), threshold_weight(o, 6)),
              Weight(std::popcount(m)));
  }
  WeightFunction w(kThree);
  w.set(SignedElement(1), Weight(1, 3));
  w.set(SignedElement(-2), Weight(-1, 2));
  EXPECT_EQ(weight_of(SignedSubset{1, -2}, w), Weight(-1, 6));
}

TEST(IsOptimal, Examples) {
  const BasisFamily single(kThree, {SignedSubset{1, 2}});
  EXPECT_TRUE(is_optimal(single, SignedSubset{1, 2},
                         threshold_weight(standard_ordering(kThree), 4)));

  const BasisFamily example = ExampleMatroid();
  WeightFunction constant(kThree);
  for (int x : {-3, -2, -1, 1, 2, 3}) constant.set(SignedElement(x), Weight(7, 2));
  for (SignedSubset s : example.sets()) EXPECT_TRUE(is_optimal(example, s, constant));

  // Weight 1 on {3, 2, 1}: {-2,1,3} weighs 2, {-2,-1,3} weighs 1.
  const BasisFamily two = TwoMemberExample();
  const WeightFunction top3 = threshold_weight(standard_ordering(kThree), 3);
  EXPECT_EQ(weight_of(SignedSubset{-2, 1, 3}, top3), Weight(2));
  EXPECT_EQ(weight_of(SignedSubset{-2, -1, 3}, top3), Weight(1));
  EXPECT_TRUE(is_optimal(two, SignedSubset{-2, 1, 3}, top3));
  EXPECT_FALSE(is_optimal(two, SignedSubset{-2, -1, 3}, top3));

  EXPECT_THROW(is_optimal(two, SignedSubset{1, 2, 3}, top3), InputError);
}

TEST(GaleDominates, Examples) {
  const auto standard = standard_ordering(kThree);
  EXPECT_TRUE(gale_dominates(standard, SignedSubset{1, -2}, SignedSubset{1, -2}));
  EXPECT_TRUE(gale_dominates(standard, SignedSubset{3, 2}, SignedSubset{1, -2}));
  EXPECT_FALSE(gale_dominates(standard, SignedSubset{1, -2}, SignedSubset{3, 2}));
  EXPECT_THROW(gale_dominates(standard, SignedSubset{1}, SignedSubset{1, 2}),
               InputError);
}

// Literal form: sort each set largest-first and compare position by position.
bool GaleByElements(const AdmissibleOrdering& o, SignedSubset a, SignedSubset b) {
  std::vector<int> pa;
  std::vector<int> pb;
  for (SignedElement e : a.elements()) pa.push_back(o.position_of(e));
  for (SignedElement e : b.elements()) pb.push_back(o.position_of(e));
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (pa[i] > pb[i]) return false;
  }
  return true;
}

// Gale domination agrees with its elementwise definition, and implies a
// weight at least as large for all thresholds and 1000 sampled compatible
// weights, on every pair of admissible k-sets for n <= 3.
TEST(GaleDominatesProperty, ImpliesWeightDomination) {
  for (int n = 1; n <= 3; ++n) {
    const GroundSize g(n);
    for (const auto& o : all_admissible_orderings(g)) {
      std::vector<WeightFunction> weights;
      for (int k = 0; k <= g.element_count(); ++k) weights.push_back(threshold_weight(o, k));
      for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        weights.push_back(random_compatible_weight(o, seed));
      }
      for (int k = 0; k <= n; ++k) {
        const auto sets = admissible_k_subsets(g, k);
        std::vector<std::vector<Weight>> totals(sets.size());
        for (std::size_t s = 0; s < sets.size(); ++s) {
          for (const auto& w : weights) totals[s].push_back(weight_of(sets[s], w));
        }
        for (std::size_t a = 0; a < sets.size(); ++a) {
          for (std::size_t b = 0; b < sets.size(); ++b) {
            const bool dominates = gale_dominates(o, sets[a], sets[b]);
            ASSERT_EQ(dominates, GaleByElements(o, sets[a], sets[b]));
            if (!dominates) continue;
            for (std::size_t w = 0; w < weights.size(); ++w) {
              ASSERT_GE(totals[a][w], totals[b][w]);
            }
          }
        }
      }
    }
  }
}

// [optimal for all thresholds] <=> [gale-dominates every member] on every
// family of the n <= 3 sweeps, and both agree with 100 sampled weights on
// the n = 2 sweeps.
TEST(OptimalityReductionProperty, ThresholdsGaleAndSamples) {
  for (int n = 1; n <= 3; ++n) {
    const GroundSize g(n);
    const auto orderings = all_admissible_orderings(g);
    for (int k = 1; k <= n; ++k) {
      const auto universe = admissible_k_subsets(g, k);
      for (std::uint64_t id = 1; id < (std::uint64_t{1} << universe.size()); ++id) {
        const BasisFamily family(g, family_from_id(universe, id));
        for (const auto& o : orderings) {
          const SignedSubset chosen = greedy_choice(family.sets(), o);
          const bool by_thresholds = optimal_for_all_thresholds(family, chosen, o);
          const bool by_gale = std::all_of(
              family.sets().begin(), family.sets().end(),
              [&](SignedSubset other) { return gale_dominates(o, chosen, other); });
          ASSERT_EQ(by_thresholds, by_gale);
          if (n == 2) {
            ASSERT_EQ(by_thresholds,
                      optimal_for_sampled_weights(family, chosen, o, 1, 100));
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace symplectic
