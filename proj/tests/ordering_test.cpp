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

#include "symplectic/ordering.hpp"

#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "oracle.hpp"

namespace symplectic {
namespace {

std::vector<int> Values(const std::vector<SignedElement>& elements) {
  std::vector<int> out;
  for (SignedElement e : elements) out.push_back(e.value());
  return out;
}

TEST(OrderingFromTopRow, FullOrderIsTopRowThenNegatedReversal) {
  const auto o = ordering_from_top_row({-2, 1, 3}, GroundSize(3));
  EXPECT_EQ(Values(o.sequence()), (std::vector<int>{-2, 1, 3, -3, -1, 2}));
}

TEST(OrderingFromTopRow, StandardOrdering) {
  const auto o = ordering_from_top_row({3, 2, 1}, GroundSize(3));
  EXPECT_EQ(Values(o.sequence()), (std::vector<int>{3, 2, 1, -1, -2, -3}));
  EXPECT_EQ(o, standard_ordering(GroundSize(3)));
}

TEST(OrderingFromTopRow, Errors) {
  EXPECT_THROW(ordering_from_top_row({1, 1}, GroundSize(2)), InputError);
  EXPECT_THROW(ordering_from_top_row({1, -1}, GroundSize(2)), InputError);
  EXPECT_THROW(ordering_from_top_row({1}, GroundSize(2)), InputError);
  EXPECT_THROW(ordering_from_top_row({1, 3}, GroundSize(2)), InputError);
}

TEST(ParseOrdering, Syntax) {
  EXPECT_EQ(parse_ordering("-2 1 3", GroundSize(3)),
            ordering_from_top_row({-2, 1, 3}, GroundSize(3)));
  EXPECT_THROW(parse_ordering("-2 0 3", GroundSize(3)), ParseError);
  EXPECT_THROW(parse_ordering("-2 1", GroundSize(3)), InputError);
  EXPECT_EQ(format_ordering(parse_ordering("-2 1 3", GroundSize(3))), "-2 1 3");
}

TEST(Compare, Examples) {
  const auto o = ordering_from_top_row({-2, 1, 3}, GroundSize(3));
  EXPECT_EQ(compare(o, SignedElement(3), SignedElement(2)), Comparison::kGreater);
  EXPECT_EQ(compare(o, SignedElement(2), SignedElement(3)), Comparison::kLess);
  for (int x : {-3, -2, -1, 1, 2, 3}) {
    EXPECT_EQ(compare(o, SignedElement(x), SignedElement(x)), Comparison::kEqual);
  }
  const auto standard = standard_ordering(GroundSize(3));
  EXPECT_EQ(compare(standard, SignedElement(-1), SignedElement(-3)),
            Comparison::kGreater);
}

TEST(Compare, StandardOrderingIsIntegerOrder) {
  const auto o = standard_ordering(GroundSize(4));
  for (int x : {-4, -3, -2, -1, 1, 2, 3, 4}) {
    for (int y : {-4, -3, -2, -1, 1, 2, 3, 4}) {
      const Comparison expected = x == y  ? Comparison::kEqual
                                  : x > y ? Comparison::kGreater
                                          : Comparison::kLess;
      EXPECT_EQ(compare(o, SignedElement(x), SignedElement(y)), expected);
    }
  }
}

TEST(AllAdmissibleOrderings, SmallCases) {
  const auto one = all_admissible_orderings(GroundSize(1));
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(Values(one[0].top_row()), std::vector<int>{1});
  EXPECT_EQ(Values(one[1].top_row()), std::vector<int>{-1});

  const auto two = all_admissible_orderings(GroundSize(2));
  ASSERT_EQ(two.size(), 8u);
  // Lexicographic over (magnitude permutation, signs), + before -.
  EXPECT_EQ(Values(two[0].top_row()), (std::vector<int>{1, 2}));
  EXPECT_EQ(Values(two[1].top_row()), (std::vector<int>{1, -2}));
  EXPECT_EQ(Values(two[2].top_row()), (std::vector<int>{-1, 2}));
  EXPECT_EQ(Values(two[3].top_row()), (std::vector<int>{-1, -2}));
  EXPECT_EQ(Values(two[4].top_row()), (std::vector<int>{2, 1}));
  EXPECT_EQ(Values(two[7].top_row()), (std::vector<int>{-2, -1}));
}

TEST(AllAdmissibleOrderingsProperty, CountsDistinctAndMirrorSymmetric) {
  for (int n = 1; n <= 4; ++n) {
    const GroundSize g(n);
    const auto orderings = all_admissible_orderings(g);
    std::uint64_t closed_form = 1;
    for (int i = 1; i <= n; ++i) closed_form *= 2 * i;
    EXPECT_EQ(orderings.size(), closed_form);
    EXPECT_EQ(admissible_ordering_count(g), closed_form);

    std::set<std::vector<int>> rows;
    for (const auto& o : orderings) {
      rows.insert(Values(o.top_row()));
      for (int p = 0; p < 2 * n; ++p) {
        ASSERT_EQ(o.at(p).value(), -o.at(2 * n - 1 - p).value());
        ASSERT_EQ(o.position_of(o.at(p)), p);
      }
    }
    EXPECT_EQ(rows.size(), orderings.size());
  }
}

// The generated orderings are exactly the admissible total orders found by
// filtering all (2n)! permutations of E(n).
TEST(AllAdmissibleOrderingsProperty, MatchesFilteredPermutations) {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::vector<int>> expected;
    for (const auto& order : oracle::admissible_orders(n)) expected.insert(order);
    std::set<std::vector<int>> actual;
    for (const auto& o : all_admissible_orderings(GroundSize(n))) {
      actual.insert(Values(o.sequence()));
    }
    EXPECT_EQ(actual, expected) << "n=" << n;
  }
}

TEST(IsCompatible, Examples) {
  const GroundSize n(3);
  const WeightFunction zero(n);
  for (const auto& o : all_admissible_orderings(n)) {
    EXPECT_TRUE(is_compatible(zero, o));
    for (int k = 0; k <= 6; ++k) EXPECT_TRUE(is_compatible(threshold_weight(o, k), o));
    WeightFunction bottom(n);
    bottom.set(o.at(5), Weight(1));
    EXPECT_FALSE(is_compatible(bottom, o));
  }
}

TEST(ThresholdWeight, Examples) {
  const auto o = ordering_from_top_row({-2, 1, 3}, GroundSize(3));
  const WeightFunction w = threshold_weight(o, 2);
  for (int x : {-3, -2, -1, 1, 2, 3}) {
    const bool top = x == -2 || x == 1;
    EXPECT_EQ(w(SignedElement(x)), Weight(top ? 1 : 0)) << x;
  }
  EXPECT_EQ(threshold_weight(o, 0), WeightFunction(GroundSize(3)));
  const WeightFunction all = threshold_weight(o, 6);
  for (int x : {-3, -2, -1, 1, 2, 3}) EXPECT_EQ(all(SignedElement(x)), Weight(1));
  EXPECT_THROW(threshold_weight(o, -1), InputError);
  EXPECT_THROW(threshold_weight(o, 7), InputError);
}

// threshold(k) - threshold(j) is the indicator of positions j..k-1.
TEST(ThresholdWeightProperty, PrefixNesting) {
  for (const auto& o : all_admissible_orderings(GroundSize(3))) {
    for (int j = 0; j <= 6; ++j) {
      for (int k = j; k <= 6; ++k) {
        const WeightFunction a = threshold_weight(o, k);
        const WeightFunction b = threshold_weight(o, j);
        for (int p = 0; p < 6; ++p) {
          const Weight diff = a(o.at(p)) - b(o.at(p));
          ASSERT_EQ(diff, Weight(p >= j && p < k ? 1 : 0));
        }
      }
    }
  }
}

TEST(RandomCompatibleWeight, DeterministicAndCompatible) {
  const auto o = standard_ordering(GroundSize(3));
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const WeightFunction w = random_compatible_weight(o, seed);
    ASSERT_TRUE(is_compatible(w, o)) << seed;
    for (int x : {-3, -2, -1, 1, 2, 3}) {
      ASSERT_LE(w(SignedElement(x)), Weight(10));
      ASSERT_GE(w(SignedElement(x)), Weight(-10));
    }
  }
  EXPECT_EQ(random_compatible_weight(o, 42), random_compatible_weight(o, 42));
  EXPECT_NE(random_compatible_weight(o, 42), random_compatible_weight(o, 43));
}

TEST(FormatWeight, IntegersAndFractions) {
  EXPECT_EQ(format_weight(Weight(3)), "3");
  EXPECT_EQ(format_weight(Weight(-7, 2)), "-7/2");
  EXPECT_EQ(format_weight(Weight(4, 2)), "2");
}

}  // namespace
}  // namespace symplectic
