#include "compas/regularity.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "compas/errors.h"
#include "compas/geometry.h"

namespace compas {
namespace {

using Set = std::vector<int>;

bool contains(const SelectionResult& r, const RhythmPattern& p) {
  return std::find(r.optimizers.begin(), r.optimizers.end(), p.onsets()) != r.optimizers.end();
}

// Gap multiset of a subset given as a 12-bit mask, computed directly.
std::vector<int> mask_multiset(unsigned mask, int n) {
  std::vector<int> pos;
  for (int b = 0; b < n; ++b) {
    if (mask & (1u << b)) pos.push_back(b);
  }
  std::vector<int> gaps;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    gaps.push_back(i + 1 < pos.size() ? pos[i + 1] - pos[i] : n - pos[i] + pos[0]);
  }
  std::sort(gaps.rbegin(), gaps.rend());
  return gaps;
}

TEST(BinomialTest, Values) {
  EXPECT_EQ(binomial(12, 5), 792u);
  EXPECT_EQ(binomial(16, 8), 12870u);
  EXPECT_EQ(binomial(5, 7), 0u);
  EXPECT_EQ(binomial(200, 100), std::numeric_limits<std::uint64_t>::max());
}

TEST(CriterionNameTest, RoundTrip) {
  for (auto c : {RegularityCriterion::max_area, RegularityCriterion::max_perimeter,
                 RegularityCriterion::min_sum_ears, RegularityCriterion::min_max_ear}) {
    EXPECT_EQ(parse_criterion_name(criterion_name(c)), c);
  }
  EXPECT_EQ(parse_criterion_name("MIN_MAX_EAR"), RegularityCriterion::min_max_ear);
  EXPECT_THROW(parse_criterion_name("sum"), ParseError);
}

TEST(BestSelectionTest, TwelveFiveMaxArea) {
  SelectionResult r = best_selection(12, 5, RegularityCriterion::max_area);
  EXPECT_EQ(r.examined, 792u);
  ASSERT_EQ(r.families.size(), 1u);
  EXPECT_EQ(r.families[0].gap_multiset, (Set{3, 3, 2, 2, 2}));
  EXPECT_NEAR(r.value, 1.0 + 3.0 * std::sqrt(3.0) / 4.0, 1e-12);
  EXPECT_TRUE(contains(r, canonical_pattern("solea")));
  EXPECT_TRUE(contains(r, canonical_pattern("seguiriya")));
  EXPECT_TRUE(contains(r, canonical_pattern("guajira")));
  EXPECT_FALSE(contains(r, canonical_pattern("buleria")));
  EXPECT_TRUE(std::is_sorted(r.optimizers.begin(), r.optimizers.end()));
}

// Regression value: the number of 5-subsets of 12 points with gap multiset
// {3,3,2,2,2}, counted over all 4096 bit masks.
TEST(BestSelectionTest, TwelveFiveOptimizerCount) {
  std::size_t count = 0;
  for (unsigned mask = 0; mask < 4096; ++mask) {
    if (__builtin_popcount(mask) == 5 && mask_multiset(mask, 12) == Set{3, 3, 2, 2, 2}) ++count;
  }
  EXPECT_EQ(count, 24u);
  EXPECT_EQ(best_selection(12, 5, RegularityCriterion::max_area).count(), count);
}

TEST(BestSelectionTest, TwelveFourIsFandango) {
  SelectionResult r = best_selection(12, 4, RegularityCriterion::max_area);
  ASSERT_EQ(r.families.size(), 1u);
  EXPECT_EQ(r.families[0].gap_multiset, (Set{3, 3, 3, 3}));
  EXPECT_EQ(r.count(), 3u);
  EXPECT_TRUE(contains(r, canonical_pattern("fandango")));
}

TEST(BestSelectionTest, TwelveFiveMinMaxEar) {
  SelectionResult r = best_selection(12, 5, RegularityCriterion::min_max_ear);
  EXPECT_EQ(r.value, 3.0);
  // Two 3s and three 2s are optimal, and so is any other profile whose
  // longest gap is 3.
  ASSERT_EQ(r.families.size(), 2u);
  EXPECT_EQ(r.families[0].gap_multiset, (Set{3, 3, 3, 2, 1}));
  EXPECT_EQ(r.families[1].gap_multiset, (Set{3, 3, 2, 2, 2}));
  EXPECT_EQ(r.families[1].onset_sets.size(), 24u);
  EXPECT_TRUE(contains(r, canonical_pattern("solea")));
  EXPECT_FALSE(contains(r, canonical_pattern("buleria")));
}

TEST(BestSelectionTest, Errors) {
  EXPECT_THROW(best_selection(12, 13, RegularityCriterion::max_area), InvalidArgument);
  EXPECT_THROW(best_selection(12, 2, RegularityCriterion::max_area), InvalidArgument);
  EXPECT_THROW(best_selection(40, 20, RegularityCriterion::max_area), BudgetExceeded);
  EXPECT_THROW(best_selection(12, 5, RegularityCriterion::max_area, 100), BudgetExceeded);
}

TEST(CharacterizeTest, Examples) {
  BalancedCharacterization c = characterize_optimal(12, 5, RegularityCriterion::min_max_ear);
  EXPECT_EQ(c.quotient, 2);
  EXPECT_EQ(c.remainder, 2);
  EXPECT_EQ(c.gap_multiset, (Set{3, 3, 2, 2, 2}));
  EXPECT_EQ(c.optimal_max_gap, 3);
  EXPECT_TRUE(c.verified);

  EXPECT_EQ(characterize_optimal(12, 4, RegularityCriterion::max_area).gap_multiset,
            (Set{3, 3, 3, 3}));

  BalancedCharacterization seven = characterize_optimal(7, 3, RegularityCriterion::max_area);
  EXPECT_EQ(seven.gap_multiset, (Set{3, 2, 2}));
  EXPECT_TRUE(seven.verified);
  SelectionResult exhaustive = best_selection(7, 3, RegularityCriterion::max_area);
  ASSERT_EQ(exhaustive.families.size(), 1u);
  EXPECT_EQ(exhaustive.families[0].gap_multiset, (Set{3, 2, 2}));
}

TEST(CharacterizeTest, BeyondBudgetIsUnverified) {
  BalancedCharacterization c = characterize_optimal(100, 40, RegularityCriterion::max_area);
  EXPECT_FALSE(c.verified);
  EXPECT_EQ(c.quotient, 2);
  EXPECT_EQ(c.remainder, 20);
  EXPECT_EQ(c.optimal_max_gap, 3);
  EXPECT_THROW(characterize_optimal(5, 6, RegularityCriterion::max_area), InvalidArgument);
}

TEST(IsOptimalTest, Examples) {
  OptimalityReport solea = is_optimal(canonical_pattern("solea"), RegularityCriterion::max_area);
  EXPECT_TRUE(solea.optimal);
  EXPECT_EQ(solea.shortfall, 0.0);

  OptimalityReport buleria =
      is_optimal(canonical_pattern("buleria"), RegularityCriterion::max_area);
  EXPECT_FALSE(buleria.optimal);
  EXPECT_NEAR(buleria.shortfall, 0.25, 1e-12);

  OptimalityReport minmax =
      is_optimal(canonical_pattern("buleria"), RegularityCriterion::min_max_ear);
  EXPECT_FALSE(minmax.optimal);
  EXPECT_EQ(minmax.value, 4.0);
  EXPECT_EQ(minmax.optimum, 3.0);
}

// Exhaustive sweep over every (n, k) with 3 <= k <= n <= 16.
TEST(RegularityPropertyTest, StructuralClaimsUpToSixteen) {
  for (int n = 3; n <= 16; ++n) {
    for (int k = 3; k <= n; ++k) {
      SelectionResult area = best_selection(n, k, RegularityCriterion::max_area);
      SelectionResult ears = best_selection(n, k, RegularityCriterion::min_sum_ears);
      SelectionResult perim = best_selection(n, k, RegularityCriterion::max_perimeter);
      SelectionResult minmax = best_selection(n, k, RegularityCriterion::min_max_ear);
      BalancedCharacterization balanced =
          characterize_optimal(n, k, RegularityCriterion::max_area);

      ASSERT_EQ(area.optimizers, ears.optimizers) << n << "," << k;
      ASSERT_NEAR(area.value + ears.value, regular_polygon_area(n), 1e-9);
      ASSERT_EQ(area.families.size(), 1u);
      ASSERT_EQ(area.families[0].gap_multiset, balanced.gap_multiset) << n << "," << k;
      ASSERT_EQ(perim.families.size(), 1u);
      ASSERT_EQ(perim.families[0].gap_multiset, balanced.gap_multiset) << n << "," << k;
      ASSERT_EQ(static_cast<int>(minmax.value), (n + k - 1) / k) << n << "," << k;
      ASSERT_TRUE(balanced.verified);
    }
  }
}

}  // namespace
}  // namespace compas
