// Choosing k of n equidistant clock points to maximize regularity.
//
// Every criterion depends only on the gap multiset of a selection, so the
// exhaustive search groups its optimizers by multiset.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "compas/notation.h"

namespace compas {

enum class RegularityCriterion {
  max_area,       // largest polygon area
  max_perimeter,  // largest sum of consecutive chord lengths
  min_sum_ears,   // smallest total ear area
  min_max_ear,    // smallest largest ear, reported as the longest gap
};

std::string_view criterion_name(RegularityCriterion criterion);
/// Accepts "max-area", "max-perimeter", "min-sum-ears", "min-max-ear"
/// (underscores also accepted). Throws ParseError.
RegularityCriterion parse_criterion_name(std::string_view text);

/// True for criteria where larger values are better.
bool maximizes(RegularityCriterion criterion);

/// Objective value of a gap profile. For min_max_ear this is the longest gap,
/// which orders selections exactly as the largest ear area does.
double criterion_value(const GapProfile& gaps, int beats, RegularityCriterion criterion);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;
/// Values closer than this are treated as ties.
inline constexpr double kValueTolerance = 1e-9;

/// Saturating binomial coefficient.
std::uint64_t binomial(int n, int k);

struct OptimalFamily {
  std::vector<int> gap_multiset;           // descending
  std::vector<std::vector<int>> onset_sets;  // 0-based, lexicographic
};

struct SelectionResult {
  RegularityCriterion criterion = RegularityCriterion::max_area;
  int beats = 0;
  int size = 0;
  double value = 0.0;
  std::uint64_t examined = 0;
  /// Every optimal onset set, lexicographic order.
  std::vector<std::vector<int>> optimizers;
  /// Optimizers grouped by gap multiset, families in descending multiset order.
  std::vector<OptimalFamily> families;

  std::size_t count() const { return optimizers.size(); }
};

/// Exhaustive optimum over all C(n, k) subsets. Throws InvalidArgument unless
/// 3 <= k <= n, BudgetExceeded when C(n, k) exceeds `budget`.
SelectionResult best_selection(int beats, int size, RegularityCriterion criterion,
                               std::uint64_t budget = kDefaultEnumerationBudget);

/// Balanced gap multiset: n = k*q + r gives r gaps of q+1 and k-r gaps of q.
struct BalancedCharacterization {
  int quotient = 0;
  int remainder = 0;
  std::vector<int> gap_multiset;  // descending
  /// ceil(n/k), the pigeonhole lower bound on the longest gap.
  int optimal_max_gap = 0;
  /// True when an exhaustive search within budget confirmed the claim: the
  /// min-max optimum equals optimal_max_gap, or for the other criteria every
  /// optimizer has the balanced multiset.
  bool verified = false;
};

/// Throws InvalidArgument unless 1 <= k <= n.
BalancedCharacterization characterize_optimal(int beats, int size,
                                              RegularityCriterion criterion,
                                              std::uint64_t budget = kDefaultEnumerationBudget);

struct OptimalityReport {
  bool optimal = false;
  double value = 0.0;
  double optimum = 0.0;
  /// Non-negative distance from the optimum in the criterion's direction.
  double shortfall = 0.0;
};

/// Compares a pattern against the exhaustive optimum for its (n, k).
OptimalityReport is_optimal(const RhythmPattern& pattern, RegularityCriterion criterion,
                            std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace compas
