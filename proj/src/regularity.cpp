#include "compas/regularity.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "compas/errors.h"
#include "compas/geometry.h"
#include "text_util.h"

namespace compas {

std::string_view criterion_name(RegularityCriterion criterion) {
  switch (criterion) {
    case RegularityCriterion::max_area: return "max-area";
    case RegularityCriterion::max_perimeter: return "max-perimeter";
    case RegularityCriterion::min_sum_ears: return "min-sum-ears";
    case RegularityCriterion::min_max_ear: return "min-max-ear";
  }
  return "max-area";
}

RegularityCriterion parse_criterion_name(std::string_view text) {
  std::string key = detail::lower(detail::trim(text));
  std::replace(key.begin(), key.end(), '_', '-');
  for (auto c : {RegularityCriterion::max_area, RegularityCriterion::max_perimeter,
                 RegularityCriterion::min_sum_ears, RegularityCriterion::min_max_ear}) {
    if (key == criterion_name(c)) return c;
  }
  throw ParseError("unknown criterion '" + std::string(text) + "'");
}

bool maximizes(RegularityCriterion criterion) {
  return criterion == RegularityCriterion::max_area ||
         criterion == RegularityCriterion::max_perimeter;
}

double criterion_value(const GapProfile& gaps, int beats, RegularityCriterion criterion) {
  switch (criterion) {
    case RegularityCriterion::max_area: return polygon_area(gaps, beats);
    case RegularityCriterion::max_perimeter: return polygon_perimeter(gaps, beats);
    case RegularityCriterion::min_sum_ears: {
      double sum = 0.0;
      for (int g : gaps.gaps) sum += ear_area(g, beats);
      return sum;
    }
    case RegularityCriterion::min_max_ear: return gaps.max_gap();
  }
  return 0.0;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    const auto factor = static_cast<std::uint64_t>(n - i);
    if (r > kMax / factor) return kMax;
    r = r * factor / static_cast<std::uint64_t>(i + 1);
  }
  return r;
}

namespace {

void check_size(int beats, int size, int min_size) {
  if (beats < 1) throw InvalidArgument("n must be positive");
  if (size > beats) {
    throw InvalidArgument("k = " + std::to_string(size) + " exceeds n = " + std::to_string(beats));
  }
  if (size < min_size) {
    throw InvalidArgument("k must be at least " + std::to_string(min_size));
  }
}

GapProfile gaps_of(const std::vector<int>& subset, int beats) {
  GapProfile profile;
  profile.gaps.reserve(subset.size());
  for (std::size_t i = 0; i + 1 < subset.size(); ++i) {
    profile.gaps.push_back(subset[i + 1] - subset[i]);
  }
  profile.gaps.push_back(beats - subset.back() + subset.front());
  return profile;
}

// Advances `subset` to the next k-combination of [0, n) in lexicographic order.
bool next_combination(std::vector<int>& subset, int beats) {
  const int k = static_cast<int>(subset.size());
  int i = k - 1;
  while (i >= 0 && subset[static_cast<std::size_t>(i)] == beats - k + i) --i;
  if (i < 0) return false;
  ++subset[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) {
    subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }
  return true;
}

}  // namespace

SelectionResult best_selection(int beats, int size, RegularityCriterion criterion,
                               std::uint64_t budget) {
  check_size(beats, size, 3);
  const std::uint64_t total = binomial(beats, size);
  if (total > budget) {
    throw BudgetExceeded("C(" + std::to_string(beats) + ", " + std::to_string(size) +
                         ") subsets exceed the enumeration budget of " + std::to_string(budget));
  }

  SelectionResult result;
  result.criterion = criterion;
  result.beats = beats;
  result.size = size;

  const bool maximize = maximizes(criterion);
  bool have_best = false;
  double best = 0.0;
  std::vector<int> subset(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) subset[static_cast<std::size_t>(i)] = i;

  do {
    ++result.examined;
    const double value = criterion_value(gaps_of(subset, beats), beats, criterion);
    const double improvement = maximize ? value - best : best - value;
    if (!have_best || improvement > kValueTolerance) {
      have_best = true;
      best = value;
      result.optimizers.clear();
      result.optimizers.push_back(subset);
    } else if (std::abs(improvement) <= kValueTolerance) {
      result.optimizers.push_back(subset);
    }
  } while (next_combination(subset, beats));

  result.value = best;
  std::map<std::vector<int>, std::vector<std::vector<int>>, std::greater<>> grouped;
  for (const auto& opt : result.optimizers) {
    grouped[gaps_of(opt, beats).multiset()].push_back(opt);
  }
  for (auto& [multiset, sets] : grouped) result.families.push_back({multiset, std::move(sets)});
  return result;
}

BalancedCharacterization characterize_optimal(int beats, int size,
                                              RegularityCriterion criterion,
                                              std::uint64_t budget) {
  check_size(beats, size, 1);
  BalancedCharacterization out;
  out.quotient = beats / size;
  out.remainder = beats % size;
  out.gap_multiset.assign(static_cast<std::size_t>(out.remainder), out.quotient + 1);
  out.gap_multiset.insert(out.gap_multiset.end(), static_cast<std::size_t>(size - out.remainder),
                          out.quotient);
  out.optimal_max_gap = out.quotient + (out.remainder > 0 ? 1 : 0);

  if (size < 3 || binomial(beats, size) > budget) return out;
  SelectionResult exhaustive = best_selection(beats, size, criterion, budget);
  if (criterion == RegularityCriterion::min_max_ear) {
    out.verified = static_cast<int>(exhaustive.value) == out.optimal_max_gap;
  } else {
    out.verified = std::all_of(exhaustive.families.begin(), exhaustive.families.end(),
                               [&](const OptimalFamily& f) {
                                 return f.gap_multiset == out.gap_multiset;
                               });
  }
  return out;
}

OptimalityReport is_optimal(const RhythmPattern& pattern, RegularityCriterion criterion,
                            std::uint64_t budget) {
  SelectionResult best =
      best_selection(pattern.beats(), static_cast<int>(pattern.size()), criterion, budget);
  OptimalityReport report;
  report.value = criterion_value(gap_profile(pattern), pattern.beats(), criterion);
  report.optimum = best.value;
  report.shortfall = std::max(0.0, maximizes(criterion) ? best.value - report.value
                                                        : report.value - best.value);
  report.optimal = report.shortfall <= kValueTolerance;
  if (report.optimal) report.shortfall = 0.0;
  return report;
}

}  // namespace compas
