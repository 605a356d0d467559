// Rhythm distances and labelled distance matrices.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "compas/notation.h"

namespace compas {

/// Area between the two chronotonic curves over [0, n). Integer-valued.
/// Throws LengthMismatch when the cycle lengths differ.
double chronotonic_distance(const RhythmPattern& a, const RhythmPattern& b);

/// Number of beats whose accent status differs.
int hamming_distance(const RhythmPattern& a, const RhythmPattern& b);

/// Minimum number of adjacent swaps turning `a` into `b` when both have the
/// same number of accents: the L1 distance between sorted onset positions.
/// Throws InvalidArgument if the onset counts differ.
int permutation_distance_equal(const RhythmPattern& a, const RhythmPattern& b);

struct AccentMove {
  int from = 0;  // onset of the pattern with more accents
  int to = 0;    // onset of the pattern with fewer accents

  friend bool operator==(const AccentMove&, const AccentMove&) = default;
};

struct UnequalPermutation {
  int distance = 0;
  /// True when `a` (the first argument) is the pattern with more accents.
  bool first_is_source = true;
  /// One optimal assignment, in source order.
  std::vector<AccentMove> moves;
};

/// Transport cost from the pattern with more accents onto the one with fewer.
/// Every source accent moves to one target accent, every target receives at
/// least one, assignments never cross, and nothing wraps past the end of the
/// cycle. Solved by dynamic programming over (source, target) index pairs.
/// Throws InvalidArgument if the counts are equal.
UnequalPermutation permutation_distance_unequal(const RhythmPattern& a, const RhythmPattern& b);

/// Dispatches to the equal or unequal variant.
int permutation_distance(const RhythmPattern& a, const RhythmPattern& b);

enum class Metric { chronotonic, permutation, hamming };

std::string_view metric_name(Metric metric);
Metric parse_metric_name(std::string_view text);

/// Symmetric, non-negative, zero-diagonal matrix with row/column labels.
class DistanceMatrix {
 public:
  /// `values` is row-major, labels.size() squared entries. Throws
  /// InvalidArgument on asymmetric, negative, non-finite or non-zero diagonal
  /// input.
  DistanceMatrix(std::vector<std::string> labels, std::vector<double> values);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  double at(std::size_t i, std::size_t j) const { return values_[i * labels_.size() + j]; }

  /// Per-column sum, the "nearness" summary row.
  std::vector<double> column_sums() const;
  /// Per-column maximum.
  std::vector<double> column_max() const;

  struct TriangleViolation {
    std::size_t i, j, k;  // d(i,k) > d(i,j) + d(j,k)
    double excess;
  };
  /// Diagnostic only; the measures are not required to be metrics.
  std::vector<TriangleViolation> triangle_violations(double tolerance = 1e-9) const;

 private:
  std::vector<std::string> labels_;
  std::vector<double> values_;
};

/// Pairwise matrix in input order. All patterns must share one cycle length;
/// errors name the offending pair. Unnamed patterns are labelled p1, p2, ...
DistanceMatrix distance_matrix(const std::vector<RhythmPattern>& patterns, Metric metric);

/// Integers print without a decimal point, anything else with six decimals.
std::string format_distance(double value);

/// CSV with a header row of labels, one row per label, then "sum" and "max".
std::string matrix_to_csv(const DistanceMatrix& matrix);
/// Aligned plain-text table with the same rows.
std::string matrix_to_text(const DistanceMatrix& matrix);
/// Reads the CSV layout written by matrix_to_csv; summary rows are ignored.
DistanceMatrix parse_matrix_csv(std::istream& in);
DistanceMatrix parse_matrix_csv(std::string_view text);

}  // namespace compas
