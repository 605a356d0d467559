// Step-function approximation of a pitch contour.
//
// Given points (t_i, y_i) and a tolerance alpha, find a step function E with
// |E(t_i) - y_i| <= alpha for every point and as few steps as possible.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "compas/geometry.h"
#include "compas/notation.h"

namespace compas {

struct Step {
  double start = 0.0;
  double end = 0.0;
  double value = 0.0;
  /// Indices [first, last] of the source points covered by this step.
  std::size_t first = 0;
  std::size_t last = 0;
};

class StepApproximation {
 public:
  /// Throws InvalidArgument unless the steps are non-empty and tile
  /// [steps.front().start, steps.back().end] without gaps or overlaps.
  StepApproximation(std::vector<Step> steps, double alpha, Unit unit, std::size_t source_size);

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t piece_count() const { return steps_.size(); }
  double alpha() const { return alpha_; }
  Unit unit() const { return unit_; }
  std::size_t source_size() const { return source_size_; }
  double domain_start() const { return steps_.front().start; }
  double domain_end() const { return steps_.back().end; }

  /// Value at time t. Steps are half-open except the last, which includes its
  /// end. Throws InvalidArgument outside the domain.
  double operator()(double t) const;

 private:
  std::vector<Step> steps_;
  double alpha_;
  Unit unit_;
  std::size_t source_size_;
};

/// Work counters from a greedy sweep, for checking the linear-time contract.
struct SweepStats {
  std::size_t interval_updates = 0;
};

/// Left-to-right sweep keeping the intersection of the feasible value
/// intervals [y_i - alpha, y_i + alpha]; a new step starts when the next
/// interval misses the running intersection (touching counts as meeting).
/// Step values are the midpoints of the final intersections. Step boundaries
/// sit halfway between the last point of one run and the first of the next;
/// the outer boundaries are t_1 and t_n. Throws InvalidArgument for negative
/// or non-finite alpha.
StepApproximation segment_greedy(const TimedPitchSequence& melody, double alpha,
                                 SweepStats* stats = nullptr);

inline constexpr std::size_t kDefaultOracleBudget = 2000;

/// Quadratic dynamic program over break positions that minimizes the piece
/// count directly; used to certify the sweep. Throws BudgetExceeded when the
/// melody has more than `budget` points.
StepApproximation segment_oracle(const TimedPitchSequence& melody, double alpha,
                                 std::size_t budget = kDefaultOracleBudget);

/// Integral of |f - g| over the common time domain.
double step_area_distance(const StepApproximation& f, const StepApproximation& g);

/// Mean absolute difference over the common domain: step_area_distance
/// divided by its length. Throws InvalidArgument when the domains do not
/// overlap on a set of positive length or when the units differ.
double step_distance(const StepApproximation& f, const StepApproximation& g);

struct EncodedStep {
  double duration = 0.0;
  double value = 0.0;

  friend bool operator==(const EncodedStep&, const EncodedStep&) = default;
};

/// The melody as an ordered list of (duration, value) steps.
std::vector<EncodedStep> encode_melody(const StepApproximation& approximation);

/// A chronotonic curve viewed as a step function (unit: beats), so the
/// melody distances can be applied to rhythms.
StepApproximation to_step_function(const ChronotonicCurve& curve);

/// "t_start,t_end,value" rows with a header line.
std::string steps_to_csv(const StepApproximation& approximation);

}  // namespace compas
