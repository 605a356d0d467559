// Geometric views of a rhythm: the chronotonic step curve and the clock
// polygon with its ears.
//
// Polygon areas use the unit circle. A polygon is split into isosceles
// triangles anchored at the centre, one per gap; a gap of g beats on an n-beat
// clock contributes sin(2*pi*g/n)/2. For gaps spanning more than half the
// circle the sine is negative and the signed sum still equals the shoelace
// area of the vertices taken in circular order.

#pragma once

#include <vector>

#include "compas/notation.h"

namespace compas {

struct ChronotonicSegment {
  int start = 0;  // beat position, inclusive
  int end = 0;    // beat position, exclusive

  int width() const { return end - start; }
  /// Each interval is drawn as a square box: height equals width.
  int height() const { return end - start; }

  friend bool operator==(const ChronotonicSegment&, const ChronotonicSegment&) = default;
};

/// Step function on [0, n) with breakpoints {0} ∪ onsets ∪ {n}.
class ChronotonicCurve {
 public:
  ChronotonicCurve(int beats, std::vector<ChronotonicSegment> segments);

  int beats() const { return beats_; }
  const std::vector<ChronotonicSegment>& segments() const { return segments_; }

  /// Height at time t in [0, n). Throws InvalidArgument outside the domain.
  int value_at(double t) const;
  /// Sorted breakpoints including 0 and n.
  std::vector<int> breakpoints() const;
  /// Integral of the curve, the sum of squared widths.
  int integral() const;

 private:
  int beats_;
  std::vector<ChronotonicSegment> segments_;
};

/// A pattern whose first onset sits at a > 0 (anacrusis) gets a leading segment
/// [0, a); the last segment always ends at n.
ChronotonicCurve chronotonic(const RhythmPattern& pattern);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Clock position of a beat on the unit circle: beat 0 at 12 o'clock, beats
/// advancing clockwise.
Point2 clock_point(int position, int beats);

/// Region between the chord joining two consecutive accents and the chain of
/// grid edges it cuts off.
struct Ear {
  int start_onset = 0;
  int end_onset = 0;
  int gap = 0;
  double area = 0.0;
};

struct OnsetPolygon {
  int beats = 0;
  std::vector<int> onsets;
  std::vector<Point2> vertices;  // clockwise from 12 o'clock
  GapProfile gaps;
  std::vector<Ear> ears;
  /// Fewer than three vertices: the polygon has zero area.
  bool degenerate = false;
  /// Some gap spans more than half the circle (centre outside the polygon).
  bool has_reflex_gap = false;

  double area() const;
  double perimeter() const;
};

OnsetPolygon polygon(const RhythmPattern& pattern);

/// Sum of sin(2*pi*g/n)/2 over the gaps. Throws InvalidArgument unless the
/// gaps are positive and sum to `beats`.
double polygon_area(const GapProfile& gaps, int beats);

/// Sum of chord lengths 2*sin(pi*g/n). Same preconditions as polygon_area.
double polygon_perimeter(const GapProfile& gaps, int beats);

/// g*sin(2*pi/n)/2 - sin(2*pi*g/n)/2, zero for g = 1.
double ear_area(int gap, int beats);

/// Area of the regular polygon on all n clock points.
double regular_polygon_area(int beats);

/// Ear areas in vertex order. Throws InvalidArgument for fewer than 2 vertices.
std::vector<double> ear_areas(const OnsetPolygon& polygon);

}  // namespace compas
