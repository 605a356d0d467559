#include "compas/geometry.h"

#include <cmath>
#include <numbers>
#include <string>

#include "compas/errors.h"

namespace compas {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_gaps(const GapProfile& gaps, int beats) {
  if (beats < 1) throw InvalidArgument("cycle length must be positive");
  for (int g : gaps.gaps) {
    if (g < 1) throw InvalidArgument("gaps must be positive");
  }
  if (gaps.total() != beats) {
    throw InvalidArgument("gaps sum to " + std::to_string(gaps.total()) + ", expected " +
                          std::to_string(beats));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Chronotonic curve
// ---------------------------------------------------------------------------

ChronotonicCurve::ChronotonicCurve(int beats, std::vector<ChronotonicSegment> segments)
    : beats_(beats), segments_(std::move(segments)) {
  int cursor = 0;
  for (const auto& s : segments_) {
    if (s.start != cursor || s.end <= s.start) {
      throw InvalidArgument("chronotonic segments must tile [0, n) in order");
    }
    cursor = s.end;
  }
  if (cursor != beats_) throw InvalidArgument("chronotonic segments must end at n");
}

int ChronotonicCurve::value_at(double t) const {
  if (!(t >= 0.0) || !(t < beats_)) throw InvalidArgument("time outside [0, n)");
  for (const auto& s : segments_) {
    if (t < s.end) return s.height();
  }
  return segments_.back().height();
}

std::vector<int> ChronotonicCurve::breakpoints() const {
  std::vector<int> out;
  out.reserve(segments_.size() + 1);
  for (const auto& s : segments_) out.push_back(s.start);
  out.push_back(beats_);
  return out;
}

int ChronotonicCurve::integral() const {
  int sum = 0;
  for (const auto& s : segments_) sum += s.width() * s.height();
  return sum;
}

ChronotonicCurve chronotonic(const RhythmPattern& pattern) {
  std::vector<ChronotonicSegment> segments;
  int prev = 0;
  for (int pos : pattern.onsets()) {
    if (pos > prev) segments.push_back({prev, pos});
    prev = pos;
  }
  segments.push_back({prev, pattern.beats()});
  return ChronotonicCurve(pattern.beats(), std::move(segments));
}

// ---------------------------------------------------------------------------
// Clock polygon
// ---------------------------------------------------------------------------

Point2 clock_point(int position, int beats) {
  const double theta = std::numbers::pi / 2.0 - kTwoPi * position / beats;
  return {std::cos(theta), std::sin(theta)};
}

double polygon_area(const GapProfile& gaps, int beats) {
  check_gaps(gaps, beats);
  if (gaps.gaps.size() < 3) return 0.0;
  double sum = 0.0;
  for (int g : gaps.gaps) sum += std::sin(kTwoPi * g / beats);
  return sum / 2.0;
}

double polygon_perimeter(const GapProfile& gaps, int beats) {
  check_gaps(gaps, beats);
  double sum = 0.0;
  for (int g : gaps.gaps) sum += 2.0 * std::sin(std::numbers::pi * g / beats);
  return sum;
}

double ear_area(int gap, int beats) {
  if (beats < 1 || gap < 1 || gap > beats) throw InvalidArgument("ear gap outside [1, n]");
  if (gap == 1) return 0.0;
  return (gap * std::sin(kTwoPi / beats) - std::sin(kTwoPi * gap / beats)) / 2.0;
}

double regular_polygon_area(int beats) {
  if (beats < 3) return 0.0;
  return beats * std::sin(kTwoPi / beats) / 2.0;
}

double OnsetPolygon::area() const { return polygon_area(gaps, beats); }

double OnsetPolygon::perimeter() const { return polygon_perimeter(gaps, beats); }

OnsetPolygon polygon(const RhythmPattern& pattern) {
  OnsetPolygon poly;
  poly.beats = pattern.beats();
  poly.onsets = pattern.onsets();
  poly.gaps = gap_profile(pattern);
  poly.degenerate = pattern.size() < 3;
  for (int pos : pattern.onsets()) poly.vertices.push_back(clock_point(pos, pattern.beats()));
  const std::size_t k = poly.onsets.size();
  for (std::size_t i = 0; i < k; ++i) {
    int g = poly.gaps.gaps[i];
    if (2 * g > pattern.beats()) poly.has_reflex_gap = true;
    if (k >= 2) {
      poly.ears.push_back({poly.onsets[i], poly.onsets[(i + 1) % k], g, ear_area(g, poly.beats)});
    }
  }
  return poly;
}

std::vector<double> ear_areas(const OnsetPolygon& polygon) {
  if (polygon.onsets.size() < 2) throw InvalidArgument("ears need at least two vertices");
  std::vector<double> out;
  out.reserve(polygon.ears.size());
  for (const auto& ear : polygon.ears) out.push_back(ear.area);
  return out;
}

}  // namespace compas
