// Rhythm and melody domain types plus their textual notations.
//
// Onset positions are 0-based everywhere inside the library. Text formats that
// list positions (onset_list) are 1-based, matching the numerical notation used
// in dance schools ("[1 2 3 4 ...]" with the accented beats in bold).

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace compas {

/// Cyclic binary accent pattern: `beats` pulses per cycle, accents at `onsets`.
class RhythmPattern {
 public:
  /// Throws InvalidArgument unless 1 <= |onsets| <= beats, all positions lie in
  /// [0, beats) and are distinct. Onsets are sorted on construction.
  RhythmPattern(int beats, std::vector<int> onsets, std::string name = {});

  int beats() const { return beats_; }
  const std::vector<int>& onsets() const { return onsets_; }
  std::size_t size() const { return onsets_.size(); }
  const std::string& name() const { return name_; }

  bool accented(int position) const;

  /// Same onsets, new label.
  RhythmPattern renamed(std::string name) const;

  /// Shifts every onset by `shift` beats modulo the cycle.
  RhythmPattern rotated(int shift) const;

  /// Equality ignores the label: two patterns are equal when they accent the
  /// same beats of the same cycle.
  friend bool operator==(const RhythmPattern& a, const RhythmPattern& b) {
    return a.beats_ == b.beats_ && a.onsets_ == b.onsets_;
  }

 private:
  int beats_;
  std::vector<int> onsets_;
  std::string name_;
};

/// Cyclic inter-onset gaps, anchored at the pattern's first onset.
struct GapProfile {
  std::vector<int> gaps;

  int total() const;
  /// Longest gap (the pattern "length" used by the min-max ear criterion).
  int max_gap() const;
  /// Gaps sorted in descending order, e.g. {3,3,2,2,2}.
  std::vector<int> multiset() const;
  /// Gaps rotated so that they start at onset `start`.
  GapProfile rotated(std::size_t start) const;

  friend bool operator==(const GapProfile&, const GapProfile&) = default;
};

GapProfile gap_profile(const RhythmPattern& pattern);

/// Textual rhythm notations.
///   binary     "001001010101"   one 0/1 per beat
///   grid       "..x..x.x.x.x"   one x (accent) or . (weak beat) per beat
///   onset_list "3,6,8,10,12"    1-based accented beats, cycle length supplied
enum class RhythmFormat { binary, onset_list, grid };

std::string_view format_name(RhythmFormat format);
/// Accepts "binary", "onset_list" (or "onsets"), "grid". Throws ParseError.
RhythmFormat parse_format_name(std::string_view text);

inline constexpr int kDefaultBeats = 12;

/// Throws ParseError on illegal characters, duplicates, out-of-range
/// positions, or when no beat is accented. `beats` is used by onset_list only.
RhythmPattern parse_rhythm(std::string_view text, RhythmFormat format,
                           int beats = kDefaultBeats, std::string name = {});

std::string serialize_rhythm(const RhythmPattern& pattern, RhythmFormat format);

/// The five 12-beat ternary patterns, in the order solea, buleria, seguiriya,
/// guajira, fandango.
const std::vector<RhythmPattern>& canonical_patterns();

/// Looks a canonical pattern up by its ASCII name. Throws InvalidArgument.
const RhythmPattern& canonical_pattern(std::string_view name);

// ---------------------------------------------------------------------------
// Melodies
// ---------------------------------------------------------------------------

/// Unit attached to pitch values. Never converted implicitly. `beats` is only
/// used for step functions derived from chronotonic curves.
enum class Unit { hertz, cents, beats };

std::string_view unit_name(Unit unit);
/// Accepts "hz"/"hertz", "cents", "beats" in any case. Throws ParseError.
Unit parse_unit_name(std::string_view text);

struct PitchPoint {
  double time = 0.0;   // seconds
  double pitch = 0.0;  // in the owning sequence's unit

  friend bool operator==(const PitchPoint&, const PitchPoint&) = default;
};

/// Melody as ordered (time, pitch) pairs with strictly increasing time.
class TimedPitchSequence {
 public:
  /// Throws InvalidArgument on an empty list, non-increasing or non-finite
  /// times, non-finite pitches, or a non-pitch unit.
  explicit TimedPitchSequence(std::vector<PitchPoint> points, Unit unit = Unit::hertz);

  const std::vector<PitchPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  Unit unit() const { return unit_; }

  friend bool operator==(const TimedPitchSequence&, const TimedPitchSequence&) = default;

 private:
  std::vector<PitchPoint> points_;
  Unit unit_;
};

struct PitchInterval {
  double duration = 0.0;  // > 0
  double step = 0.0;      // signed pitch difference

  friend bool operator==(const PitchInterval&, const PitchInterval&) = default;
};

/// Translation-invariant form of a melody: consecutive (dt, dpitch) pairs.
class IntervalSequence {
 public:
  /// Throws InvalidArgument if any duration is not strictly positive.
  IntervalSequence(std::vector<PitchInterval> intervals, Unit unit);

  const std::vector<PitchInterval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  Unit unit() const { return unit_; }

  friend bool operator==(const IntervalSequence&, const IntervalSequence&) = default;

 private:
  std::vector<PitchInterval> intervals_;
  Unit unit_;
};

/// Throws InvalidArgument for fewer than two points.
IntervalSequence to_intervals(const TimedPitchSequence& melody);

/// Rebuilds the melody starting at `anchor` (the original first point).
TimedPitchSequence from_intervals(const IntervalSequence& intervals, PitchPoint anchor);

/// Reads "time,pitch" lines. A first line that does not parse as two numbers is
/// treated as a header; blank lines and lines starting with '#' are skipped.
/// Throws ParseError ("empty", "non-monotone time", unparsable numbers).
TimedPitchSequence parse_pitch_track(std::istream& in, Unit unit = Unit::hertz);
TimedPitchSequence parse_pitch_track(std::string_view text, Unit unit = Unit::hertz);

std::string serialize_pitch_track(const TimedPitchSequence& melody);

}  // namespace compas
