#include "compas/notation.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

#include "compas/errors.h"
#include "text_util.h"

namespace compas {

// ---------------------------------------------------------------------------
// RhythmPattern
// ---------------------------------------------------------------------------

RhythmPattern::RhythmPattern(int beats, std::vector<int> onsets, std::string name)
    : beats_(beats), onsets_(std::move(onsets)), name_(std::move(name)) {
  if (beats_ < 1) {
    throw InvalidArgument("cycle length must be positive, got " + std::to_string(beats_));
  }
  if (onsets_.empty()) throw InvalidArgument("pattern has no onsets");
  std::sort(onsets_.begin(), onsets_.end());
  for (std::size_t i = 0; i < onsets_.size(); ++i) {
    int pos = onsets_[i];
    if (pos < 0 || pos >= beats_) {
      throw InvalidArgument("onset " + std::to_string(pos) + " outside [0, " +
                            std::to_string(beats_) + ")");
    }
    if (i > 0 && onsets_[i - 1] == pos) {
      throw InvalidArgument("duplicate onset " + std::to_string(pos));
    }
  }
}

bool RhythmPattern::accented(int position) const {
  return std::binary_search(onsets_.begin(), onsets_.end(), position);
}

RhythmPattern RhythmPattern::renamed(std::string name) const {
  RhythmPattern copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

RhythmPattern RhythmPattern::rotated(int shift) const {
  std::vector<int> moved;
  moved.reserve(onsets_.size());
  for (int pos : onsets_) moved.push_back(((pos + shift) % beats_ + beats_) % beats_);
  return RhythmPattern(beats_, std::move(moved), name_);
}

// ---------------------------------------------------------------------------
// GapProfile
// ---------------------------------------------------------------------------

int GapProfile::total() const {
  int sum = 0;
  for (int g : gaps) sum += g;
  return sum;
}

int GapProfile::max_gap() const {
  return gaps.empty() ? 0 : *std::max_element(gaps.begin(), gaps.end());
}

std::vector<int> GapProfile::multiset() const {
  std::vector<int> sorted = gaps;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return sorted;
}

GapProfile GapProfile::rotated(std::size_t start) const {
  GapProfile out = *this;
  if (!out.gaps.empty()) {
    std::rotate(out.gaps.begin(), out.gaps.begin() + static_cast<long>(start % out.gaps.size()),
                out.gaps.end());
  }
  return out;
}

GapProfile gap_profile(const RhythmPattern& pattern) {
  const auto& on = pattern.onsets();
  GapProfile profile;
  profile.gaps.reserve(on.size());
  for (std::size_t i = 0; i + 1 < on.size(); ++i) profile.gaps.push_back(on[i + 1] - on[i]);
  // Wrap from the last onset back to the first one of the next cycle.
  profile.gaps.push_back(pattern.beats() - on.back() + on.front());
  return profile;
}

// ---------------------------------------------------------------------------
// Rhythm notations
// ---------------------------------------------------------------------------

std::string_view format_name(RhythmFormat format) {
  switch (format) {
    case RhythmFormat::binary: return "binary";
    case RhythmFormat::onset_list: return "onset_list";
    case RhythmFormat::grid: return "grid";
  }
  return "binary";
}

RhythmFormat parse_format_name(std::string_view text) {
  std::string key = detail::lower(detail::trim(text));
  if (key == "binary") return RhythmFormat::binary;
  if (key == "onset_list" || key == "onsets" || key == "onset-list") return RhythmFormat::onset_list;
  if (key == "grid") return RhythmFormat::grid;
  throw ParseError("unknown rhythm format '" + std::string(text) + "'");
}

namespace {

RhythmPattern make_checked(int beats, std::vector<int> onsets, std::string name) {
  if (onsets.empty()) throw ParseError("empty pattern: no accented beat");
  try {
    return RhythmPattern(beats, std::move(onsets), std::move(name));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

RhythmPattern parse_cells(std::string_view text, char on, char off, std::string name) {
  std::string_view body = detail::trim(text);
  if (body.empty()) throw ParseError("empty pattern");
  std::vector<int> onsets;
  for (std::size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (c == on) {
      onsets.push_back(static_cast<int>(i));
    } else if (c != off) {
      throw ParseError(std::string("illegal character '") + c + "' at beat " +
                       std::to_string(i + 1));
    }
  }
  return make_checked(static_cast<int>(body.size()), std::move(onsets), std::move(name));
}

RhythmPattern parse_onset_list(std::string_view text, int beats, std::string name) {
  if (beats < 1) throw ParseError("cycle length must be positive");
  std::vector<int> onsets;
  for (std::string_view field : detail::split(text, ',')) {
    field = detail::trim(field);
    if (field.empty()) {
      if (detail::trim(text).empty()) break;
      throw ParseError("empty field in onset list");
    }
    int beat = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), beat);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
      throw ParseError("illegal onset '" + std::string(field) + "'");
    }
    if (beat < 1 || beat > beats) {
      throw ParseError("onset " + std::to_string(beat) + " out of range 1.." +
                       std::to_string(beats));
    }
    if (std::find(onsets.begin(), onsets.end(), beat - 1) != onsets.end()) {
      throw ParseError("duplicate onset " + std::to_string(beat));
    }
    onsets.push_back(beat - 1);
  }
  return make_checked(beats, std::move(onsets), std::move(name));
}

}  // namespace

RhythmPattern parse_rhythm(std::string_view text, RhythmFormat format, int beats,
                           std::string name) {
  switch (format) {
    case RhythmFormat::binary: return parse_cells(text, '1', '0', std::move(name));
    case RhythmFormat::grid: return parse_cells(text, 'x', '.', std::move(name));
    case RhythmFormat::onset_list: return parse_onset_list(text, beats, std::move(name));
  }
  throw ParseError("unknown rhythm format");
}

std::string serialize_rhythm(const RhythmPattern& pattern, RhythmFormat format) {
  if (format == RhythmFormat::onset_list) {
    std::string out;
    for (int pos : pattern.onsets()) {
      if (!out.empty()) out += ',';
      out += std::to_string(pos + 1);
    }
    return out;
  }
  const char on = format == RhythmFormat::binary ? '1' : 'x';
  const char off = format == RhythmFormat::binary ? '0' : '.';
  std::string out(static_cast<std::size_t>(pattern.beats()), off);
  for (int pos : pattern.onsets()) out[static_cast<std::size_t>(pos)] = on;
  return out;
}

const std::vector<RhythmPattern>& canonical_patterns() {
  static const std::vector<RhythmPattern> patterns = {
      RhythmPattern(12, {2, 5, 7, 9, 11}, "solea"),
      RhythmPattern(12, {2, 6, 7, 9, 11}, "buleria"),
      RhythmPattern(12, {0, 2, 4, 7, 10}, "seguiriya"),
      RhythmPattern(12, {0, 3, 6, 8, 10}, "guajira"),
      RhythmPattern(12, {0, 3, 6, 9}, "fandango"),
  };
  return patterns;
}

const RhythmPattern& canonical_pattern(std::string_view name) {
  std::string key = detail::lower(name);
  for (const auto& p : canonical_patterns()) {
    if (p.name() == key) return p;
  }
  throw InvalidArgument("no canonical pattern named '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Melodies
// ---------------------------------------------------------------------------

std::string_view unit_name(Unit unit) {
  switch (unit) {
    case Unit::hertz: return "hz";
    case Unit::cents: return "cents";
    case Unit::beats: return "beats";
  }
  return "hz";
}

Unit parse_unit_name(std::string_view text) {
  std::string key = detail::lower(detail::trim(text));
  if (key == "hz" || key == "hertz") return Unit::hertz;
  if (key == "cents" || key == "cent") return Unit::cents;
  if (key == "beats") return Unit::beats;
  throw ParseError("unknown unit '" + std::string(text) + "'");
}

TimedPitchSequence::TimedPitchSequence(std::vector<PitchPoint> points, Unit unit)
    : points_(std::move(points)), unit_(unit) {
  if (unit_ == Unit::beats) throw InvalidArgument("melody pitch unit must be hz or cents");
  if (points_.empty()) throw InvalidArgument("melody has no points");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].time) || !std::isfinite(points_[i].pitch)) {
      throw InvalidArgument("non-finite value at point " + std::to_string(i + 1));
    }
    if (i > 0 && !(points_[i].time > points_[i - 1].time)) {
      throw InvalidArgument("non-monotone time at point " + std::to_string(i + 1));
    }
  }
}

IntervalSequence::IntervalSequence(std::vector<PitchInterval> intervals, Unit unit)
    : intervals_(std::move(intervals)), unit_(unit) {
  for (const auto& iv : intervals_) {
    if (!(iv.duration > 0.0) || !std::isfinite(iv.duration) || !std::isfinite(iv.step)) {
      throw InvalidArgument("interval durations must be finite and positive");
    }
  }
}

IntervalSequence to_intervals(const TimedPitchSequence& melody) {
  const auto& pts = melody.points();
  if (pts.size() < 2) throw InvalidArgument("interval form needs at least two points");
  std::vector<PitchInterval> out;
  out.reserve(pts.size() - 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    out.push_back({pts[i + 1].time - pts[i].time, pts[i + 1].pitch - pts[i].pitch});
  }
  return IntervalSequence(std::move(out), melody.unit());
}

TimedPitchSequence from_intervals(const IntervalSequence& intervals, PitchPoint anchor) {
  std::vector<PitchPoint> pts;
  pts.reserve(intervals.size() + 1);
  pts.push_back(anchor);
  for (const auto& iv : intervals.intervals()) {
    pts.push_back({pts.back().time + iv.duration, pts.back().pitch + iv.step});
  }
  return TimedPitchSequence(std::move(pts), intervals.unit());
}

TimedPitchSequence parse_pitch_track(std::istream& in, Unit unit) {
  std::vector<PitchPoint> pts;
  std::string line;
  int line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    const bool first = !seen_content;
    seen_content = true;

    auto fields = detail::split(body, ',');
    double values[2] = {0.0, 0.0};
    bool ok = fields.size() == 2;
    for (std::size_t i = 0; ok && i < 2; ++i) {
      auto parsed = detail::parse_double(detail::trim(fields[i]));
      ok = parsed.has_value();
      if (ok) values[i] = *parsed;
    }
    if (!ok) {
      if (first) continue;  // header
      throw ParseError("expected 'time,pitch' numbers, got '" + std::string(body) + "'", line_no);
    }
    if (!pts.empty() && !(values[0] > pts.back().time)) {
      throw ParseError("non-monotone time", line_no);
    }
    pts.push_back({values[0], values[1]});
  }
  if (pts.empty()) throw ParseError("empty pitch track");
  try {
    return TimedPitchSequence(std::move(pts), unit);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

TimedPitchSequence parse_pitch_track(std::string_view text, Unit unit) {
  std::istringstream in{std::string(text)};
  return parse_pitch_track(in, unit);
}

std::string serialize_pitch_track(const TimedPitchSequence& melody) {
  std::string out = "time,pitch\n";
  for (const auto& p : melody.points()) {
    out += detail::format_shortest(p.time);
    out += ',';
    out += detail::format_shortest(p.pitch);
    out += '\n';
  }
  return out;
}

}  // namespace compas
