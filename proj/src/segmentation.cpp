#include "compas/segmentation.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "compas/errors.h"
#include "text_util.h"

namespace compas {

StepApproximation::StepApproximation(std::vector<Step> steps, double alpha, Unit unit,
                                     std::size_t source_size)
    : steps_(std::move(steps)), alpha_(alpha), unit_(unit), source_size_(source_size) {
  if (steps_.empty()) throw InvalidArgument("step function needs at least one step");
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Step& s = steps_[i];
    if (!(s.end >= s.start) || !std::isfinite(s.value)) {
      throw InvalidArgument("step " + std::to_string(i + 1) + " is malformed");
    }
    if (i > 0 && steps_[i - 1].end != s.start) {
      throw InvalidArgument("steps must tile the domain without gaps or overlaps");
    }
  }
}

double StepApproximation::operator()(double t) const {
  if (!(t >= domain_start() && t <= domain_end())) {
    throw InvalidArgument("time outside the step function's domain");
  }
  auto it = std::upper_bound(steps_.begin(), steps_.end(), t,
                             [](double x, const Step& s) { return x < s.end; });
  if (it == steps_.end()) return steps_.back().value;
  return it->value;
}

namespace {

struct Run {
  std::size_t first;
  std::size_t last;
  double low;   // max(y) - alpha over the run
  double high;  // min(y) + alpha over the run
};

void check_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw InvalidArgument("tolerance alpha must be finite and non-negative");
  }
}

StepApproximation build(const TimedPitchSequence& melody, double alpha,
                        const std::vector<Run>& runs) {
  const auto& pts = melody.points();
  std::vector<Step> steps;
  steps.reserve(runs.size());
  for (std::size_t r = 0; r < runs.size(); ++r) {
    Step s;
    s.first = runs[r].first;
    s.last = runs[r].last;
    s.value = runs[r].low + (runs[r].high - runs[r].low) / 2.0;
    s.start = r == 0 ? pts.front().time : steps.back().end;
    s.end = r + 1 == runs.size()
                ? pts.back().time
                : pts[runs[r].last].time + (pts[runs[r + 1].first].time - pts[runs[r].last].time) / 2.0;
    steps.push_back(s);
  }
  return StepApproximation(std::move(steps), alpha, melody.unit(), pts.size());
}

}  // namespace

StepApproximation segment_greedy(const TimedPitchSequence& melody, double alpha,
                                 SweepStats* stats) {
  check_alpha(alpha);
  const auto& pts = melody.points();
  std::vector<Run> runs;
  Run current{0, 0, pts[0].pitch - alpha, pts[0].pitch + alpha};
  std::size_t updates = 1;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double low = pts[i].pitch - alpha;
    const double high = pts[i].pitch + alpha;
    ++updates;
    if (std::max(current.low, low) <= std::min(current.high, high)) {
      current.low = std::max(current.low, low);
      current.high = std::min(current.high, high);
      current.last = i;
    } else {
      runs.push_back(current);
      current = {i, i, low, high};
    }
  }
  runs.push_back(current);
  if (stats) stats->interval_updates = updates;
  return build(melody, alpha, runs);
}

StepApproximation segment_oracle(const TimedPitchSequence& melody, double alpha,
                                 std::size_t budget) {
  check_alpha(alpha);
  const auto& pts = melody.points();
  const std::size_t n = pts.size();
  if (n > budget) {
    throw BudgetExceeded("oracle limited to " + std::to_string(budget) + " points, got " +
                         std::to_string(n));
  }
  // pieces[j]: fewest steps covering points [0, j); start[j]: where the last
  // of those steps begins.
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> pieces(n + 1, kUnset);
  std::vector<std::size_t> start(n + 1, 0);
  pieces[0] = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t i = j; i-- > 0;) {
      lo = std::max(lo, pts[i].pitch - alpha);
      hi = std::min(hi, pts[i].pitch + alpha);
      if (lo > hi) break;
      if (pieces[i] != kUnset && pieces[i] + 1 <= pieces[j]) {
        pieces[j] = pieces[i] + 1;
        start[j] = i;
      }
    }
  }

  std::vector<Run> runs;
  for (std::size_t j = n; j > 0; j = start[j]) {
    Run run{start[j], j - 1, -std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
    for (std::size_t i = run.first; i <= run.last; ++i) {
      run.low = std::max(run.low, pts[i].pitch - alpha);
      run.high = std::min(run.high, pts[i].pitch + alpha);
    }
    runs.push_back(run);
  }
  std::reverse(runs.begin(), runs.end());
  return build(melody, alpha, runs);
}

double step_area_distance(const StepApproximation& f, const StepApproximation& g) {
  if (f.unit() != g.unit()) {
    throw InvalidArgument("unit mismatch: " + std::string(unit_name(f.unit())) + " vs " +
                          std::string(unit_name(g.unit())));
  }
  const double lo = std::max(f.domain_start(), g.domain_start());
  const double hi = std::min(f.domain_end(), g.domain_end());
  if (lo > hi) throw InvalidArgument("step functions have disjoint domains");

  std::vector<double> cuts{lo, hi};
  for (const auto* fn : {&f, &g}) {
    for (const auto& s : fn->steps()) {
      if (s.start > lo && s.start < hi) cuts.push_back(s.start);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double area = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = cuts[i] + (cuts[i + 1] - cuts[i]) / 2.0;
    area += (cuts[i + 1] - cuts[i]) * std::abs(f(mid) - g(mid));
  }
  return area;
}

double step_distance(const StepApproximation& f, const StepApproximation& g) {
  const double lo = std::max(f.domain_start(), g.domain_start());
  const double hi = std::min(f.domain_end(), g.domain_end());
  if (!(hi > lo)) throw InvalidArgument("step functions do not overlap on a positive length");
  return step_area_distance(f, g) / (hi - lo);
}

std::vector<EncodedStep> encode_melody(const StepApproximation& approximation) {
  std::vector<EncodedStep> out;
  out.reserve(approximation.piece_count());
  for (const auto& s : approximation.steps()) out.push_back({s.end - s.start, s.value});
  return out;
}

StepApproximation to_step_function(const ChronotonicCurve& curve) {
  std::vector<Step> steps;
  std::size_t index = 0;
  for (const auto& seg : curve.segments()) {
    steps.push_back({static_cast<double>(seg.start), static_cast<double>(seg.end),
                     static_cast<double>(seg.height()), index, index});
    ++index;
  }
  return StepApproximation(std::move(steps), 0.0, Unit::beats, curve.segments().size());
}

std::string steps_to_csv(const StepApproximation& approximation) {
  std::string out = "t_start,t_end,value\n";
  for (const auto& s : approximation.steps()) {
    out += detail::format_shortest(s.start) + "," + detail::format_shortest(s.end) + "," +
           detail::format_shortest(s.value) + "\n";
  }
  return out;
}

}  // namespace compas
