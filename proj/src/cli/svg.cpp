#include "compas/cli/svg.h"

#include <algorithm>
#include <cstdio>
#include <string_view>

#include "compas/geometry.h"

namespace compas::cli {

namespace {

constexpr double kRadius = 100.0;
constexpr double kCell = 260.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v + 0.0);
  return buf;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string header(double width, double height) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
}

}  // namespace

std::string render_polygons_svg(const std::vector<RhythmPattern>& patterns) {
  const double width = kCell * static_cast<double>(std::max<std::size_t>(patterns.size(), 1));
  std::string out = header(width, kCell + 30.0);
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    const RhythmPattern& pattern = patterns[p];
    const double cx = kCell * static_cast<double>(p) + kCell / 2.0;
    const double cy = kCell / 2.0;
    auto at = [&](Point2 q) { return std::make_pair(cx + kRadius * q.x, cy - kRadius * q.y); };

    out += "<g class=\"clock\" data-name=\"" + escape(pattern.name()) + "\">\n";
    out += "  <circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(kRadius) +
           "\" fill=\"none\" stroke=\"#999\"/>\n";
    for (int b = 0; b < pattern.beats(); ++b) {
      auto [x, y] = at(clock_point(b, pattern.beats()));
      out += "  <circle class=\"beat\" cx=\"" + num(x) + "\" cy=\"" + num(y) +
             "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
    }
    const OnsetPolygon poly = polygon(pattern);
    std::string points;
    for (const auto& v : poly.vertices) {
      auto [x, y] = at(v);
      if (!points.empty()) points += ' ';
      points += num(x) + "," + num(y);
    }
    out += "  <polygon class=\"rhythm-polygon\" points=\"" + points +
           "\" fill=\"#cde\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (const auto& v : poly.vertices) {
      auto [x, y] = at(v);
      out += "  <circle class=\"vertex\" cx=\"" + num(x) + "\" cy=\"" + num(y) +
             "\" r=\"6\" fill=\"black\"/>\n";
    }
    auto [sx, sy] = at(clock_point(0, pattern.beats()));
    out += "  <text x=\"" + num(sx) + "\" y=\"" + num(sy - 12.0) +
           "\" text-anchor=\"middle\" font-size=\"12\">1</text>\n";
    out += "  <text x=\"" + num(cx) + "\" y=\"" + num(kCell + 15.0) +
           "\" text-anchor=\"middle\" font-size=\"16\">" + escape(pattern.name()) + "</text>\n";
    out += "</g>\n";
  }
  return out + "</svg>\n";
}

std::string render_chronotonic_svg(const std::vector<RhythmPattern>& patterns) {
  constexpr double kUnit = 20.0;
  constexpr double kLeft = 100.0;
  int beats = 1;
  int tallest = 1;
  for (const auto& p : patterns) {
    beats = std::max(beats, p.beats());
    const ChronotonicCurve curve = chronotonic(p);
    for (const auto& s : curve.segments()) tallest = std::max(tallest, s.height());
  }
  const double row = kUnit * tallest + 30.0;
  std::string out =
      header(kLeft + kUnit * beats + 20.0, row * static_cast<double>(std::max<std::size_t>(patterns.size(), 1)));
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    const double base = row * static_cast<double>(p + 1) - 15.0;
    out += "<g class=\"chronotonic\" data-name=\"" + escape(patterns[p].name()) + "\">\n";
    out += "  <text x=\"5\" y=\"" + num(base) + "\" font-size=\"14\">" +
           escape(patterns[p].name()) + "</text>\n";
    const ChronotonicCurve curve = chronotonic(patterns[p]);
    for (const auto& s : curve.segments()) {
      out += "  <rect class=\"box\" x=\"" + num(kLeft + kUnit * s.start) + "\" y=\"" +
             num(base - kUnit * s.height()) + "\" width=\"" + num(kUnit * s.width()) +
             "\" height=\"" + num(kUnit * s.height()) +
             "\" fill=\"#cde\" stroke=\"black\"/>\n";
    }
    out += "</g>\n";
  }
  return out + "</svg>\n";
}

std::string render_segmentation_svg(const TimedPitchSequence& melody,
                                    const StepApproximation& steps) {
  constexpr double kWidth = 800.0;
  constexpr double kHeight = 400.0;
  constexpr double kMargin = 40.0;
  const auto& pts = melody.points();
  double t0 = pts.front().time, t1 = pts.back().time;
  double lo = pts.front().pitch, hi = lo;
  for (const auto& p : pts) {
    lo = std::min(lo, p.pitch - steps.alpha());
    hi = std::max(hi, p.pitch + steps.alpha());
  }
  if (t1 == t0) t1 = t0 + 1.0;
  if (hi == lo) hi = lo + 1.0;
  auto x = [&](double t) { return kMargin + (t - t0) / (t1 - t0) * (kWidth - 2 * kMargin); };
  auto y = [&](double v) { return kHeight - kMargin - (v - lo) / (hi - lo) * (kHeight - 2 * kMargin); };

  std::string out = header(kWidth, kHeight);
  std::string line;
  for (const auto& p : pts) {
    if (!line.empty()) line += ' ';
    line += num(x(p.time)) + "," + num(y(p.pitch));
  }
  out += "<polyline class=\"contour\" points=\"" + line +
         "\" fill=\"none\" stroke=\"#888\"/>\n";
  for (const auto& p : pts) {
    out += "<line class=\"tolerance\" x1=\"" + num(x(p.time)) + "\" y1=\"" +
           num(y(p.pitch - steps.alpha())) + "\" x2=\"" + num(x(p.time)) + "\" y2=\"" +
           num(y(p.pitch + steps.alpha())) + "\" stroke=\"#c33\"/>\n";
  }
  for (const auto& s : steps.steps()) {
    out += "<line class=\"step\" x1=\"" + num(x(s.start)) + "\" y1=\"" + num(y(s.value)) +
           "\" x2=\"" + num(x(s.end)) + "\" y2=\"" + num(y(s.value)) +
           "\" stroke=\"black\" stroke-width=\"3\"/>\n";
  }
  return out + "</svg>\n";
}

}  // namespace compas::cli
