// Everything a command-line run depends on. A run is reproducible from its
// serialized RunConfig alone.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "compas/notation.h"
#include "compas/regularity.h"
#include "compas/similarity.h"

namespace compas::cli {

enum class PlotKind { polygon, chronotonic };

struct RunConfig {
  std::string command;

  std::string input;         // rhythm file, pitch track, or matrix CSV
  bool input_is_matrix = false;
  std::string output;        // primary artifact; empty means stdout
  std::string svg_output;    // optional figure

  Metric metric = Metric::chronotonic;
  bool csv_stdout = false;   // distances: print CSV instead of the aligned table

  int beats = kDefaultBeats;
  int size = 5;
  RegularityCriterion criterion = RegularityCriterion::max_area;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::string check_pattern;  // regularity: binary pattern to test for optimality
  bool list_optimizers = false;

  double alpha = 0.0;
  std::optional<Unit> alpha_unit;  // unit written after the alpha value, if any
  Unit pitch_unit = Unit::hertz;

  PlotKind plot_kind = PlotKind::polygon;
  std::string pattern_name;  // plot: restrict to one pattern

  std::uint64_t seed = 1;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

std::string to_json(const RunConfig& config);

/// Overwrites the fields present in `json_text`; absent fields keep their
/// current values. Throws ParseError on malformed JSON or bad enum values.
void apply_json(RunConfig& config, const std::string& json_text);

/// Parses "12", "12hz", "100cents", "100 cents". Throws ParseError.
std::pair<double, std::optional<Unit>> parse_alpha(std::string_view text);

std::string_view plot_kind_name(PlotKind kind);
PlotKind parse_plot_kind(std::string_view text);

}  // namespace compas::cli
