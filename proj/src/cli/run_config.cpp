#include "compas/cli/run_config.h"

#include <cctype>
#include <cmath>

#include <json.hpp>

#include "compas/errors.h"
#include "text_util.h"

namespace compas::cli {

using nlohmann::json;

std::string_view plot_kind_name(PlotKind kind) {
  return kind == PlotKind::polygon ? "polygon" : "chronotonic";
}

PlotKind parse_plot_kind(std::string_view text) {
  std::string key = detail::lower(detail::trim(text));
  if (key == "polygon") return PlotKind::polygon;
  if (key == "chronotonic") return PlotKind::chronotonic;
  throw ParseError("unknown plot kind '" + std::string(text) + "'");
}

std::pair<double, std::optional<Unit>> parse_alpha(std::string_view text) {
  std::string_view body = detail::trim(text);
  std::size_t split = 0;
  while (split < body.size() &&
         (std::isdigit(static_cast<unsigned char>(body[split])) || body[split] == '.' ||
          body[split] == '-' || body[split] == '+' || body[split] == 'e' || body[split] == 'E')) {
    // An 'e' followed by a letter other than a digit/sign starts a unit name.
    if ((body[split] == 'e' || body[split] == 'E') &&
        (split + 1 >= body.size() || !(std::isdigit(static_cast<unsigned char>(body[split + 1])) ||
                                       body[split + 1] == '-' || body[split + 1] == '+'))) {
      break;
    }
    ++split;
  }
  auto value = detail::parse_double(body.substr(0, split));
  if (!value || !std::isfinite(*value) || *value < 0.0) {
    throw ParseError("bad tolerance '" + std::string(text) + "'");
  }
  std::string_view suffix = detail::trim(body.substr(split));
  if (suffix.empty()) return {*value, std::nullopt};
  Unit unit = parse_unit_name(suffix);
  if (unit == Unit::beats) throw ParseError("tolerance unit must be hz or cents");
  return {*value, unit};
}

std::string to_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  j["input"] = c.input;
  j["input_is_matrix"] = c.input_is_matrix;
  j["output"] = c.output;
  j["svg_output"] = c.svg_output;
  j["metric"] = std::string(metric_name(c.metric));
  j["csv_stdout"] = c.csv_stdout;
  j["n"] = c.beats;
  j["k"] = c.size;
  j["criterion"] = std::string(criterion_name(c.criterion));
  j["budget"] = c.budget;
  j["check_pattern"] = c.check_pattern;
  j["list_optimizers"] = c.list_optimizers;
  j["alpha"] = c.alpha;
  j["alpha_unit"] = c.alpha_unit ? json(std::string(unit_name(*c.alpha_unit))) : json(nullptr);
  j["pitch_unit"] = std::string(unit_name(c.pitch_unit));
  j["plot_kind"] = std::string(plot_kind_name(c.plot_kind));
  j["pattern_name"] = c.pattern_name;
  j["seed"] = c.seed;
  return j.dump(2) + "\n";
}

void apply_json(RunConfig& c, const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config: top level must be an object");
  const json known = json::parse(to_json(RunConfig{}));
  for (const auto& item : j.items()) {
    if (!known.contains(item.key())) throw ParseError("config: unknown key '" + item.key() + "'");
  }
  try {
    if (j.contains("command")) c.command = j["command"].get<std::string>();
    if (j.contains("input")) c.input = j["input"].get<std::string>();
    if (j.contains("input_is_matrix")) c.input_is_matrix = j["input_is_matrix"].get<bool>();
    if (j.contains("output")) c.output = j["output"].get<std::string>();
    if (j.contains("svg_output")) c.svg_output = j["svg_output"].get<std::string>();
    if (j.contains("metric")) c.metric = parse_metric_name(j["metric"].get<std::string>());
    if (j.contains("csv_stdout")) c.csv_stdout = j["csv_stdout"].get<bool>();
    if (j.contains("n")) c.beats = j["n"].get<int>();
    if (j.contains("k")) c.size = j["k"].get<int>();
    if (j.contains("criterion")) {
      c.criterion = parse_criterion_name(j["criterion"].get<std::string>());
    }
    if (j.contains("budget")) c.budget = j["budget"].get<std::uint64_t>();
    if (j.contains("check_pattern")) c.check_pattern = j["check_pattern"].get<std::string>();
    if (j.contains("list_optimizers")) c.list_optimizers = j["list_optimizers"].get<bool>();
    if (j.contains("alpha")) c.alpha = j["alpha"].get<double>();
    if (j.contains("alpha_unit")) {
      c.alpha_unit = j["alpha_unit"].is_null()
                         ? std::nullopt
                         : std::optional<Unit>(parse_unit_name(j["alpha_unit"].get<std::string>()));
    }
    if (j.contains("pitch_unit")) c.pitch_unit = parse_unit_name(j["pitch_unit"].get<std::string>());
    if (j.contains("plot_kind")) c.plot_kind = parse_plot_kind(j["plot_kind"].get<std::string>());
    if (j.contains("pattern_name")) c.pattern_name = j["pattern_name"].get<std::string>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
}

}  // namespace compas::cli
