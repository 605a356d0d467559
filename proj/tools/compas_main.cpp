// compas: rhythm regularity, rhythm distances, melody segmentation and
// distance trees from the command line.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "compas/cli/commands.h"
#include "compas/cli/run_config.h"
#include "compas/errors.h"

using compas::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Geometric and combinatorial analysis of cyclic rhythms and melodic contours"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string save_config_path;
  app.add_option("--config", config_path,
                 "JSON run configuration; its fields override command-line flags");
  app.add_option("--save-config", save_config_path, "Write the effective configuration here");

  RunConfig cfg;
  std::string metric = "chronotonic";
  std::string criterion = "max-area";
  std::string alpha = "0";
  std::string unit = "hz";
  std::string kind = "polygon";

  auto* distances = app.add_subcommand("distances", "Pairwise distance matrix with sum/max rows");
  distances->add_option("input", cfg.input, "Rhythm file")->required();
  distances->add_option("--metric", metric, "chronotonic | permutation | hamming")
      ->capture_default_str();
  distances->add_option("-o,--output", cfg.output, "Write the matrix as CSV to this file");
  distances->add_flag("--csv", cfg.csv_stdout, "Print CSV instead of the aligned table");

  auto* regularity = app.add_subcommand("regularity", "Most regular k-subsets of n clock points");
  regularity->add_option("--n", cfg.beats, "Points on the clock")->capture_default_str();
  regularity->add_option("--k", cfg.size, "Points to choose")->capture_default_str();
  regularity
      ->add_option("--criterion", criterion,
                   "max-area | max-perimeter | min-sum-ears | min-max-ear")
      ->capture_default_str();
  regularity->add_option("--budget", cfg.budget, "Maximum subsets to enumerate")
      ->capture_default_str();
  regularity->add_option("--pattern", cfg.check_pattern,
                         "Binary pattern to test for optimality (sets n and k)");
  regularity->add_flag("--list", cfg.list_optimizers, "List every optimal onset set");
  regularity->add_option("-o,--output", cfg.output, "Write the report to this file");

  auto* segment = app.add_subcommand("segment", "Fewest-step approximation of a pitch track");
  segment->add_option("input", cfg.input, "CSV pitch track (time,pitch)")->required();
  segment->add_option("--alpha", alpha, "Tolerance, e.g. 12, 12hz, 100cents")->required();
  segment->add_option("--unit", unit, "Pitch unit of the track: hz | cents")
      ->capture_default_str();
  segment->add_option("-o,--output", cfg.output, "Write steps as CSV to this file");
  segment->add_option("--svg", cfg.svg_output, "Write a contour/steps overlay SVG");

  auto* tree = app.add_subcommand("tree", "Neighbor-joining tree as Newick");
  tree->add_option("input", cfg.input, "Rhythm file, or matrix CSV with --matrix")->required();
  tree->add_option("--metric", metric, "chronotonic | permutation | hamming")
      ->capture_default_str();
  tree->add_flag("--matrix", cfg.input_is_matrix, "Input is a distance matrix CSV");
  tree->add_option("-o,--output", cfg.output, "Write Newick to this file");

  auto* plot = app.add_subcommand("plot", "SVG clock polygons or chronotonic boxes");
  plot->add_option("input", cfg.input, "Rhythm file")->required();
  plot->add_option("--kind", kind, "polygon | chronotonic")->capture_default_str();
  plot->add_option("--name", cfg.pattern_name, "Plot only this pattern");
  plot->add_option("-o,--output", cfg.output, "Write SVG to this file");

  app.add_subcommand("selfcheck", "Reproduce the canonical chronotonic and permutation tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? compas::cli::kExitOk : compas::cli::kExitInvalidInput;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.metric = compas::parse_metric_name(metric);
    cfg.criterion = compas::parse_criterion_name(criterion);
    auto [alpha_value, alpha_unit] = compas::cli::parse_alpha(alpha);
    cfg.alpha = alpha_value;
    cfg.alpha_unit = alpha_unit;
    cfg.pitch_unit = compas::parse_unit_name(unit);
    cfg.plot_kind = compas::cli::parse_plot_kind(kind);

    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "error: cannot open '" << config_path << "'\n";
        return compas::cli::kExitIo;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      compas::cli::apply_json(cfg, buf.str());
    }
    if (!save_config_path.empty()) {
      std::ofstream out(save_config_path);
      out << compas::cli::to_json(cfg);
      if (!out) {
        std::cerr << "error: cannot write '" << save_config_path << "'\n";
        return compas::cli::kExitIo;
      }
    }
  } catch (const compas::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return compas::cli::kExitInvalidInput;
  }

  return compas::cli::run(cfg, std::cout, std::cerr);
}
