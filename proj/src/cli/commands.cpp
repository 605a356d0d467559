#include "compas/cli/commands.h"

#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <tuple>

#include "compas/cli/svg.h"
#include "compas/errors.h"
#include "compas/phylo.h"
#include "compas/regularity.h"
#include "compas/rhythm_file.h"
#include "compas/segmentation.h"
#include "compas/similarity.h"

namespace compas::cli {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path + "'");
  file << content;
  if (!file) throw IoError("failed writing '" + path + "'");
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const LengthMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitLengthMismatch;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

RhythmFile load_rhythms(const RunConfig& config) {
  if (config.input.empty()) throw InvalidArgument("no input file given");
  return parse_rhythm_file(read_text(config.input));
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v + 0.0);
  return buf;
}

std::string braces(const std::vector<int>& values, int offset = 0) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i] + offset);
  }
  return out + "}";
}

}  // namespace

int cmd_distances(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    RhythmFile file = load_rhythms(config);
    DistanceMatrix matrix = distance_matrix(file.patterns, config.metric);
    const std::string csv = matrix_to_csv(matrix);
    if (config.csv_stdout) {
      out << csv;
    } else {
      out << metric_name(config.metric) << " distances\n" << matrix_to_text(matrix);
    }
    if (!config.output.empty()) write_text(config.output, csv, out);
    return kExitOk;
  });
}

int cmd_regularity(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    int beats = config.beats;
    int size = config.size;
    std::optional<RhythmPattern> check;
    if (!config.check_pattern.empty()) {
      check = parse_rhythm(config.check_pattern, RhythmFormat::binary);
      beats = check->beats();
      size = static_cast<int>(check->size());
    }
    SelectionResult result = best_selection(beats, size, config.criterion, config.budget);
    BalancedCharacterization balanced =
        characterize_optimal(beats, size, config.criterion, config.budget);

    std::ostringstream report;
    report << "criterion: " << criterion_name(config.criterion) << '\n';
    report << "n: " << beats << "  k: " << size << '\n';
    report << "subsets examined: " << result.examined << '\n';
    if (config.criterion == RegularityCriterion::min_max_ear) {
      report << "optimal max gap: " << static_cast<int>(result.value) << '\n';
    } else {
      report << "optimal value: " << fixed(result.value) << '\n';
    }
    report << "optimizers: " << result.count() << '\n';
    report << "balanced multiset: " << braces(balanced.gap_multiset)
           << (balanced.verified ? " (verified optimal)" : " (unverified at this size)") << '\n';
    report << "gap multiset  count\n";
    for (const auto& family : result.families) {
      std::string key = braces(family.gap_multiset);
      report << key << std::string(key.size() < 14 ? 14 - key.size() : 1, ' ')
             << family.onset_sets.size() << '\n';
    }
    if (config.list_optimizers) {
      report << "optimal onset sets (1-based):\n";
      for (const auto& set : result.optimizers) report << "  " << braces(set, 1) << '\n';
    }
    if (check) {
      OptimalityReport r = is_optimal(*check, config.criterion, config.budget);
      report << "pattern " << config.check_pattern << ": "
             << (r.optimal ? "optimal" : "not optimal") << ", value " << fixed(r.value);
      if (!r.optimal) report << ", shortfall " << fixed(r.shortfall);
      report << '\n';
    }
    write_text(config.output, report.str(), out);
    return kExitOk;
  });
}

int cmd_segment(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.input.empty()) throw InvalidArgument("no pitch track given");
    if (config.alpha_unit && *config.alpha_unit != config.pitch_unit) {
      throw InvalidArgument("tolerance is in " + std::string(unit_name(*config.alpha_unit)) +
                            " but the pitch track is in " +
                            std::string(unit_name(config.pitch_unit)) +
                            "; units are never converted");
    }
    if (config.pitch_unit == Unit::hertz) {
      err << "warning: tolerance applied in Hz; cents give pitch-uniform tolerances\n";
    }
    TimedPitchSequence melody = parse_pitch_track(read_text(config.input), config.pitch_unit);
    StepApproximation steps = segment_greedy(melody, config.alpha);
    write_text(config.output, steps_to_csv(steps), out);
    if (!config.svg_output.empty()) {
      write_text(config.svg_output, render_segmentation_svg(melody, steps), out);
    }
    return kExitOk;
  });
}

int cmd_tree(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.input.empty()) throw InvalidArgument("no input file given");
    DistanceMatrix matrix =
        config.input_is_matrix
            ? parse_matrix_csv(read_text(config.input))
            : distance_matrix(parse_rhythm_file(read_text(config.input)).patterns, config.metric);
    PhyloTree tree = neighbor_joining(matrix);
    for (const auto& c : tree.clamped()) {
      err << "note: negative " << c.description << " (" << fixed(c.estimate)
          << ") clamped to 0\n";
    }
    write_text(config.output, to_newick(tree) + "\n", out);
    return kExitOk;
  });
}

int cmd_plot(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    RhythmFile file = load_rhythms(config);
    std::vector<RhythmPattern> chosen;
    for (const auto& p : file.patterns) {
      if (config.pattern_name.empty() || p.name() == config.pattern_name) chosen.push_back(p);
    }
    if (chosen.empty()) throw InvalidArgument("no pattern named '" + config.pattern_name + "'");
    const std::string svg = config.plot_kind == PlotKind::polygon ? render_polygons_svg(chosen)
                                                                  : render_chronotonic_svg(chosen);
    write_text(config.output, svg, out);
    return kExitOk;
  });
}

int cmd_selfcheck(const RunConfig& config, std::ostream& out, std::ostream& err) {
  (void)config;
  return guarded(err, [&] {
    // Reference tables for the canonical patterns, verbatim, summary rows included.
    struct Reference {
      Metric metric;
      std::vector<std::vector<double>> entries;
      std::vector<double> sums;
      std::vector<double> maxima;
    };
    const std::vector<Reference> tables = {
        {Metric::chronotonic,
         {{0, 6, 8, 4, 10}, {6, 0, 12, 8, 14}, {8, 4, 0, 8, 6}, {4, 8, 8, 0, 6}, {10, 14, 6, 6, 0}},
         {28, 40, 34, 26, 36},
         {10, 14, 12, 8, 14}},
        {Metric::permutation,
         {{0, 1, 11, 7, 7}, {1, 0, 12, 8, 8}, {11, 12, 0, 4, 4}, {7, 8, 4, 0, 2}, {7, 8, 4, 2, 0}},
         {26, 29, 34, 21, 21},
         {11, 12, 12, 8, 8}},
    };
    // A listed value that disagrees with the computation is an erratum when
    // the reference table contradicts itself at that spot (an asymmetric entry
    // whose mirror matches, or a summary that is not the sum/max of its own
    // listed column). Anything else is a failure.
    bool all_ok = true;
    for (const auto& t : tables) {
      DistanceMatrix m = distance_matrix(canonical_patterns(), t.metric);
      const auto& names = m.labels();
      const std::size_t n = m.size();
      std::vector<std::string> notes;
      int failures = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (t.entries[i][j] == m.at(i, j)) continue;
          const bool erratum = t.entries[j][i] == m.at(i, j);
          failures += erratum ? 0 : 1;
          notes.push_back(std::string(erratum ? "erratum" : "mismatch") + ": row " + names[i] +
                          ", column " + names[j] + " listed " + format_distance(t.entries[i][j]) +
                          ", computed " + format_distance(m.at(i, j)));
        }
      }
      const auto sums = m.column_sums();
      const auto maxima = m.column_max();
      for (std::size_t j = 0; j < n; ++j) {
        double listed_sum = 0.0, listed_max = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          listed_sum += t.entries[i][j];
          listed_max = std::max(listed_max, t.entries[i][j]);
        }
        for (const auto& [row, published, computed, from_column] :
             {std::tuple{"sum", t.sums[j], sums[j], listed_sum},
              std::tuple{"max", t.maxima[j], maxima[j], listed_max}}) {
          if (published == computed) continue;
          const bool erratum = published != from_column;
          failures += erratum ? 0 : 1;
          notes.push_back(std::string(erratum ? "erratum" : "mismatch") + ": " + row + " of " +
                          names[j] + " listed " + format_distance(published) + ", computed " +
                          format_distance(computed) + ", listed column gives " +
                          format_distance(from_column));
        }
      }
      all_ok = all_ok && failures == 0;
      out << (failures == 0 ? "PASS " : "FAIL ") << metric_name(t.metric) << " table\n";
      for (const auto& note : notes) out << "  " << note << '\n';
      out << matrix_to_text(m);
    }
    return all_ok ? kExitOk : kExitSelfcheckFailed;
  });
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.command == "distances") return cmd_distances(config, out, err);
  if (config.command == "regularity") return cmd_regularity(config, out, err);
  if (config.command == "segment") return cmd_segment(config, out, err);
  if (config.command == "tree") return cmd_tree(config, out, err);
  if (config.command == "plot") return cmd_plot(config, out, err);
  if (config.command == "selfcheck") return cmd_selfcheck(config, out, err);
  err << "error: unknown command '" << config.command << "'\n";
  return kExitInvalidInput;
}

}  // namespace compas::cli
