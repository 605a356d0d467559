#include "compas/cli/commands.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "compas/cli/run_config.h"
#include "compas/cli/svg.h"
#include "compas/errors.h"

namespace compas::cli {
namespace {

namespace fs = std::filesystem;

const std::string kData = COMPAS_DATA_DIR;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("compas_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }
  static std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  int exec(const RunConfig& cfg) {
    out_.str("");
    err_.str("");
    return run(cfg, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + 1))
    ++n;
  return n;
}

TEST_F(CliTest, DistancesChronotonicCsv) {
  RunConfig cfg;
  cfg.command = "distances";
  cfg.input = kData + "/canonical.txt";
  cfg.output = (dir_ / "t1.csv").string();
  ASSERT_EQ(exec(cfg), kExitOk) << err_.str();
  const std::string csv = slurp(cfg.output);
  EXPECT_EQ(csv,
            ",solea,buleria,seguiriya,guajira,fandango\n"
            "solea,0,6,8,4,10\n"
            "buleria,6,0,12,8,14\n"
            "seguiriya,8,12,0,8,6\n"
            "guajira,4,8,8,0,6\n"
            "fandango,10,14,6,6,0\n"
            "sum,28,40,34,26,36\n"
            "max,10,14,12,8,14\n");
  ASSERT_EQ(exec(cfg), kExitOk);
  EXPECT_EQ(slurp(cfg.output), csv);
}

TEST_F(CliTest, DistancesPermutationFromBinaryFile) {
  RunConfig cfg;
  cfg.command = "distances";
  cfg.input = kData + "/canonical_binary.txt";
  cfg.metric = Metric::permutation;
  cfg.csv_stdout = true;
  ASSERT_EQ(exec(cfg), kExitOk) << err_.str();
  EXPECT_NE(out_.str().find("sum,26,29,31,21,21\nmax,11,12,12,8,8\n"), std::string::npos);
}

TEST_F(CliTest, DistancesErrors) {
  RunConfig cfg;
  cfg.command = "distances";
  cfg.input = write("empty.txt", "");
  EXPECT_EQ(exec(cfg), kExitInvalidInput);

  cfg.input = write("bad.txt", "format: binary\nn: 12\na = 100100100100\nb = 1001x0100100\n");
  EXPECT_EQ(exec(cfg), kExitInvalidInput);
  EXPECT_NE(err_.str().find("line 4"), std::string::npos) << err_.str();

  cfg.input = write("mixed.txt", "format: binary\na = 100100100100\nb = 10010010\n");
  EXPECT_EQ(exec(cfg), kExitLengthMismatch);

  cfg.input = (dir_ / "missing.txt").string();
  EXPECT_EQ(exec(cfg), kExitIo);
}

TEST_F(CliTest, RegularityReports) {
  RunConfig cfg;
  cfg.command = "regularity";
  cfg.beats = 12;
  cfg.size = 5;
  ASSERT_EQ(exec(cfg), kExitOk) << err_.str();
  EXPECT_NE(out_.str().find("{3,3,2,2,2}"), std::string::npos);
  EXPECT_NE(out_.str().find("optimizers: 24"), std::string::npos);

  cfg.size = 4;
  ASSERT_EQ(exec(cfg), kExitOk);
  EXPECT_NE(out_.str().find("{3,3,3,3}"), std::string::npos);

  cfg.size = 13;
  EXPECT_EQ(exec(cfg), kExitInvalidInput);

  cfg.beats = 40;
  cfg.size = 20;
  EXPECT_EQ(exec(cfg), kExitBudget);
}

TEST_F(CliTest, RegularityCheckPattern) {
  RunConfig cfg;
  cfg.command = "regularity";
  cfg.check_pattern = "001000110101";  // bulería
  ASSERT_EQ(exec(cfg), kExitOk) << err_.str();
  EXPECT_NE(out_.str().find("not optimal"), std::string::npos);
  EXPECT_NE(out_.str().find("shortfall 0.250000"), std::string::npos);
}

TEST_F(CliTest, SegmentDebla) {
  RunConfig cfg;
  cfg.command = "segment";
  cfg.input = kData + "/debla.csv";
  cfg.alpha = 12.0;
  cfg.alpha_unit = Unit::hertz;
  cfg.svg_output = (dir_ / "seg.svg").string();
  ASSERT_EQ(exec(cfg), kExitOk) << err_.str();
  EXPECT_EQ(out_.str(), "t_start,t_end,value\n0.2,6.3,396\n6.3,6.5,330\n");
  EXPECT_NE(err_.str().find("warning"), std::string::npos);
  EXPECT_NE(slurp(cfg.svg_output).find("<svg"), std::string::npos);

  cfg.alpha_unit = Unit::cents;
  EXPECT_EQ(exec(cfg), kExitInvalidInput);
}

TEST_F(CliTest, TreeFromPatternsAndMatrix) {
  RunConfig cfg;
  cfg.command = "tree";
  cfg.input = kData + "/canonical.txt";
  cfg.metric = Metric::permutation;
  ASSERT_EQ(exec(cfg), kExitOk) << err_.str();
  const std::string from_patterns = out_.str();
  EXPECT_EQ(from_patterns.back(), '\n');
  EXPECT_NE(from_patterns.find("solea:"), std::string::npos);

  RunConfig dist;
  dist.command = "distances";
  dist.input = cfg.input;
  dist.metric = Metric::permutation;
  dist.output = (dir_ / "t2.csv").string();
  ASSERT_EQ(exec(dist), kExitOk);

  cfg.input = dist.output;
  cfg.input_is_matrix = true;
  ASSERT_EQ(exec(cfg), kExitOk) << err_.str();
  EXPECT_EQ(out_.str(), from_patterns);
}

TEST_F(CliTest, PlotFandangoHasFourVertices) {
  RunConfig cfg;
  cfg.command = "plot";
  cfg.input = kData + "/canonical.txt";
  cfg.pattern_name = "fandango";
  ASSERT_EQ(exec(cfg), kExitOk) << err_.str();
  const std::string svg = out_.str();
  EXPECT_EQ(count(svg, "class=\"vertex\""), 4u);
  EXPECT_EQ(count(svg, "class=\"rhythm-polygon\""), 1u);
  EXPECT_EQ(count(svg, "class=\"beat\""), 12u);

  cfg.plot_kind = PlotKind::chronotonic;
  ASSERT_EQ(exec(cfg), kExitOk);
  EXPECT_EQ(count(out_.str(), "class=\"box\""), 4u);

  cfg.pattern_name = "alegrias";
  EXPECT_EQ(exec(cfg), kExitInvalidInput);
}

TEST_F(CliTest, SelfcheckAndUnknownCommand) {
  RunConfig cfg;
  cfg.command = "selfcheck";
  ASSERT_EQ(exec(cfg), kExitOk) << out_.str();
  EXPECT_EQ(count(out_.str(), "PASS"), 2u);
  EXPECT_EQ(count(out_.str(), "erratum"), 2u);
  EXPECT_NE(out_.str().find("sum of seguiriya listed 34, computed 31, listed column gives 31"),
            std::string::npos)
      << out_.str();
  cfg.command = "dance";
  EXPECT_EQ(exec(cfg), kExitInvalidInput);
}

TEST(RunConfigTest, JsonRoundTrip) {
  RunConfig cfg;
  cfg.command = "segment";
  cfg.input = "track.csv";
  cfg.metric = Metric::hamming;
  cfg.criterion = RegularityCriterion::min_max_ear;
  cfg.alpha = 100.0;
  cfg.alpha_unit = Unit::cents;
  cfg.pitch_unit = Unit::cents;
  cfg.plot_kind = PlotKind::chronotonic;
  cfg.seed = 99;
  RunConfig back;
  apply_json(back, to_json(cfg));
  EXPECT_EQ(back, cfg);
  EXPECT_EQ(to_json(back), to_json(cfg));
}

TEST(RunConfigTest, PartialOverrideAndErrors) {
  RunConfig cfg;
  cfg.size = 7;
  apply_json(cfg, R"({"n": 16})");
  EXPECT_EQ(cfg.beats, 16);
  EXPECT_EQ(cfg.size, 7);
  EXPECT_THROW(apply_json(cfg, "{"), ParseError);
  EXPECT_THROW(apply_json(cfg, R"({"beats": 16})"), ParseError);
  EXPECT_THROW(apply_json(cfg, R"({"metric": "euclid"})"), ParseError);
}

TEST(RunConfigTest, ParseAlpha) {
  EXPECT_EQ(parse_alpha("12"), (std::pair<double, std::optional<Unit>>{12.0, std::nullopt}));
  EXPECT_EQ(parse_alpha("12hz").second, Unit::hertz);
  EXPECT_EQ(parse_alpha("100 cents"), (std::pair<double, std::optional<Unit>>{100.0, Unit::cents}));
  EXPECT_THROW(parse_alpha("-3"), ParseError);
  EXPECT_THROW(parse_alpha("12 beats"), ParseError);
  EXPECT_THROW(parse_alpha("abc"), ParseError);
}

TEST(SvgTest, VertexPositions) {
  const std::string svg = render_polygons_svg({canonical_pattern("fandango")});
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

}  // namespace
}  // namespace compas::cli
