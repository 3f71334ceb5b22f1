#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "weakkam/app/app.hpp"
#include "weakkam/oracle/oracle.hpp"

using namespace weakkam;
using namespace weakkam::app;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("weakkam-test-" + name);
  fs::remove_all(dir);
  return dir;
}

std::size_t error_line(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(Config, EmptyTextGivesDefaults) {
  const auto c = parse_config("");
  EXPECT_EQ(c.preset, "example1");
  EXPECT_EQ(c.n, 256u);
  EXPECT_FALSE(c.dt.has_value());
  EXPECT_FALSE(c.A.has_value());
  EXPECT_EQ(c.class_select, "auto");
  EXPECT_EQ(c.lambda_schedule.size(), 7u);
}

TEST(Config, ParsesKeysAndComments) {
  const auto c = parse_config(
      "# header\n"
      "grid.n = 128\n"
      "preset = example2   # trailing\n"
      "\n"
      "discount.A = auto\n"
      "discount.lambda_schedule = 0.1, 0.01\n"
      "tolerance.fix = 1e-3\n");
  EXPECT_EQ(c.n, 128u);
  EXPECT_EQ(c.preset, "example2");
  EXPECT_FALSE(c.A.has_value());
  EXPECT_EQ(c.lambda_schedule, (std::vector<double>{0.1, 0.01}));
  EXPECT_EQ(c.tol_fix, 1e-3);
}

TEST(Config, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("grid.n = 3"), 1u);
  EXPECT_EQ(error_line("preset = example1\nbogus.key = 1"), 2u);
  EXPECT_EQ(error_line("grid.n = 64\n\ngrid.n = 128"), 3u);
  EXPECT_EQ(error_line("no equals sign"), 1u);
  EXPECT_EQ(error_line("discount.lambda_schedule = 0.01, 0.1"), 1u);
  try {
    parse_config("grid.n = 3");
  } catch (const ConfigParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 1: grid.n must be >= 4"), std::string::npos);
  }
}

TEST(Run, Example1WritesOutputs) {
  ExperimentConfig c;
  c.n = 128;
  c.class_select = "at:0";
  c.A = 1.0;
  c.output_dir = scratch("ex1");
  const auto s = run_experiment(c);
  ASSERT_EQ(s.exit_code, kExitOk) << s.message;
  EXPECT_EQ(s.checks_failed, 0u);
  for (const char* f : {"profiles.csv", "convergence.csv", "report.txt"}) {
    EXPECT_TRUE(fs::exists(c.output_dir / f)) << f;
  }
  const std::string csv = slurp(c.output_dir / "convergence.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "lambda,sup_error,residual,iterations");
  const std::string profiles = slurp(c.output_dir / "profiles.csv");
  EXPECT_EQ(profiles.substr(0, profiles.find('\n')), "x,U,a,v0,h_inf_target,u_lambda_min_lambda");
  const std::string report = slurp(c.output_dir / "report.txt");
  for (const char* key : {"grid.n", "discount.A", "tolerance.aubry", "c0", "epsilon"}) {
    EXPECT_NE(report.find(key), std::string::npos) << key;
  }
}

TEST(Run, CsvIsDeterministic) {
  ExperimentConfig c;
  c.n = 64;
  c.lambda_schedule = {1e-1, 1e-2};
  c.output_dir = scratch("det-a");
  ASSERT_EQ(run_experiment(c).exit_code, kExitOk);
  ExperimentConfig d = c;
  d.output_dir = scratch("det-b");
  ASSERT_EQ(run_experiment(d).exit_code, kExitOk);
  for (const char* f : {"profiles.csv", "convergence.csv"}) {
    EXPECT_EQ(slurp(c.output_dir / f), slurp(d.output_dir / f)) << f;
  }
}

TEST(Run, ConstantDiscountViolatesConditionA) {
  ExperimentConfig c;
  c.n = 128;
  c.a = "const(1)";
  c.output_dir = scratch("const");
  const auto s = run_experiment(c);
  EXPECT_EQ(s.exit_code, kExitConditionA);
  EXPECT_NE(s.message.find("64"), std::string::npos) << s.message;
  EXPECT_NE(slurp(c.output_dir / "report.txt").find("condition (a) violated"), std::string::npos);
}

TEST(Run, BadValuesMapToConfigExit) {
  ExperimentConfig c;
  c.n = 64;
  c.A = 1e-3;  // below |a| |v0|
  c.output_dir = scratch("smallA");
  EXPECT_EQ(run_experiment(c).exit_code, kExitConfig);
  c.A.reset();
  c.class_select = "7";
  EXPECT_EQ(run_experiment(c).exit_code, kExitConfig);
}

TEST(Run, SolverCapMapsToConvergenceExit) {
  ExperimentConfig c;
  c.n = 64;
  c.max_iters = 3;
  c.output_dir = scratch("cap");
  EXPECT_EQ(run_experiment(c).exit_code, kExitNoConvergence);
}

TEST(Run, Example2SelectsSecondClass) {
  ExperimentConfig c;
  c.preset = "example2";
  c.a = "neg_cos2pix";
  c.class_select = "at:0.5";
  c.output_dir = scratch("ex2");
  const auto s = run_experiment(c);
  ASSERT_EQ(s.exit_code, kExitOk) << s.message;
  EXPECT_EQ(s.checks_failed, 0u);
  // target column must be u2 + C; compare shapes relative to the basepoint
  const auto q = oracle::sqrt_potential_solution(
      [](double x) { return std::pow(std::sin(weakkam::testing::kTwoPi * x), 2); }, 0.5);
  std::istringstream rows(slurp(c.output_dir / "profiles.csv"));
  std::string line;
  std::getline(rows, line);
  std::vector<std::vector<double>> table;
  while (std::getline(rows, line)) {
    std::vector<double> f;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) f.push_back(std::stod(cell));
    ASSERT_EQ(f.size(), 6u);
    table.push_back(f);
  }
  ASSERT_EQ(table.size(), 256u);
  const double C = table[128][4];
  EXPECT_GT(C, 1.0);
  double worst = 0.0;
  for (const auto& f : table) worst = std::max(worst, std::abs(f[4] - C - q.u(f[0])));
  EXPECT_LE(worst, 0.05);
}
