#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "fracml/csv.hpp"

using namespace fracml;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args,
           std::optional<std::string> threads = std::nullopt) {
  std::ostringstream out, err;
  cli::EnvLookup env = [threads](const std::string& name) -> std::optional<std::string> {
    if (name == "FRACML_THREADS") return threads;
    return std::nullopt;
  };
  const int code = cli::run(args, out, err, env);
  return {code, out.str(), err.str()};
}

std::string config(const std::string& name) {
  return std::string(FRACML_CONFIG_DIR) + "/" + name;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("fracml_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

csv::Table table(const std::string& text) {
  std::istringstream in(text);
  return csv::read_table(in);
}

}  // namespace

TEST(Classify, UnstableExample) {
  const Result r = run({"classify", "--alpha", "0.4", "--n", "3", "--a0", "0.2", "--a1",
                        "-0.5", "--a2", "0.1"});
  EXPECT_EQ(r.code, cli::kUnstable);
  EXPECT_NE(r.out.find("verdict,unstable"), std::string::npos);
  EXPECT_NE(r.out.find("witness,-0.6499999999999999"), std::string::npos);
  EXPECT_NE(r.out.find("+0.08660254037844"), std::string::npos);
}

TEST(Classify, StableExamples) {
  EXPECT_EQ(run({"classify", "--alpha", "0.8", "--n", "3", "--a0", "0.2", "--a1", "-0.3",
                 "--a2", "0.1"})
                .code,
            cli::kStable);
  const Result r = run({"classify", "--alpha", "1.0", "--n", "1", "--a0", "0", "--a1", "0",
                        "--a2", "0"});
  EXPECT_EQ(r.code, cli::kStable);
  EXPECT_NE(r.out.find("witness,none"), std::string::npos);
}

TEST(Classify, MarginalExitCode) {
  EXPECT_EQ(run({"classify", "--alpha", "0.5", "--n", "1", "--a1", "1"}).code,
            cli::kUndecided);
}

TEST(Classify, DenseMatrixFile) {
  const std::string path = temp_file("m.csv", "0.2,0.1,0\n0,-0.3,0.1\n0.2,0,-0.1\n");
  const Result r = run({"classify", "--alpha", "0.5", "--matrix", path});
  EXPECT_EQ(r.code, cli::kStable);
  EXPECT_NE(r.out.find("source,numeric-dense"), std::string::npos);
  const std::string bad = temp_file("bad.csv", "1,2\n3,x\n");
  const Result e = run({"classify", "--alpha", "0.5", "--matrix", bad});
  EXPECT_EQ(e.code, cli::kUsageError);
  EXPECT_NE(e.err.find("line 2"), std::string::npos);
}

TEST(Classify, UsageErrors) {
  EXPECT_EQ(run({"classify", "--alpha", "1.5"}).code, cli::kUsageError);
  EXPECT_EQ(run({"classify", "--alpha", "abc"}).code, cli::kUsageError);
  EXPECT_EQ(run({"classify", "--alpha", "0.5", "--mode", "weird"}).code, cli::kUsageError);
  EXPECT_EQ(run({}).code, cli::kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsageError);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Boundary, UnitCircleAndCardioid) {
  const Result r = run({"boundary", "--alpha", "1.0", "--samples", "360"});
  ASSERT_EQ(r.code, 0);
  const csv::Table t = table(r.out);
  ASSERT_EQ(t.header, (std::vector<std::string>{"t", "x", "y"}));
  ASSERT_EQ(t.rows.size(), 361u);
  for (const auto& row : t.rows) {
    EXPECT_NEAR(std::hypot(csv::parse_number(row[1], 0), csv::parse_number(row[2], 0)), 1.0,
                1e-12);
  }
  const csv::Table half = table(run({"boundary", "--alpha", "0.5", "--samples", "1024"}).out);
  EXPECT_NEAR(csv::parse_number(half.rows[512][1], 0), 1.0 - std::sqrt(2.0), 1e-12);
  const Result g = run({"boundary", "--alpha", "0.3", "--gamma", "--n", "6", "--j", "1"});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(table(g.out).rows.size(), 8193u);
  const Result bad = run({"boundary", "--alpha", "0.3", "--gamma", "--n", "6", "--j", "3"});
  EXPECT_EQ(bad.code, cli::kUsageError);
  EXPECT_NE(bad.err.find("sin(2 pi j / N) = 0"), std::string::npos);
}

TEST(Region, SymmetricVertices) {
  const csv::Table even = table(run({"region", "--mode", "symmetric", "--alpha", "0.2",
                                     "--n", "8"}).out);
  ASSERT_EQ(even.rows.size(), 4u);
  EXPECT_EQ(even.rows[1][0], "Q2");
  EXPECT_NEAR(csv::parse_number(even.rows[1][1], 0), -0.287174588749259, 1e-14);
  const csv::Table odd = table(run({"region", "--mode", "symmetric", "--alpha", "0.5",
                                    "--n", "9"}).out);
  EXPECT_EQ(odd.rows[1][0], "Q2'");
  EXPECT_EQ(odd.rows[3][0], "Q4'");
}

TEST(Region, AsymmetricElements) {
  const Result r = run({"region", "--mode", "thermo-asymmetric", "--alpha", "0.5",
                        "--samples", "512"});
  ASSERT_EQ(r.code, 0);
  const csv::Table t = table(r.out);
  std::size_t cardioid = 0, line = 0;
  for (const auto& row : t.rows) {
    if (row[0] == "cardioid") ++cardioid;
    if (row[0] == "line") {
      ++line;
      EXPECT_EQ(row[2], "1");
    }
  }
  EXPECT_EQ(cardioid, 513u);
  EXPECT_EQ(line, 2u);
  const csv::Table small = table(run({"region", "--mode", "asymmetric", "--alpha", "0.5",
                                      "--n", "2"}).out);
  EXPECT_EQ(small.rows.size(), 2u);
  EXPECT_EQ(run({"region", "--mode", "diagonal", "--alpha", "0.5"}).code, cli::kUsageError);
}

TEST(Simulate, FigureConfigs) {
  const Result stable = run({"simulate", "--config", config("logistic_cubic.json")});
  EXPECT_EQ(stable.code, cli::kStable);
  EXPECT_NE(stable.err.find("verdict=decaying"), std::string::npos);
  EXPECT_EQ(table(stable.out).rows.size(), 2001u);
  const Result unstable =
      run({"simulate", "--config", config("asymmetric_unstable.json")});
  EXPECT_EQ(unstable.code, cli::kUnstable);
}

TEST(Simulate, ZeroInitialCondition) {
  const Result r = run({"simulate", "--config", config("zero_initial.json")});
  const csv::Table t = table(r.out);
  ASSERT_EQ(t.rows.size(), 201u);
  for (const auto& row : t.rows)
    for (std::size_t k = 1; k < row.size(); ++k) EXPECT_EQ(csv::parse_number(row[k], 0), 0.0);
}

TEST(Simulate, FlagsOverrideConfig) {
  const Result r = run({"simulate", "--config", config("logistic_cubic.json"),
                        "--horizon", "40", "--n", "3"});
  const csv::Table t = table(r.out);
  EXPECT_EQ(t.rows.size(), 41u);
  EXPECT_EQ(t.header.size(), 4u);
}

TEST(Simulate, WithoutConfigFile) {
  const Result r = run({"simulate", "--mode", "symmetric", "--alpha", "0.5", "--n", "4",
                        "--a1", "0.2", "--a2", "0.1", "--horizon", "400"});
  EXPECT_EQ(r.code, cli::kStable);
}

TEST(Simulate, Deterministic) {
  const auto a = run({"simulate", "--config", config("logistic_circle_stable.json"),
                      "--horizon", "300", "--seed", "7"});
  const auto b = run({"simulate", "--config", config("logistic_circle_stable.json"),
                      "--horizon", "300", "--seed", "7"});
  const auto c = run({"simulate", "--config", config("logistic_circle_stable.json"),
                      "--horizon", "300", "--seed", "8"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}

TEST(Simulate, ConfigDiagnostics) {
  const std::string broken = temp_file("broken.json", "{\n  \"alpha\": 0.5,\n  \"n\": ,\n}\n");
  const Result r = run({"simulate", "--config", broken});
  EXPECT_EQ(r.code, cli::kUsageError);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;

  const std::string schema = temp_file(
      "schema.json",
      R"({"alpha": 0.5, "n": 3, "horizon": 10, "coupling": {"type": "maps", "f0": {"kind": "linear", "a": 1}, "f1": {"kind": "cubic"}, "f2": {"kind": "linear", "a": 0}}})");
  const Result s = run({"simulate", "--config", schema});
  EXPECT_EQ(s.code, cli::kUsageError);
  EXPECT_NE(s.err.find("/coupling/f1"), std::string::npos) << s.err;
  EXPECT_NE(s.err.find("delta"), std::string::npos) << s.err;

  EXPECT_EQ(run({"simulate", "--config", "/nonexistent/x.json"}).code, cli::kUsageError);
  const std::string badalpha =
      temp_file("alpha.json", R"({"alpha": 2, "n": 3, "horizon": 10, "coupling": {"type": "symmetric", "a1": 0, "a2": 0}})");
  EXPECT_EQ(run({"simulate", "--config", badalpha}).code, cli::kUsageError);
}

TEST(Simulate, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "fracml_test_traj.csv";
  const Result r = run({"simulate", "--config", config("zero_initial.json"), "--out",
                        path.string()});
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(csv::read_table(in).rows.size(), 201u);
}

TEST(Sweep, SingleCellAndGrid) {
  const Result one = run({"sweep", "--mode", "symmetric", "--alpha", "0.2", "--n", "8",
                          "--p1", "-0.05:-0.05:1", "--p2", "0.1:0.1:1"});
  ASSERT_EQ(one.code, 0) << one.err;
  const csv::Table t = table(one.out);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0][2], "stable");
  EXPECT_EQ(t.rows[0][3], "none");

  const Result grid = run({"sweep", "--config", config("sweep_logistic_cubic.json"),
                           "--p1", "-1:1:5", "--p2", "-1:1:4"});
  EXPECT_EQ(table(grid.out).rows.size(), 20u);
}

TEST(Sweep, SimulatedColumnAndThreadIndependence) {
  const std::vector<std::string> args{"sweep", "--mode", "logistic-cubic", "--alpha", "0.6",
                                      "--n", "4", "--p1", "-0.5:0.5:3", "--p2", "0:1:2",
                                      "--simulate", "--horizon", "400"};
  const Result a = run(args, "1");
  const Result b = run(args, "3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  for (const auto& row : table(a.out).rows) EXPECT_NE(row[3], "none");
}

TEST(Sweep, Errors) {
  EXPECT_EQ(run({"sweep", "--mode", "symmetric", "--alpha", "0.2", "--n", "8", "--p1",
                 "0:1:2000", "--p2", "0:1:1000"})
                .code,
            cli::kUsageError);
  EXPECT_EQ(run({"sweep", "--mode", "symmetric", "--alpha", "0.2", "--n", "8", "--p1",
                 "0:1", "--p2", "0:1:3"})
                .code,
            cli::kUsageError);
  EXPECT_EQ(run({"sweep", "--mode", "symmetric", "--alpha", "0.2", "--n", "8"}).code,
            cli::kUsageError);
  EXPECT_EQ(run({"sweep", "--mode", "symmetric", "--alpha", "0.2", "--n", "8", "--p1",
                 "0:1:2", "--p2", "0:1:2"},
                "zero")
                .code,
            cli::kUsageError);
}

TEST(Config, MapParsing) {
  const auto doc = cli::parse_document(
      R"({"kind": "negation", "map": {"kind": "scaled", "c": 0.5, "map": {"kind": "logistic", "mu": 2}}})");
  const MapSpec f = cli::parse_map(doc, "/m");
  EXPECT_DOUBLE_EQ(f(0.5), -0.25);
  EXPECT_THROW(cli::parse_map(cli::parse_document(R"({"kind": "tent"})"), "/m"),
               cli::ConfigError);
}

TEST(Config, EquilibriumReference) {
  const auto doc = cli::parse_document(R"({
    "alpha": 0.8, "n": 7, "horizon": 10,
    "coupling": {"type": "logistic-circle", "mu": 1.1, "delta": -1.2},
    "equilibrium": {"guess": 0.1}
  })");
  const cli::SimulationConfig c = cli::load_simulation(doc, {});
  EXPECT_NEAR(c.reference, 1.0 - 1.0 / 1.1, 1e-12);
}
