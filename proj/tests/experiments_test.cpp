#include <gtest/gtest.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <sstream>

#include "contavg/errors.hpp"
#include "contavg/experiments/cli.hpp"
#include "contavg/experiments/config.hpp"
#include "contavg/experiments/csv.hpp"
#include "contavg/experiments/fit.hpp"
#include "contavg/experiments/runners.hpp"

namespace contavg::experiments {
namespace {

namespace fs = std::filesystem;

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("contavg_exp_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string config_text(const std::string& experiment, const std::string& body) {
  return R"({"schema_version": 1, "experiment": ")" + experiment +
         R"(", "output": {"dir": ")" + scratch().string() + R"("})" +
         (body.empty() ? "" : ", " + body) + "}";
}

std::string config_error_key(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "<none>";
}

// Environment overrides the paths baked in at build time.
std::string location(const char* env, const char* fallback) {
  const char* v = std::getenv(env);
  return v ? v : fallback;
}

const std::string kSourceDir = location("CONTAVG_SOURCE_DIR", CONTAVG_SOURCE_DIR);
const std::string kCli = location("CONTAVG_CLI", CONTAVG_CLI);

int run_cli(std::vector<std::string> args, std::string* out_text = nullptr) {
  std::vector<const char*> argv{"contavg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int rc = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str() + err.str();
  return rc;
}

TEST(Fit, RecoversExactLine) {
  const std::vector<double> x{1, 2, 3, 4, 5};
  std::vector<double> y;
  for (double v : x) y.push_back(0.5 - 2.0 * v);
  const auto f = fit_linear(x, y);
  EXPECT_NEAR(f.a, 0.5, 1e-14);
  EXPECT_NEAR(f.b, -2.0, 1e-14);
  EXPECT_NEAR(f.r2, 1.0, 1e-14);
  EXPECT_LT(f.se_b, 1e-12);
  EXPECT_EQ(f.n, 5);
}

TEST(Fit, StandardErrorsMatchTextbookFormula) {
  const std::vector<double> x{0, 1, 2, 3};
  const std::vector<double> y{0.1, 0.9, 2.2, 2.8};
  const auto f = fit_linear(x, y);
  // Sxx = 5, Sxy = 4.7, residual sum 0.082, total sum 4.5.
  EXPECT_NEAR(f.b, 0.94, 1e-12);
  EXPECT_NEAR(f.a, 0.09, 1e-12);
  EXPECT_NEAR(f.se_b, std::sqrt(0.082 / 2 / 5), 1e-12);
  EXPECT_NEAR(f.se_a, std::sqrt(0.082 / 2 * (1.0 / 4 + 1.5 * 1.5 / 5)), 1e-12);
  EXPECT_NEAR(f.r2, 1 - 0.082 / 4.5, 1e-12);
}

TEST(Fit, RefusesShortOrBadData) {
  const std::vector<double> x{1, 2, 3};
  EXPECT_THROW(fit_linear(x, x), ContractViolation);
  const std::vector<double> x4{1, 2, 3, 4}, y4{1, -1, 2, 3};
  EXPECT_THROW(fit_log_linear(x4, y4), ContractViolation);
}

TEST(Fit, LogLinearRecoversRate) {
  std::vector<double> x, y;
  for (double e : {0.05, 0.1, 0.15, 0.2}) {
    x.push_back(1 / e);
    y.push_back(3.0 * std::exp(-0.8 / e));
  }
  const auto f = fit_log_linear(x, y);
  EXPECT_NEAR(f.b, -0.8, 1e-12);
  EXPECT_NEAR(std::exp(f.a), 3.0, 1e-10);
}

TEST(Config, ShippedConfigsValidate) {
  for (const char* name : {"e1", "e2", "e3", "e4"}) {
    const auto cfg = load_config(kSourceDir + "/configs/" + name + ".json");
    EXPECT_EQ(cfg.schema_version, 1);
  }
}

TEST(Config, DefaultsAreAcceptanceThresholds) {
  const auto c = parse_config(config_text("E1_remainder_decay",
                                          R"("grid": {"eps": [0.05, 0.0667, 0.1, 0.2], "B": [0.1]})"));
  EXPECT_EQ(c.e1.c_target, 0.8);
  EXPECT_EQ(c.e1.rate_tolerance, 0.15);
  EXPECT_EQ(c.e1.min_ratio, 1e3);
  EXPECT_EQ(c.e3.max_rel_err, 0.25);
  EXPECT_EQ(c.e3.slope_tolerance, 0.10);
  EXPECT_EQ(c.e3.f0_tolerance, 0.20);
  EXPECT_EQ(c.e2.envelope_rate, 0.09);
  EXPECT_EQ(c.e2.envelope_factor, 2.0);
  EXPECT_EQ(c.e4.min_r2, 0.98);
  EXPECT_EQ(c.e4.exponent_lo, 0.4);
  EXPECT_EQ(c.e4.exponent_hi, 0.6);
}

TEST(Config, ErrorsNameTheOffendingKey) {
  EXPECT_EQ(config_error_key("{not json"), "<root>");
  EXPECT_EQ(config_error_key(R"({"experiment": "E2_smoothing"})"), "schema_version");
  EXPECT_EQ(config_error_key(config_text("E1_remainder_decay",
                                         R"("grid": {"eps": [0.1, 0.2, "x", 0.3], "B": [0.1]})")),
            "grid.eps[2]");
  EXPECT_EQ(config_error_key(config_text("E1_remainder_decay",
                                         R"("grid": {"eps": [0.1, 0.2, 0.3], "B": [0.1]})")),
            "grid.eps");
  EXPECT_EQ(config_error_key(config_text("E3_splitting",
                                         R"("grid": {"eps": [0.15, 0.4], "B": [0.01]})")),
            "grid.eps[1]");
  EXPECT_EQ(config_error_key(config_text("E3_splitting",
                                         R"("grid": {"eps": [0.2], "B": [0.05]})")),
            "grid.B[0]");
  EXPECT_EQ(config_error_key(config_text("E2_smoothing", R"("truncation": {"K": 16, "N": 6})")),
            "truncation.K");
  EXPECT_EQ(config_error_key(config_text("E2_smoothing", R"("truncation": {"K": 32, "M": 6})")),
            "truncation.M");
  EXPECT_EQ(config_error_key(config_text("E4_multifreq_scaling",
                                         R"("grid": {"eps": [0.1, 0.05, 0.02, 0.01]},
                                            "e4": {"omega": [1.0]})")),
            "e4.omega");
  EXPECT_EQ(config_error_key(config_text("E1_remainder_decay",
                                         R"("grid": {"eps": [0.05, 0.0667, 0.1, 0.2], "B": [0.1]},
                                            "e1": {"c_target": 1.6})")),
            "e1.c_target");
  EXPECT_EQ(config_error_key(R"({"schema_version": 2, "experiment": "E2_smoothing",
                                 "truncation": {"K": 32, "N": 6}})"),
            "schema_version");
  EXPECT_EQ(config_error_key(R"({"schema_version": 1, "experiment": "E9"})"), "experiment");
}

TEST(Config, OutputMustBeADirectory) {
  const auto file = scratch() / "plain_file";
  write_text(file.string(), "x");
  EXPECT_EQ(config_error_key(R"({"schema_version": 1, "experiment": "E2_smoothing",
                                 "output": {"dir": ")" + file.string() + R"("},
                                 "truncation": {"K": 32, "N": 6}})"),
            "output.dir");
}

TEST(Config, ThreadOverride) {
  ExperimentConfig c;
  c.threads = 3;
  ::unsetenv("CONTAVG_THREADS");
  EXPECT_EQ(effective_threads(c), 3);
  ::setenv("CONTAVG_THREADS", "2", 1);
  EXPECT_EQ(effective_threads(c), 2);
  ::unsetenv("CONTAVG_THREADS");
}

TEST(Csv, RoundTripsDoublesExactly) {
  Table t;
  t.columns = {"a", "b"};
  const double v = 0.1 + 0.2;
  t.add_row({format_number(v), format_number(1e-300)});
  const Table back = parse_csv(to_csv(t));
  EXPECT_EQ(back.number(0, "a"), v);
  EXPECT_EQ(back.number(0, "b"), 1e-300);
  EXPECT_EQ(to_csv(back), to_csv(t));
  EXPECT_THROW(t.add_row({"1"}), ContractViolation);
  EXPECT_THROW(parse_csv("a,b\n1\n"), Error);
  EXPECT_NE(to_markdown(t).find("|---|---|"), std::string::npos);
}

TEST(Pool, KeepsIndexOrderAndRethrows) {
  std::vector<int> out(50, -1);
  parallel_for(50, 4, [&](int i) { out[i] = i * i; });
  for (int i = 0; i < 50; ++i) EXPECT_EQ(out[i], i * i);
  EXPECT_THROW(parallel_for(10, 3, [](int i) { if (i == 7) throw Error("cell 7"); }), Error);
}

TEST(E1, ZeroTargetLeavesInitialForcing) {
  auto c = parse_config(config_text("E1_remainder_decay", R"(
      "grid": {"eps": [0.05, 0.0667, 0.1, 0.2], "B": [0.1]},
      "truncation": {"K": 1, "N": 12, "rho": 0.5},
      "e1": {"c_target": 0.0})"));
  const auto out = run_e1(c);
  for (std::size_t r = 0; r < out.table.rows.size(); ++r) {
    EXPECT_EQ(out.table.number(r, "remainder"), out.table.number(r, "remainder_initial"));
  }
  ASSERT_NE(out.fit("log_remainder_vs_inv_eps"), nullptr);
  EXPECT_NEAR(out.fit("log_remainder_vs_inv_eps")->b, 0.0, 1e-12);
  EXPECT_TRUE(out.passed());
}

TEST(E2, ZeroParameterKeepsPowerLaw) {
  auto c = parse_config(config_text("E2_smoothing", R"(
      "truncation": {"K": 32, "N": 6}, "e2": {"s0": 0.0})"));
  const auto out = run_e2(c);
  ASSERT_EQ(out.table.rows.size(), 32u);
  for (std::size_t r = 0; r < 32; ++r) {
    const double k = static_cast<double>(r + 1);
    const double ratio = out.table.number(r, "normalized") * k * k;
    EXPECT_GT(ratio, 0.8 * 0.8);
    EXPECT_LT(ratio, 1.25 * 1.25);
    EXPECT_EQ(out.table.number(r, "initial_norm"), out.table.number(r, "final_norm"));
  }
}

TEST(E2, DeterministicForSeed) {
  auto c = parse_config(config_text("E2_smoothing", R"("truncation": {"K": 32, "N": 6})"));
  EXPECT_EQ(to_csv(run_e2(c).table), to_csv(run_e2(c).table));
  auto d = c;
  d.seed = c.seed + 1;
  EXPECT_NE(to_csv(run_e2(c).table), to_csv(run_e2(d).table));
}

TEST(E3, UnforcedRowIsBelowFloor) {
  auto c = parse_config(config_text("E3_splitting", R"("grid": {"eps": [0.2], "B": [0.0]})"));
  const auto out = run_e3(c);
  ASSERT_EQ(out.table.rows.size(), 1u);
  EXPECT_EQ(out.table.rows[0].back(), "below_floor");
  const double leading = out.table.number(0, "area_paper");
  EXPECT_EQ(leading, 0.0);
}

TEST(E4, InitialRemainderIsOffAverageNorm) {
  auto c = parse_config(config_text("E4_multifreq_scaling", R"(
      "grid": {"eps": [0.1, 0.05, 0.02, 0.01]}, "truncation": {"K": 8, "N": 1},
      "engine": {"scheme": "integrating_factor_rk4"})"));
  const auto out = run_e4(c);
  // Off-average norm of mu e^{-q|k|} cos<k,x> over the box: one mu e^{-q|k|}
  // per pair +-k.
  double expect = 0.0;
  for (int a = -8; a <= 8; ++a) {
    for (int b = -8; b <= 8; ++b) {
      if (a || b) expect += 0.5 * std::exp(-0.5 * (std::abs(a) + std::abs(b)));
    }
  }
  for (std::size_t r = 0; r < out.table.rows.size(); ++r) {
    EXPECT_NEAR(out.table.number(r, "remainder_initial"), expect, 1e-12 * expect);
  }
  EXPECT_GT(out.value("gamma0"), 0.0);
}

TEST(Cli, ExitCodes) {
  std::string text;
  EXPECT_EQ(run_cli({}, &text), 2);
  EXPECT_EQ(run_cli({"run", "--frobnicate"}, &text), 2);
  EXPECT_EQ(run_cli({"--help"}, &text), 0);
  EXPECT_NE(text.find("validate"), std::string::npos);

  const auto bad = (scratch() / "bad.json").string();
  write_text(bad, config_text("E1_remainder_decay", R"("grid": {"eps": [0.1, 0.2, "x", 0.3]})"));
  EXPECT_EQ(run_cli({"validate", "--config", bad}, &text), 2);
  EXPECT_NE(text.find("grid.eps[2]"), std::string::npos);
  EXPECT_EQ(run_cli({"run", "--config", bad}, &text), 2);

  const auto good = (scratch() / "good.json").string();
  write_text(good, config_text("E2_smoothing", R"("truncation": {"K": 32, "N": 6})"));
  EXPECT_EQ(run_cli({"validate", "--config", good}, &text), 0);
  EXPECT_EQ(run_cli({"report", "--input", (scratch() / "missing.csv").string()}, &text), 1);
  EXPECT_EQ(run_cli({"report", "--input", good, "--format", "xml"}, &text), 2);
}

TEST(Cli, FailedAssertionExitsOne) {
  const auto cfg = (scratch() / "tight.json").string();
  write_text(cfg, R"({"schema_version": 1, "experiment": "E2_smoothing",
                      "output": {"dir": ")" + scratch().string() + R"(", "name": "tight.csv"},
                      "truncation": {"K": 32, "N": 6}, "e2": {"envelope_factor": 0.1}})");
  std::string text;
  EXPECT_EQ(run_cli({"run", "--config", cfg}, &text), 1);
  EXPECT_NE(text.find("first offending k=1"), std::string::npos) << text;
  EXPECT_TRUE(fs::exists(scratch() / "tight.csv"));
}

TEST(Cli, BinaryRunsE1FixtureAndReportRoundTrips) {
  const std::string& cli = kCli;
  const std::string& src = kSourceDir;
  const auto dir = scratch() / "cli_e1";
  fs::create_directories(dir);
  const std::string cmd = "cd " + dir.string() + " && " + cli + " run --config " + src +
                          "/configs/e1.json > run.log 2>&1";
  ASSERT_EQ(WEXITSTATUS(std::system(cmd.c_str())), 0) << read_text((dir / "run.log").string());
  const Table t = parse_csv(read_text((dir / "out/e1.csv").string()));
  EXPECT_EQ(t.rows.size(), 4u);
  EXPECT_TRUE(fs::exists(dir / "out/e1.csv.summary.json"));

  const std::string rep = cli + " report --input " + (dir / "out/e1.csv").string() +
                          " --format csv > " + (dir / "again.csv").string();
  ASSERT_EQ(WEXITSTATUS(std::system(rep.c_str())), 0);
  EXPECT_EQ(read_text((dir / "again.csv").string()), read_text((dir / "out/e1.csv").string()));

  const std::string bogus = cli + " run --no-such-flag > /dev/null 2>&1";
  EXPECT_EQ(WEXITSTATUS(std::system(bogus.c_str())), 2);
}

}  // namespace
}  // namespace contavg::experiments
