#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fockbridge/newton_wigner.hpp"
#include "fockbridge_cli/config.hpp"
#include "fockbridge_cli/profile.hpp"
#include "fockbridge_cli/report.hpp"
#include "fockbridge_cli/suite.hpp"
#include "json.hpp"

using namespace fockbridge;
using namespace fockbridge::cli;
namespace fs = std::filesystem;

namespace {

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header = nullptr) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("fockbridge_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" + FOCKBRIDGE_CLI + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Config, DefaultsRoundTrip) {
  const RunConfig c = parse_config("{}");
  EXPECT_EQ(c.modes, 5);
  EXPECT_EQ(c.n_max, 4);
  EXPECT_EQ(dump_config(parse_config(dump_config(c))), dump_config(c));
}

TEST(Config, FieldsOverrideDefaults) {
  const RunConfig c = parse_config(
      R"({"lattice": {"modes": 7, "mass": 2.0}, "statistics": "fermi", "rapidities": [0.3], "seed": 9,
          "tolerances": {"nw.k0_profile": 0.05}})");
  EXPECT_EQ(c.modes, 7);
  EXPECT_EQ(c.mass, 2.0);
  EXPECT_EQ(c.statistics, StatisticsChoice::Fermi);
  EXPECT_EQ(c.rapidities, std::vector<double>{0.3});
  EXPECT_EQ(c.seed, 9u);
  const auto checks = build_checks(c, "nw");
  const auto it = std::find_if(checks.begin(), checks.end(), [](const auto& k) { return k.name == "nw.k0_profile"; });
  ASSERT_NE(it, checks.end());
  EXPECT_EQ(it->tolerance, 0.05);
}

TEST(Config, Diagnostics) {
  auto message = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message("{\n\"n_max\": 3,\n\"lattice\": }").find("line 3"), std::string::npos);
  EXPECT_NE(message(R"({"lattice": {"modez": 5}})").find("lattice.modez"), std::string::npos);
  EXPECT_NE(message(R"({"n_max": "four"})").find("n_max"), std::string::npos);
  EXPECT_NE(message(R"({"lattice": {"modes": 6}})").find("mode_count"), std::string::npos);
  EXPECT_NE(message(R"({"quadrature": {"nodes": 100}})").find("quadrature.nodes"), std::string::npos);
  EXPECT_NE(message(R"({"rapidities": [0.1, "x"]})").find("rapidities[1]"), std::string::npos);
  EXPECT_THROW(build_checks(parse_config(R"({"tolerances": {"no.such": 1}})"), "all"), ConfigError);
  EXPECT_THROW(build_checks(RunConfig{}, "everything"), ConfigError);
}

TEST(Suite, SelectorsPartitionAll) {
  const RunConfig c;
  std::size_t total = 0;
  for (const auto& s : selectors())
    if (s != "all") total += build_checks(c, s).size();
  EXPECT_EQ(total, build_checks(c, "all").size());
}

TEST(Suite, EmptyDomainIsSkippedNotFailed) {
  RunConfig c;
  c.n_max = 1;
  const auto reports = run_suite(c, "equivalence");
  int skipped = 0;
  for (const auto& r : reports) {
    if (r.status == CheckStatus::Skipped) {
      ++skipped;
      EXPECT_FALSE(r.pass().has_value());
      EXPECT_FALSE(r.reason.empty());
    } else {
      EXPECT_EQ(r.status, CheckStatus::Pass) << r.name;
    }
  }
  EXPECT_GT(skipped, 0);
  EXPECT_EQ(exit_status(reports), 0);

  const auto fields = run_suite(c, "fields");
  EXPECT_EQ(fields.front().status, CheckStatus::Skipped);
}

TEST(Suite, DefaultAlgebraAndAntiparticlesPass) {
  for (const char* s : {"algebra", "antiparticles", "classical"}) {
    for (const auto& r : run_suite(RunConfig{}, s)) EXPECT_EQ(r.status, CheckStatus::Pass) << r.name;
  }
}

TEST(Suite, TightToleranceFails) {
  RunConfig c;
  c.tolerances["nw.k0_profile"] = 1e-12;
  const auto reports = run_suite(c, "nw");
  EXPECT_EQ(reports.front().status, CheckStatus::Fail);
  EXPECT_EQ(exit_status(reports), 1);
}

TEST(Suite, CapacityRejectionSelectsExitThree) {
  RunConfig c;
  c.modes = 41;
  c.n_max = 6;
  const auto reports = run_suite(c, "fock");
  EXPECT_EQ(exit_status(reports), 3);
}

TEST(Report, JsonSchema) {
  CheckReport pass{"a", "x", 1e-3, 1e-2, CheckStatus::Pass, std::nullopt, ""};
  CheckReport skip{"b", "y", std::nullopt, 1e-2, CheckStatus::Skipped, std::nullopt, "empty domain"};
  const auto j = nlohmann::json::parse(report_json({pass, skip}));
  ASSERT_TRUE(j.is_array());
  for (const char* key : {"name", "anchor", "deviation", "tolerance", "pass", "seconds", "status"}) {
    EXPECT_TRUE(j[0].contains(key)) << key;
  }
  EXPECT_EQ(j[0]["pass"], true);
  EXPECT_TRUE(j[0]["seconds"].is_null());
  EXPECT_TRUE(j[1]["pass"].is_null());
  EXPECT_EQ(j[1]["reason"], "empty domain");
  EXPECT_FALSE(j[0].contains("reason"));
}

TEST(Profile, NwChiIsSymmetric) {
  std::string header;
  const auto rows = parse_csv(emit_profile(ProfileKind::NwChi, {}, RunConfig{}), &header);
  EXPECT_EQ(header, "chi,re,im,abs");
  ASSERT_EQ(rows.size(), 201u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_NEAR(rows[i][0], -rows[rows.size() - 1 - i][0], 1e-12);
    EXPECT_NEAR(rows[i][3], rows[rows.size() - 1 - i][3], 1e-12 * rows[100][3]);
  }
}

TEST(Profile, ChiOverlapMatchesK0) {
  const auto rows = parse_csv(emit_profile(ProfileKind::ChiOverlap, {}, RunConfig{}));
  for (const auto& r : rows) {
    if (r[0] > 3.0) break;
    const double oracle = 2.0 * std::cyl_bessel_k(0.0, r[0]) - nw::overlap_tail(1.0, 40.0, r[0]);
    EXPECT_LE(std::abs(r[1] - oracle) / std::abs(oracle), 1e-2) << r[0];
  }
  EXPECT_LT(rows.back()[1], rows.front()[1]);
}

TEST(Profile, AnticommutatorKernelWitness) {
  RunConfig c;
  c.box_length = 5.0;
  std::string header;
  const auto rows = parse_csv(emit_profile(ProfileKind::AnticommutatorKernel, {}, c), &header);
  EXPECT_EQ(header, "separation,value");
  EXPECT_GT(std::abs(rows.back()[1]), 1e-6);
}

TEST(Profile, FifteenSignificantDigits) {
  const std::string csv = emit_profile(ProfileKind::NwX, {}, RunConfig{});
  const std::string first_row = csv.substr(csv.find('\n') + 1, csv.find('\n', csv.find('\n') + 1) - csv.find('\n') - 1);
  const std::string cell = first_row.substr(0, first_row.find(','));
  EXPECT_EQ(cell, "-0.5");
  EXPECT_EQ(emit_profile(ProfileKind::NwX, {}, RunConfig{}), csv);
  EXPECT_THROW(profile_kind_from_string("nope"), ConfigError);
}

TEST(Binary, ExitCodesAndOutputDirectory) {
  const fs::path dir = scratch("exit");
  {
    std::ofstream(dir / "bad.json") << "{\n  \"lattice\": {\n    \"modes\": }\n}\n";
    std::ofstream(dir / "big.json") << R"({"lattice": {"modes": 41}, "n_max": 6})";
  }
  EXPECT_EQ(run_cli("verify algebra --out \"" + (dir / "ok").string() + "\""), 0);
  EXPECT_TRUE(fs::exists(dir / "ok" / "report.json"));
  EXPECT_TRUE(fs::exists(dir / "ok" / "summary.txt"));
  EXPECT_EQ(run_cli("verify all --config \"" + (dir / "bad.json").string() + "\""), 2);
  EXPECT_EQ(run_cli("verify nothing"), 2);
  EXPECT_EQ(run_cli("verify fock --config \"" + (dir / "big.json").string() + "\" --out \"" + (dir / "big").string() + "\""), 3);
  EXPECT_EQ(run_cli("lorentz check --rapidity 3.0 --config \"" + (dir / "ok" / "config.json").string() + "\""), 1);

  EXPECT_EQ(run_cli("verify algebra", "FOCKBRIDGE_OUT=\"" + (dir / "env").string() + "\""), 0);
  EXPECT_TRUE(fs::exists(dir / "env" / "report.json"));
  EXPECT_EQ(run_cli("nw profile --mass 1 --cutoff 40 --kind nw_x --out \"" + (dir / "nw").string() + "\""), 0);
  EXPECT_TRUE(fs::exists(dir / "nw" / "profile_nw_x.csv"));
  fs::remove_all(dir);
}
