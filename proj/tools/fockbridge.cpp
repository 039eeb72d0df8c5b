#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "fockbridge/algebra.hpp"
#include "fockbridge_cli/config.hpp"
#include "fockbridge_cli/profile.hpp"
#include "fockbridge_cli/report.hpp"
#include "fockbridge_cli/suite.hpp"

using namespace fockbridge;
using namespace fockbridge::cli;

namespace {

// --out beats FOCKBRIDGE_OUT, which beats the config file
std::string output_dir(const std::string& flag, const RunConfig& config) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("FOCKBRIDGE_OUT"); env && *env) return env;
  return config.output;
}

RunConfig config_from(const std::string& path) { return path.empty() ? RunConfig{} : load_config(path); }

int run_and_print(const std::vector<CheckReport>& reports) {
  std::cout << report_summary(reports);
  return exit_status(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fockbridge: second-quantized operator verification"};
  app.require_subcommand(1);

  std::string config_path, out_flag, selector;
  std::optional<std::uint64_t> seed;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "run a check suite and write report.json / summary.txt");
  verify->add_option("selector", selector, "algebra|fock|fields|equivalence|statistics|classical|nw|lorentz|antiparticles|all")
      ->required();
  verify->add_option("--config", config_path, "JSON run config");
  verify->add_option("--seed", seed, "override the config seed");
  verify->add_option("--out", out_flag, "output directory");
  verify->add_flag("--timings", timings, "record wall time per check (breaks byte-identical reports)");

  app.add_subcommand("config", "print the default run config");

  std::string word;
  auto* normal = app.add_subcommand("normal-order", "normal-order an X/P word");
  normal->add_option("word", word, "e.g. PPPXPPXX")->required();

  ProfileParams pp;
  std::string kind = "nw_chi";
  auto* nw = app.add_subcommand("nw", "Newton-Wigner tools");
  nw->require_subcommand(1);
  auto* nw_profile = nw->add_subcommand("profile", "write a Newton-Wigner profile CSV");
  nw_profile->add_option("--mass", pp.mass)->required();
  nw_profile->add_option("--cutoff", pp.cutoff)->required();
  nw_profile->add_option("--kind", kind)->check(CLI::IsMember({"nw_chi", "nw_x", "chi_overlap"}));
  nw_profile->add_option("--nodes", pp.nodes);
  nw_profile->add_option("--points", pp.points);
  nw_profile->add_option("--out", out_flag);
  auto* nw_check = nw->add_subcommand("check", "run the Newton-Wigner checks");
  nw_check->add_option("--config", config_path);

  double rapidity = 0.0;
  auto* lorentz = app.add_subcommand("lorentz", "boost tools");
  lorentz->require_subcommand(1);
  auto* lorentz_check = lorentz->add_subcommand("check", "run the boost checks at one rapidity");
  lorentz_check->add_option("--rapidity", rapidity)->required();
  lorentz_check->add_option("--config", config_path);

  std::string profile_kind;
  auto* profile = app.add_subcommand("profile", "write a profile CSV");
  profile->add_option("kind", profile_kind, "nw_chi|nw_x|chi_overlap|anticommutator_kernel")->required();
  profile->add_option("--config", config_path);
  profile->add_option("--out", out_flag);
  profile->add_option("--points", pp.points);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      RunConfig config = config_from(config_path);
      if (seed) config.seed = *seed;
      const auto reports = run_suite(config, selector, timings);
      const std::string dir = output_dir(out_flag, config);
      write_file(dir, "report.json", report_json(reports));
      write_file(dir, "summary.txt", report_summary(reports));
      write_file(dir, "config.json", dump_config(config));
      return run_and_print(reports);
    }
    if (app.got_subcommand("config")) {
      std::cout << dump_config(RunConfig{});
      return 0;
    }
    if (normal->parsed()) {
      std::cout << algebra::normal_order(algebra::parse_word(word)).to_string() << "\n";
      return 0;
    }
    if (nw_profile->parsed()) {
      const RunConfig config;
      pp.hbar = config.hbar;
      const std::string csv = emit_profile(profile_kind_from_string(kind), pp, config);
      const std::string dir = output_dir(out_flag, config);
      write_file(dir, "profile_" + kind + ".csv", csv);
      std::cout << dir << "/profile_" << kind << ".csv\n";
      return 0;
    }
    if (nw_check->parsed()) return run_and_print(run_suite(config_from(config_path), "nw"));
    if (lorentz_check->parsed()) {
      RunConfig config = config_from(config_path);
      config.rapidities = {rapidity};
      return run_and_print(run_suite(config, "lorentz"));
    }
    if (profile->parsed()) {
      const RunConfig config = config_from(config_path);
      pp.mass = config.mass;
      pp.hbar = config.hbar;
      pp.cutoff = config.quadrature.cutoff_multiple * config.mass;
      pp.nodes = config.quadrature.nodes;
      const ProfileKind k = profile_kind_from_string(profile_kind);
      const std::string dir = output_dir(out_flag, config);
      write_file(dir, "profile_" + profile_kind + ".csv", emit_profile(k, pp, config));
      std::cout << dir << "/profile_" << profile_kind << ".csv\n";
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
