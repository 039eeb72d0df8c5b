#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fockbridge/grid.hpp"

namespace fockbridge::cli {

/// Malformed or inconsistent configuration. what() carries the line or field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class StatisticsChoice { Bose, Fermi, Both };

struct QuadratureConfig {
  double cutoff_multiple = 40.0;  // K = cutoff_multiple * m
  int nodes = 4001;
};

struct AntiparticleConfig {
  int modes = 3;
  double box_length = 5.0;
  int n_max = 2;  // per family
  double charge = 1.0;
};

struct RunConfig {
  int modes = 5;
  double box_length = 2.0 * kPi;
  double mass = 1.0;
  double hbar = 1.0;
  int n_max = 4;
  StatisticsChoice statistics = StatisticsChoice::Both;
  QuadratureConfig quadrature;
  AntiparticleConfig antiparticles;
  std::vector<double> rapidities{0.2, 0.5, 1.0};
  std::map<std::string, double> tolerances;
  std::string output = "fockbridge-out";
  std::uint64_t seed = 20240917;

  LatticeSpec lattice(Statistics s) const;
  std::vector<Statistics> statistics_list() const;
};

/// Parses JSON text. Missing fields keep their defaults; unknown fields are errors.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// The fully resolved config as pretty JSON (the defaults when given RunConfig{}).
std::string dump_config(const RunConfig& config);

}  // namespace fockbridge::cli
