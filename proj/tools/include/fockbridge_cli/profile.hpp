#pragma once

#include <string>

#include "fockbridge_cli/config.hpp"

namespace fockbridge::cli {

enum class ProfileKind { NwChi, NwX, ChiOverlap, AnticommutatorKernel };

ProfileKind profile_kind_from_string(const std::string& name);
std::string_view to_string(ProfileKind kind);

struct ProfileParams {
  double mass = 1.0;
  double cutoff = 40.0;
  int nodes = 4001;
  double hbar = 1.0;
  int points = 201;
};

/// CSV text with a header row, 15 significant digits.
///   nw_chi: chi,re,im,abs      nw_x: x,re,im,abs
///   chi_overlap: distance,overlap,k0_oracle,relative_deviation
///   anticommutator_kernel: separation,value (lattice taken from the config)
std::string emit_profile(ProfileKind kind, const ProfileParams& params, const RunConfig& config);

}  // namespace fockbridge::cli
