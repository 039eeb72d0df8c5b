#include "fockbridge_cli/profile.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "fockbridge/fields.hpp"
#include "fockbridge/newton_wigner.hpp"

namespace fockbridge::cli {

namespace {

std::string row(std::initializer_list<double> values) {
  std::string out;
  char buf[40];
  for (double v : values) {
    if (!out.empty()) out += ',';
    std::snprintf(buf, sizeof buf, "%.15g", v);
    out += buf;
  }
  return out + "\n";
}

RVector symmetric_points(double half_width, int points) {
  RVector v(points);
  for (int i = 0; i < points; ++i) v[i] = -half_width + 2.0 * half_width * i / (points - 1);
  return v;
}

}  // namespace

ProfileKind profile_kind_from_string(const std::string& name) {
  if (name == "nw_chi") return ProfileKind::NwChi;
  if (name == "nw_x") return ProfileKind::NwX;
  if (name == "chi_overlap") return ProfileKind::ChiOverlap;
  if (name == "anticommutator_kernel") return ProfileKind::AnticommutatorKernel;
  throw ConfigError("unknown profile kind '" + name + "' (nw_chi, nw_x, chi_overlap, anticommutator_kernel)");
}

std::string_view to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::NwChi: return "nw_chi";
    case ProfileKind::NwX: return "nw_x";
    case ProfileKind::ChiOverlap: return "chi_overlap";
    case ProfileKind::AnticommutatorKernel: return "anticommutator_kernel";
  }
  return "";
}

std::string emit_profile(ProfileKind kind, const ProfileParams& p, const RunConfig& config) {
  if (p.points < 3) throw ConfigError("profile: points must be >= 3");
  if (kind == ProfileKind::AnticommutatorKernel) {
    const ModeGrid g = build_grid(config.lattice(Statistics::Fermi));
    const RVector kernel = anticommutator_kernel(g);
    std::string csv = "separation,value\n";
    for (int n = 0; n <= (g.size() - 1) / 2; ++n) csv += row({n * g.dx(), kernel[n]});
    return csv;
  }

  const QuadratureGrid q(p.mass, p.cutoff, p.nodes, p.hbar);
  const double compton = p.hbar / p.mass;
  if (kind == ProfileKind::ChiOverlap) {
    std::string csv = "distance,overlap,k0_oracle,relative_deviation\n";
    for (int i = 1; i <= p.points; ++i) {
      const double d = 5.0 * compton * i / p.points;
      const double overlap = nw::chi_overlap(q, d, 0.0).real();
      const double k0 = nw::cutoff_bessel_k0_overlap(p.mass, p.cutoff, d, p.hbar);
      csv += row({d, overlap, k0, std::abs(overlap - k0) / std::abs(k0)});
    }
    return csv;
  }

  const auto psi = nw::nw_state(q, 0.0);
  const bool chi = kind == ProfileKind::NwChi;
  // chi profile spreads over a Compton length, x profile over 1/K
  const RVector at = symmetric_points(chi ? 5.0 * compton : 20.0 * p.hbar / p.cutoff, p.points);
  const CVector values = chi ? nw::chi_representation(q, psi, at) : nw::x_representation(q, psi, at);
  std::string csv = chi ? "chi,re,im,abs\n" : "x,re,im,abs\n";
  for (int i = 0; i < p.points; ++i) csv += row({at[i], values[i].real(), values[i].imag(), std::abs(values[i])});
  return csv;
}

}  // namespace fockbridge::cli
