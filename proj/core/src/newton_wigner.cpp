#include "fockbridge/newton_wigner.hpp"

#include <cmath>

#include <boost/math/tools/roots.hpp>
#include <gsl/gsl_sf_expint.h>

namespace fockbridge::nw {

namespace {

const Complex kI(0.0, 1.0);

CVector phases(const QuadratureGrid& grid, double x) {
  return (kI * (grid.nodes().array() * (x / grid.hbar()))).exp().matrix();
}

// Automatic position grid for a state of momentum width w centred at p = 0:
// spacing resolves the band, extent covers both the Gaussian spread and the
// e^{-m|x|} tail from the branch points of omega.
RVector position_grid(const QuadratureGrid& grid, double width) {
  const double band = std::min(grid.cutoff(), 12.0 * width);
  const double spacing = 0.5 * kPi * grid.hbar() / band;
  const double extent = grid.hbar() * (40.0 / grid.mass() + 12.0 / width);
  const double period = 2.0 * kPi * grid.hbar() / grid.step();
  if (2.0 * extent >= period) {
    throw std::invalid_argument("measure check: position window exceeds the quadrature period; refine the grid");
  }
  const int half = static_cast<int>(std::ceil(extent / spacing));
  RVector x(2 * half + 1);
  for (int i = 0; i < x.size(); ++i) x[i] = (i - half) * spacing;
  return x;
}

double trapezoid_norm(const CVector& values, double spacing) {
  return spacing * (values.squaredNorm() - 0.5 * (std::norm(values[0]) + std::norm(values[values.size() - 1])));
}

}  // namespace

double norm(const QuadratureGrid& grid, const MomentumWavefunction& psi) {
  const RVector density = psi.samples.cwiseAbs2();
  if (psi.measure == Measure::Invariant) return grid.integrate(RVector(density.cwiseQuotient(grid.omega())));
  return grid.integrate(density);
}

MomentumWavefunction nw_state(const QuadratureGrid& grid, double x) {
  MomentumWavefunction psi;
  const RVector amp = (grid.omega() / (2.0 * kPi)).cwiseSqrt();
  psi.samples = amp.cast<Complex>().cwiseProduct(phases(grid, -x));
  return psi;
}

MomentumWavefunction gaussian_state(const QuadratureGrid& grid, double p0, double width) {
  MomentumWavefunction psi;
  psi.samples = (-(grid.nodes().array() - p0).square() / (4.0 * width * width)).exp().matrix().cast<Complex>();
  return psi;
}

CVector chi_representation(const QuadratureGrid& grid, const MomentumWavefunction& psi, const RVector& chi) {
  const CVector f = (grid.weights().cwiseQuotient(grid.omega())).cast<Complex>().cwiseProduct(psi.samples);
  CVector out(chi.size());
  for (Eigen::Index i = 0; i < chi.size(); ++i) out[i] = phases(grid, chi[i]).transpose() * f;
  return out / std::sqrt(2.0 * kPi);
}

CVector x_representation(const QuadratureGrid& grid, const MomentumWavefunction& psi, const RVector& x) {
  const CVector f = (grid.weights().cwiseQuotient(grid.omega().cwiseSqrt())).cast<Complex>().cwiseProduct(psi.samples);
  CVector out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = phases(grid, x[i]).transpose() * f;
  return out / std::sqrt(2.0 * kPi * grid.hbar());
}

Complex chi_overlap(const QuadratureGrid& grid, double chi1, double chi2) {
  const CVector f = grid.omega().cwiseInverse().cast<Complex>();
  return grid.integrate(CVector(f.cwiseProduct(phases(grid, chi1 - chi2))));
}

double cosine_integral(double x) {
  if (!(x > 0.0)) throw std::domain_error("cosine_integral: x must be > 0");
  return gsl_sf_Ci(x);
}

double overlap_tail(double mass, double cutoff, double a) {
  a = std::abs(a);
  const double ka = cutoff * a;
  const double ci = cosine_integral(ka);
  const double j3 = std::cos(ka) / (2.0 * cutoff * cutoff) - a * std::sin(ka) / (2.0 * cutoff) + 0.5 * a * a * ci;
  return 2.0 * (-ci - 0.5 * mass * mass * j3);
}

Complex chi_overlap_continuum(const QuadratureGrid& grid, double chi1, double chi2) {
  const double a = (chi1 - chi2) / grid.hbar();
  if (a == 0.0) throw std::domain_error("chi_overlap_continuum: diverges at coincidence");
  return chi_overlap(grid, chi1, chi2) + overlap_tail(grid.mass(), grid.cutoff(), a);
}

double cutoff_bessel_k0_overlap(double mass, double cutoff, double distance, double hbar) {
  const double a = std::abs(distance) / hbar;
  if (a == 0.0) return 2.0 * std::asinh(cutoff / mass);
  return 2.0 * std::cyl_bessel_k(0.0, mass * a) - overlap_tail(mass, cutoff, a);
}

double localization_width(const QuadratureGrid& grid, Representation representation) {
  const MomentumWavefunction psi = nw_state(grid, 0.0);
  auto profile = [&](double s) {
    RVector at(1);
    at[0] = s;
    const CVector v = representation == Representation::Chi ? chi_representation(grid, psi, at)
                                                            : x_representation(grid, psi, at);
    return std::abs(v[0]);
  };
  const double peak = profile(0.0);
  const double half = 0.5 * peak;
  const double step = 0.01 * kPi * grid.hbar() / grid.cutoff();
  double lo = 0.0;
  double hi = step;
  const double limit = 100.0 * grid.hbar() / grid.mass();
  while (profile(hi) > half) {
    lo = hi;
    hi += step;
    if (hi > limit) throw std::runtime_error("localization_width: no half-maximum crossing found");
  }
  boost::uintmax_t iterations = 100;
  const auto [a, b] = boost::math::tools::toms748_solve([&](double s) { return profile(s) - half; }, lo, hi,
                                                        boost::math::tools::eps_tolerance<double>(40), iterations);
  return a + b;  // 2 * midpoint
}

double x_route_norm_deviation(const QuadratureGrid& grid, const MomentumWavefunction& psi, double width) {
  const RVector x = position_grid(grid, width);
  const CVector values = x_representation(grid, psi, x);
  const double reference = norm(grid, psi);
  return std::abs(trapezoid_norm(values, x[1] - x[0]) - reference) / reference;
}

double chi_route_norm_deviation(const QuadratureGrid& grid, const MomentumWavefunction& psi, double width) {
  const RVector chi = position_grid(grid, width);
  const CVector values = chi_representation(grid, psi, chi);
  const double reference = norm(grid, psi);
  return std::abs(trapezoid_norm(values, chi[1] - chi[0]) - reference) / reference;
}

MeasureConsistencyReport measure_consistency_check(double mass, double hbar) {
  MeasureConsistencyReport r;
  r.mass = mass;
  r.wide_width = mass;
  r.narrow_width = 0.02 * mass;

  const QuadratureGrid wide = QuadratureGrid::standard(mass, hbar);
  const MomentumWavefunction g = gaussian_state(wide, 0.0, r.wide_width);
  r.x_route_wide = x_route_norm_deviation(wide, g, r.wide_width);
  r.chi_route_wide = chi_route_norm_deviation(wide, g, r.wide_width);

  // Node spacing w/5 keeps the narrow packet resolved and its x-spread inside one period.
  const double cutoff = 20.0 * mass;
  const int nodes = 2 * static_cast<int>(std::ceil(cutoff / (r.narrow_width / 5.0))) + 1;
  const QuadratureGrid narrow(mass, cutoff, nodes, hbar);
  const MomentumWavefunction n = gaussian_state(narrow, 0.0, r.narrow_width);
  r.x_route_narrow = x_route_norm_deviation(narrow, n, r.narrow_width);
  r.chi_route_narrow = chi_route_norm_deviation(narrow, n, r.narrow_width);
  return r;
}

}  // namespace fockbridge::nw
