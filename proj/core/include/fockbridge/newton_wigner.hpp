#pragma once

#include "fockbridge/common.hpp"
#include "fockbridge/quadrature.hpp"

namespace fockbridge::nw {

enum class Measure { Invariant, Plain };

/// Samples psi(p_i) on a quadrature grid. Invariant means <a|b> = int dp/omega a* b.
struct MomentumWavefunction {
  CVector samples;
  Measure measure = Measure::Invariant;
};

double norm(const QuadratureGrid& grid, const MomentumWavefunction& psi);

/// psi_x(p) = sqrt(omega_p / 2 pi) e^{-i p x / hbar}
MomentumWavefunction nw_state(const QuadratureGrid& grid, double x);

/// exp(-(p - p0)^2 / (4 w^2)), invariant measure.
MomentumWavefunction gaussian_state(const QuadratureGrid& grid, double p0, double width);

/// psi(chi) = (2 pi)^{-1/2} int dp/omega psi(p) e^{i p chi / hbar}
CVector chi_representation(const QuadratureGrid& grid, const MomentumWavefunction& psi, const RVector& chi);

/// psi(x) = (2 pi hbar)^{-1/2} int dp/sqrt(omega) psi(p) e^{i p x / hbar}
CVector x_representation(const QuadratureGrid& grid, const MomentumWavefunction& psi, const RVector& x);

/// <chi1|chi2> = int_{-K}^{K} dp/omega e^{i p (chi1 - chi2) / hbar} by quadrature.
Complex chi_overlap(const QuadratureGrid& grid, double chi1, double chi2);

/// Quadrature plus the analytic tail beyond K, approximating the uncut 2 K0(m d).
/// Throws for coincident points, where the uncut integral diverges.
Complex chi_overlap_continuum(const QuadratureGrid& grid, double chi1, double chi2);

/// Ci(x) for x > 0.
double cosine_integral(double x);

/// 2 int_K^inf cos(p a)/omega dp from the 1/p - m^2/(2 p^3) expansion of 1/omega.
double overlap_tail(double mass, double cutoff, double a);

/// Cutoff K0 profile: 2 K0(m a) - overlap_tail(m, K, a), with a = d / hbar.
double cutoff_bessel_k0_overlap(double mass, double cutoff, double distance, double hbar = 1.0);

enum class Representation { Chi, X };

/// FWHM of |psi_0| in the chosen representation.
double localization_width(const QuadratureGrid& grid, Representation representation);

struct MeasureConsistencyReport {
  double mass = 0.0;
  double wide_width = 0.0;
  double narrow_width = 0.0;
  /// |norm_route - norm_invariant| / norm_invariant
  double x_route_wide = 0.0;
  double chi_route_wide = 0.0;
  double x_route_narrow = 0.0;
  double chi_route_narrow = 0.0;
};

/// Gaussian test states of width m (wide) and 0.02 m (narrow), centred at p = 0.
MeasureConsistencyReport measure_consistency_check(double mass = 1.0, double hbar = 1.0);

/// |norm of x_representation - invariant norm| / invariant norm on an automatic x-grid.
double x_route_norm_deviation(const QuadratureGrid& grid, const MomentumWavefunction& psi, double width);
/// Same for the chi route, whose Parseval norm is int dp |psi|^2 / omega^2.
double chi_route_norm_deviation(const QuadratureGrid& grid, const MomentumWavefunction& psi, double width);

}  // namespace fockbridge::nw
