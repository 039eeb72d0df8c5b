#pragma once

#include <stdexcept>
#include <utility>

#include "fockbridge/common.hpp"
#include "fockbridge/quadrature.hpp"

namespace fockbridge::lorentz {

struct BoostParams {
  double rapidity = 0.0;

  double beta() const;
  double gamma() const;
};

/// (k~, omega~) = (gamma (k - beta omega), gamma (omega - beta k))
std::pair<double, double> boost_momentum(double k, double mass, const BoostParams& params);

/// |f> = int dk f(k) a_k^+ |0>, N[f] = int |f|^2 dk.
struct OneParticleAmplitude {
  QuadratureGrid grid;
  CVector values;
};

class SupportEscape : public std::runtime_error {
 public:
  SupportEscape(const std::string& what, double required_cutoff)
      : std::runtime_error(what), required_cutoff_(required_cutoff) {}
  double required_cutoff() const { return required_cutoff_; }

 private:
  double required_cutoff_;
};

/// Amplitudes below this fraction of the peak count as outside the support.
inline constexpr double kSupportThreshold = 1e-8;

/// Gaussian exp(-(k - k0)^2 / (4 sigma^2)) e^{-i k x0}.
OneParticleAmplitude gaussian_amplitude(const QuadratureGrid& grid, double sigma, double k0 = 0.0,
                                        double x0 = 0.0);

double particle_number(const OneParticleAmplitude& f);

/// f~(k) = sqrt(omega_{k~} / omega_k) f(k~), cubic B-spline resampling, zero outside the grid.
/// Throws SupportEscape with the cutoff the boosted support would need.
OneParticleAmplitude boost_amplitude(const OneParticleAmplitude& f, const BoostParams& params);

/// (E, P) = (int hbar omega |f|^2, int hbar k |f|^2)
std::pair<double, double> four_momentum_expectation(const OneParticleAmplitude& f);

/// Lambda applied to (E, P) in the active convention used by boost_amplitude.
std::pair<double, double> transform_four_vector(double energy, double momentum, const BoostParams& params);

/// d/dk on the grid by FFT of the periodic extension. Throws std::runtime_error when
/// the spectrum is not resolved (grid too coarse) or the amplitude touches the edges.
CVector spectral_derivative(const QuadratureGrid& grid, const CVector& values);

/// X = i d/dk
CVector apply_position(const OneParticleAmplitude& f);

struct PositionReport {
  Complex commutator_ratio;  // <[X,P]> / N
  double commutator_deviation = 0.0;  // |ratio - i hbar|
  double position_before = 0.0;
  double position_after = 0.0;
  double number = 0.0;
};

/// Evaluates <f~|[X,P]|f~>/N[f~] and <X> before and after the boost.
PositionReport position_expectation_and_commutator(const OneParticleAmplitude& f, const BoostParams& params);

/// <X> = <f|X|f> / N[f]
double position_expectation(const OneParticleAmplitude& f);

/// k -> -k
OneParticleAmplitude parity(const OneParticleAmplitude& f);

}  // namespace fockbridge::lorentz
