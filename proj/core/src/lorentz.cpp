#include "fockbridge/lorentz.hpp"

#include <cmath>
#include <mutex>
#include <string>

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <fftw3.h>

namespace fockbridge::lorentz {

namespace {

const Complex kI(0.0, 1.0);

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::pair<double, double> support(const OneParticleAmplitude& f) {
  const RVector mag = f.values.cwiseAbs();
  const double threshold = kSupportThreshold * mag.maxCoeff();
  int lo = 0, hi = static_cast<int>(mag.size()) - 1;
  while (lo < hi && mag[lo] <= threshold) ++lo;
  while (hi > lo && mag[hi] <= threshold) --hi;
  return {f.grid.nodes()[lo], f.grid.nodes()[hi]};
}

}  // namespace

double BoostParams::beta() const { return std::tanh(rapidity); }
double BoostParams::gamma() const { return std::cosh(rapidity); }

std::pair<double, double> boost_momentum(double k, double mass, const BoostParams& params) {
  const double w = std::sqrt(k * k + mass * mass);
  const double g = params.gamma();
  // gamma*beta = sinh(eta) avoids the tanh*cosh rounding
  const double gb = std::sinh(params.rapidity);
  return {g * k - gb * w, g * w - gb * k};
}

OneParticleAmplitude gaussian_amplitude(const QuadratureGrid& grid, double sigma, double k0, double x0) {
  OneParticleAmplitude f{grid, CVector(grid.size())};
  for (int i = 0; i < grid.size(); ++i) {
    const double k = grid.nodes()[i];
    f.values[i] = std::exp(-(k - k0) * (k - k0) / (4.0 * sigma * sigma)) * std::exp(-kI * (k * x0));
  }
  return f;
}

double particle_number(const OneParticleAmplitude& f) { return f.grid.integrate(RVector(f.values.cwiseAbs2())); }

OneParticleAmplitude boost_amplitude(const OneParticleAmplitude& f, const BoostParams& params) {
  const QuadratureGrid& grid = f.grid;
  const double m = grid.mass();
  if (params.rapidity == 0.0) return f;

  // The boosted packet lives where k~ falls inside the original support.
  const auto [lo, hi] = support(f);
  const BoostParams inverse{-params.rapidity};
  const double edge1 = boost_momentum(lo, m, inverse).first;
  const double edge2 = boost_momentum(hi, m, inverse).first;
  const double required = std::max(std::abs(edge1), std::abs(edge2));
  if (required > grid.cutoff()) {
    throw SupportEscape("boost_amplitude: boosted support reaches |k| = " + std::to_string(required) +
                            " beyond the cutoff " + std::to_string(grid.cutoff()) + "; need K >= " +
                            std::to_string(required),
                        required);
  }

  const RVector re = f.values.real();
  const RVector im = f.values.imag();
  const double start = grid.nodes()[0];
  boost::math::interpolators::cardinal_cubic_b_spline<double> spline_re(re.data(), re.size(), start, grid.step());
  boost::math::interpolators::cardinal_cubic_b_spline<double> spline_im(im.data(), im.size(), start, grid.step());

  OneParticleAmplitude out{grid, CVector::Zero(grid.size())};
  for (int i = 0; i < grid.size(); ++i) {
    const auto [kt, wt] = boost_momentum(grid.nodes()[i], m, params);
    if (kt < start || kt > grid.cutoff()) continue;
    const double jacobian = std::sqrt(wt / grid.omega()[i]);
    out.values[i] = jacobian * Complex(spline_re(kt), spline_im(kt));
  }
  return out;
}

std::pair<double, double> four_momentum_expectation(const OneParticleAmplitude& f) {
  const RVector density = f.values.cwiseAbs2();
  const double hbar = f.grid.hbar();
  return {hbar * f.grid.integrate(RVector(density.cwiseProduct(f.grid.omega()))),
          hbar * f.grid.integrate(RVector(density.cwiseProduct(f.grid.nodes())))};
}

std::pair<double, double> transform_four_vector(double energy, double momentum, const BoostParams& params) {
  const double g = params.gamma();
  const double gb = std::sinh(params.rapidity);
  return {g * energy + gb * momentum, g * momentum + gb * energy};
}

CVector spectral_derivative(const QuadratureGrid& grid, const CVector& values) {
  const int n = static_cast<int>(values.size());
  if (n != grid.size()) throw std::invalid_argument("spectral_derivative: length mismatch");
  const double peak = values.cwiseAbs().maxCoeff();
  if (std::abs(values[0]) > kSupportThreshold * peak || std::abs(values[n - 1]) > kSupportThreshold * peak) {
    throw std::runtime_error("spectral_derivative: amplitude does not vanish at the cutoff");
  }

  CVector spectrum(n);
  CVector work = values;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_plan plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(work.data()),
                                      reinterpret_cast<fftw_complex*>(spectrum.data()), FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  }

  // Noise guard: the top tenth of the frequency band must be empty.
  const int half = n / 2;
  double tail = 0.0;
  for (int q = half - n / 20; q <= half; ++q) {
    tail = std::max({tail, std::abs(spectrum[q]), std::abs(spectrum[n - q])});
  }
  if (tail > kSupportThreshold * spectrum.cwiseAbs().maxCoeff()) {
    throw std::runtime_error("spectral_derivative: spectrum not resolved, grid too coarse for this amplitude");
  }

  const double period = n * grid.step();
  for (int q = 0; q < n; ++q) {
    const int signed_q = q <= half ? q : q - n;
    spectrum[q] *= kI * (2.0 * kPi * signed_q / period);
  }
  CVector out(n);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_plan plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(spectrum.data()),
                                      reinterpret_cast<fftw_complex*>(out.data()), FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  }
  return out / static_cast<double>(n);
}

CVector apply_position(const OneParticleAmplitude& f) { return kI * spectral_derivative(f.grid, f.values); }

double position_expectation(const OneParticleAmplitude& f) {
  const CVector xf = apply_position(f);
  const Complex v = f.grid.integrate(CVector(f.values.conjugate().cwiseProduct(xf)));
  return v.real() / particle_number(f);
}

PositionReport position_expectation_and_commutator(const OneParticleAmplitude& f, const BoostParams& params) {
  PositionReport r;
  r.position_before = position_expectation(f);
  const OneParticleAmplitude g = boost_amplitude(f, params);
  const double hbar = g.grid.hbar();
  const CVector p_g = (hbar * g.grid.nodes()).cast<Complex>().cwiseProduct(g.values);
  const CVector x_p_g = kI * spectral_derivative(g.grid, p_g);
  const CVector p_x_g = (hbar * g.grid.nodes()).cast<Complex>().cwiseProduct(apply_position(g));
  r.number = particle_number(g);
  r.commutator_ratio = g.grid.integrate(CVector(g.values.conjugate().cwiseProduct(x_p_g - p_x_g))) / r.number;
  r.commutator_deviation = std::abs(r.commutator_ratio - Complex(0.0, hbar));
  r.position_after = position_expectation(g);
  return r;
}

OneParticleAmplitude parity(const OneParticleAmplitude& f) {
  OneParticleAmplitude out = f;
  out.values = f.values.reverse();
  return out;
}

}  // namespace fockbridge::lorentz
