#include "fockbridge/grid.hpp"

#include <cmath>
#include <string>

namespace fockbridge {

std::string_view to_string(Statistics s) {
  return s == Statistics::Bose ? "bose" : "fermi";
}

Statistics statistics_from_string(std::string_view name) {
  if (name == "bose" || name == "Bose") return Statistics::Bose;
  if (name == "fermi" || name == "Fermi") return Statistics::Fermi;
  throw std::invalid_argument("statistics: expected \"bose\" or \"fermi\", got \"" +
                              std::string(name) + "\"");
}

void LatticeSpec::validate() const {
  if (mode_count < 3 || mode_count % 2 == 0) {
    throw std::invalid_argument("mode_count: must be an odd integer >= 3, got " +
                                std::to_string(mode_count));
  }
  if (!(box_length > 0.0)) throw std::invalid_argument("box_length: must be > 0");
  if (!(mass > 0.0)) throw std::invalid_argument("mass: must be > 0");
  if (!(hbar > 0.0)) throw std::invalid_argument("hbar: must be > 0");
  if (dimension != 1) throw std::invalid_argument("dimension: only 1 is supported");
  if (n_max < 1) throw std::invalid_argument("n_max: must be >= 1");
  if (statistics == Statistics::Fermi && n_max > mode_count) {
    throw std::invalid_argument("n_max: must not exceed mode_count for fermi statistics");
  }
}

ModeGrid::ModeGrid(const LatticeSpec& spec)
    : mass_(spec.mass), hbar_(spec.hbar), length_(spec.box_length) {
  spec.validate();
  const int m = spec.mode_count;
  dk_ = 2.0 * kPi / length_;
  dx_ = length_ / m;
  momenta_.resize(m);
  frequencies_.resize(m);
  positions_.resize(m);
  for (int i = 0; i < m; ++i) {
    momenta_[i] = dk_ * label(i);
    frequencies_[i] = std::sqrt(momenta_[i] * momenta_[i] + mass_ * mass_);
    positions_[i] = i * dx_;
  }
  // exp(i k_j x_n) = exp(2 pi i j n / M); reduce j*n mod M before the trig call.
  transform_.resize(m, m);
  const double norm = 1.0 / std::sqrt(static_cast<double>(m));
  for (int n = 0; n < m; ++n) {
    for (int i = 0; i < m; ++i) {
      const long phase = ((static_cast<long>(label(i)) * n) % m + m) % m;
      const double angle = 2.0 * kPi * static_cast<double>(phase) / m;
      transform_(n, i) = Complex(std::cos(angle), std::sin(angle)) * norm;
    }
  }
}

CVector ModeGrid::transform(const CVector& amplitudes, Direction direction) const {
  if (amplitudes.size() != size()) {
    throw std::invalid_argument("mode_site_transform: expected length " + std::to_string(size()) +
                                ", got " + std::to_string(amplitudes.size()));
  }
  if (direction == Direction::ToSite) return transform_ * amplitudes;
  return transform_.adjoint() * amplitudes;
}

CMatrix ModeGrid::site_kernel(double exponent) const {
  RVector diag(size());
  for (int i = 0; i < size(); ++i) diag[i] = std::pow(frequencies_[i], exponent);
  CMatrix k = transform_ * diag.cast<Complex>().asDiagonal() * transform_.adjoint();
  // Even multiplier: the kernel is real symmetric up to rounding.
  return k.real().cast<Complex>();
}

CMatrix ModeGrid::site_derivative() const {
  CVector diag = (Complex(0.0, 1.0) * momenta_.cast<Complex>());
  CMatrix d = transform_ * diag.asDiagonal() * transform_.adjoint();
  return d.real().cast<Complex>();
}

CMatrix ModeGrid::position_operator() const {
  return transform_.adjoint() * positions_.cast<Complex>().asDiagonal() * transform_;
}

CMatrix ModeGrid::momentum_operator() const {
  return (hbar_ * momenta_).cast<Complex>().asDiagonal();
}

CMatrix ModeGrid::energy_operator() const {
  return (hbar_ * frequencies_).cast<Complex>().asDiagonal();
}

ModeGrid build_grid(const LatticeSpec& spec) {
  if (spec.mode_count % 2 == 0) {
    throw std::invalid_argument("mode_count: even grids lack the k <-> -k pairing; use an odd count");
  }
  return ModeGrid(spec);
}

CVector mode_site_transform(const ModeGrid& grid, const CVector& amplitudes, Direction direction) {
  return grid.transform(amplitudes, direction);
}

}  // namespace fockbridge
