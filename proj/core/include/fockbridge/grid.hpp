#pragma once

#include "fockbridge/common.hpp"

namespace fockbridge {

/// Discretization parameters for the 1D periodic box. Units: c = 1.
struct LatticeSpec {
  int mode_count = 5;  // odd, >= 3
  double box_length = 2.0 * kPi;
  double mass = 1.0;
  double hbar = 1.0;
  int dimension = 1;
  Statistics statistics = Statistics::Bose;
  int n_max = 3;  // total particle-number truncation

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

enum class Direction { ToSite, ToMode };

/// Momentum and position lattices of the box.
///
/// Modes are stored in ascending momentum order: storage index i carries the
/// signed label j = i - (M-1)/2 and momentum k_j = 2*pi*j/L, so the zero mode
/// sits at index (M-1)/2. Sites are x_n = n*L/M for n = 0..M-1. The mode/site
/// transform is the unitary DFT b_n = M^{-1/2} sum_j exp(i k_j x_n) a_j.
class ModeGrid {
 public:
  explicit ModeGrid(const LatticeSpec& spec);

  int size() const { return static_cast<int>(momenta_.size()); }
  int label(int index) const { return index - (size() - 1) / 2; }
  int zero_mode() const { return (size() - 1) / 2; }

  double mass() const { return mass_; }
  double hbar() const { return hbar_; }
  double box_length() const { return length_; }
  double dk() const { return dk_; }
  double dx() const { return dx_; }

  const RVector& momenta() const { return momenta_; }
  const RVector& frequencies() const { return frequencies_; }
  const RVector& positions() const { return positions_; }

  /// U with U(n, j) = exp(i k_j x_n) / sqrt(M); columns are modes, rows sites.
  const CMatrix& site_transform() const { return transform_; }

  CVector transform(const CVector& amplitudes, Direction direction) const;

  /// Site-space matrix of W^s = (m^2 - d^2/dx^2)^{s/2}: U diag(omega^s) U^+.
  CMatrix site_kernel(double exponent) const;
  /// Spectral derivative in site space: U diag(i k) U^+ (real antisymmetric).
  CMatrix site_derivative() const;

  /// One-particle position operator in the mode basis: U^+ diag(x) U.
  CMatrix position_operator() const;
  /// One-particle momentum operator in the mode basis: diag(hbar k).
  CMatrix momentum_operator() const;
  /// One-particle energy operator in the mode basis: diag(hbar omega).
  CMatrix energy_operator() const;

 private:
  double mass_;
  double hbar_;
  double length_;
  double dk_;
  double dx_;
  RVector momenta_;
  RVector frequencies_;
  RVector positions_;
  CMatrix transform_;
};

ModeGrid build_grid(const LatticeSpec& spec);

CVector mode_site_transform(const ModeGrid& grid, const CVector& amplitudes, Direction direction);

}  // namespace fockbridge
