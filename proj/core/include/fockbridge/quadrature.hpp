#pragma once

#include "fockbridge/common.hpp"

namespace fockbridge {

/// Uniform trapezoid rule on [-K, K] for one-particle momentum integrals.
class QuadratureGrid {
 public:
  /// Requires an odd node count >= 3 and K >= 20 m.
  QuadratureGrid(double mass, double cutoff, int nodes, double hbar = 1.0);

  /// K = 40 m, 4001 nodes.
  static QuadratureGrid standard(double mass, double hbar = 1.0);

  double mass() const { return mass_; }
  double hbar() const { return hbar_; }
  double cutoff() const { return cutoff_; }
  double step() const { return step_; }
  int size() const { return static_cast<int>(nodes_.size()); }

  const RVector& nodes() const { return nodes_; }
  const RVector& weights() const { return weights_; }
  const RVector& omega() const { return omega_; }

  double integrate(const RVector& values) const { return weights_.dot(values); }
  Complex integrate(const CVector& values) const { return weights_.cast<Complex>().dot(values); }

 private:
  double mass_;
  double hbar_;
  double cutoff_;
  double step_;
  RVector nodes_;
  RVector weights_;
  RVector omega_;
};

}  // namespace fockbridge
