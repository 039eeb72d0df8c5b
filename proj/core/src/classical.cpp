#include <cmath>

#include "fockbridge/fields.hpp"

namespace fockbridge {

namespace {

void check_lengths(const ModeGrid& grid, const RVector& phi, const RVector& pi) {
  if (phi.size() != grid.size() || pi.size() != grid.size()) {
    throw std::invalid_argument("classical field: expected " + std::to_string(grid.size()) + " sites");
  }
}

RVector apply_real(const CMatrix& kernel, const RVector& v) { return kernel.real() * v; }

}  // namespace

double classical_number_functional(const ModeGrid& grid, const RVector& phi, const RVector& pi) {
  check_lengths(grid, phi, pi);
  const double s = phi.dot(apply_real(grid.site_kernel(1.0), phi)) + pi.dot(apply_real(grid.site_kernel(-1.0), pi));
  return 0.5 * grid.dx() * s / grid.hbar();
}

double classical_energy(const ModeGrid& grid, const RVector& phi, const RVector& pi) {
  check_lengths(grid, phi, pi);
  const RVector dphi = apply_real(grid.site_derivative(), phi);
  const double m2 = grid.mass() * grid.mass();
  return 0.5 * grid.dx() * (pi.squaredNorm() + dphi.squaredNorm() + m2 * phi.squaredNorm());
}

std::pair<RVector, RVector> classical_evolve(const ModeGrid& grid, const RVector& phi, const RVector& pi,
                                             double t) {
  check_lengths(grid, phi, pi);
  const CVector f = grid.transform(phi.cast<Complex>(), Direction::ToMode);
  const CVector g = grid.transform(pi.cast<Complex>(), Direction::ToMode);
  CVector ft(grid.size()), gt(grid.size());
  for (int j = 0; j < grid.size(); ++j) {
    const double w = grid.frequencies()[j];
    const double c = std::cos(w * t), s = std::sin(w * t);
    ft[j] = f[j] * c + g[j] * (s / w);
    gt[j] = -w * s * f[j] + g[j] * c;
  }
  return {grid.transform(ft, Direction::ToSite).real(), grid.transform(gt, Direction::ToSite).real()};
}

}  // namespace fockbridge
