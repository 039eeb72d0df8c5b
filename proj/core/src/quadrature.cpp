#include "fockbridge/quadrature.hpp"

#include <cmath>
#include <string>

namespace fockbridge {

QuadratureGrid::QuadratureGrid(double mass, double cutoff, int nodes, double hbar)
    : mass_(mass), hbar_(hbar), cutoff_(cutoff) {
  if (!(mass > 0.0)) throw std::invalid_argument("quadrature: mass must be > 0");
  if (!(hbar > 0.0)) throw std::invalid_argument("quadrature: hbar must be > 0");
  if (nodes < 3 || nodes % 2 == 0) {
    throw std::invalid_argument("quadrature: node count must be odd and >= 3, got " + std::to_string(nodes));
  }
  if (!(cutoff >= 20.0 * mass)) {
    throw std::invalid_argument("quadrature: cutoff K must be >= 20 m for tail control");
  }
  step_ = 2.0 * cutoff / (nodes - 1);
  nodes_.resize(nodes);
  weights_.setConstant(nodes, step_);
  weights_[0] = weights_[nodes - 1] = 0.5 * step_;
  const int half = (nodes - 1) / 2;
  for (int i = 0; i < nodes; ++i) nodes_[i] = (i - half) * step_;
  omega_ = (nodes_.array().square() + mass * mass).sqrt().matrix();
}

QuadratureGrid QuadratureGrid::standard(double mass, double hbar) {
  return QuadratureGrid(mass, 40.0 * mass, 4001, hbar);
}

}  // namespace fockbridge
