#include <gtest/gtest.h>

#include "fockbridge/lorentz.hpp"

using namespace fockbridge;
using namespace fockbridge::lorentz;

namespace {

OneParticleAmplitude packet(double k0 = 0.0, double x0 = 0.0) {
  return gaussian_amplitude(QuadratureGrid::standard(1.0), 1.0, k0, x0);
}

}  // namespace

TEST(BoostMomentum, IdentityAndRest) {
  const auto [k, w] = boost_momentum(0.7, 1.0, BoostParams{0.0});
  EXPECT_EQ(k, 0.7);
  EXPECT_DOUBLE_EQ(w, std::sqrt(1.49));
  const BoostParams b{0.4};
  const auto [kr, wr] = boost_momentum(0.0, 2.0, b);
  EXPECT_NEAR(kr, -b.gamma() * b.beta() * 2.0, 1e-15);
  EXPECT_NEAR(wr, b.gamma() * 2.0, 1e-15);
}

TEST(BoostMomentum, MassShell) {
  const QuadratureGrid g = QuadratureGrid::standard(1.0);
  for (double eta : {-1.0, 0.2, 0.5, 1.0}) {
    for (int i = 0; i < g.size(); i += 7) {
      const auto [k, w] = boost_momentum(g.nodes()[i], 1.0, BoostParams{eta});
      EXPECT_NEAR((w - k) * (w + k), 1.0, 1e-12 * std::max(1.0, w * w));
    }
  }
}

TEST(BoostAmplitude, IdentityAndNorm) {
  const auto f = packet();
  EXPECT_EQ((boost_amplitude(f, BoostParams{0.0}).values - f.values).norm(), 0.0);
  const double n = particle_number(f);
  for (double eta : {0.2, 0.5, 1.0}) {
    EXPECT_NEAR(particle_number(boost_amplitude(f, BoostParams{eta})), n, 1e-6 * n) << eta;
  }
}

TEST(BoostAmplitude, RoundTripAndGroup) {
  const auto f = packet(0.3, 0.5);
  const auto back = boost_amplitude(boost_amplitude(f, BoostParams{0.5}), BoostParams{-0.5});
  EXPECT_LE((back.values - f.values).cwiseAbs().maxCoeff(), 1e-5);
  const auto two = boost_amplitude(boost_amplitude(f, BoostParams{0.2}), BoostParams{0.5});
  const auto one = boost_amplitude(f, BoostParams{0.7});
  EXPECT_LE((two.values - one.values).cwiseAbs().maxCoeff(), 2e-5);
}

TEST(BoostAmplitude, SupportEscape) {
  const auto f = gaussian_amplitude(QuadratureGrid(1.0, 20.0, 2001), 1.0);
  try {
    boost_amplitude(f, BoostParams{2.5});
    FAIL() << "expected SupportEscape";
  } catch (const SupportEscape& e) {
    EXPECT_GT(e.required_cutoff(), 20.0);
  }
}

TEST(FourMomentum, RestAndParity) {
  const auto narrow = gaussian_amplitude(QuadratureGrid::standard(1.0), 0.01);
  const auto [e, p] = four_momentum_expectation(narrow);
  const double n = particle_number(narrow);
  EXPECT_NEAR(e / n, 1.0, 1e-3);
  EXPECT_NEAR(p, 0.0, 1e-15);
  const auto [e2, p2] = four_momentum_expectation(packet());
  EXPECT_NEAR(p2, 0.0, 1e-14);
}

TEST(FourMomentum, TransformsAsTwoVector) {
  const auto f = packet(0.2);
  const auto [e, p] = four_momentum_expectation(f);
  for (double eta : {0.2, 0.5, 1.0}) {
    const auto [eb, pb] = four_momentum_expectation(boost_amplitude(f, BoostParams{eta}));
    const auto [ee, pe] = transform_four_vector(e, p, BoostParams{eta});
    EXPECT_NEAR(eb, ee, 1e-6 * std::abs(ee));
    EXPECT_NEAR(pb, pe, 1e-6 * std::hypot(ee, pe));
  }
}

TEST(Position, CommutatorInEveryFrame) {
  const auto f = packet(0.0, 0.4);
  for (double eta : {0.0, 0.2, 0.5, 1.0}) {
    const PositionReport r = position_expectation_and_commutator(f, BoostParams{eta});
    EXPECT_LE(r.commutator_deviation, eta == 0.0 ? 1e-6 : 1e-5) << eta;
  }
}

TEST(Position, ParityFlipsExpectation) {
  const auto f = packet(0.5, 0.8);
  const double x = position_expectation(f);
  EXPECT_NEAR(x, 0.8, 1e-8);
  EXPECT_NEAR(position_expectation(parity(f)), -x, 1e-12);
}

TEST(Position, NoiseGuard) {
  const auto coarse = gaussian_amplitude(QuadratureGrid(1.0, 40.0, 41), 0.3);
  EXPECT_THROW(apply_position(coarse), std::runtime_error);
}
