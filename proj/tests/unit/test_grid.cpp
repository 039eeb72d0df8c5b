#include <gtest/gtest.h>

#include <random>

#include "fockbridge/grid.hpp"

using namespace fockbridge;

namespace {

LatticeSpec spec(int m, double l, double mass) {
  LatticeSpec s;
  s.mode_count = m;
  s.box_length = l;
  s.mass = mass;
  return s;
}

}  // namespace

TEST(Grid, ThreeModesInUnitBox) {
  const ModeGrid g = build_grid(spec(3, 2 * kPi, 1.0));
  EXPECT_NEAR(g.momenta()[0], -1.0, 1e-15);
  EXPECT_NEAR(g.momenta()[1], 0.0, 1e-15);
  EXPECT_NEAR(g.momenta()[2], 1.0, 1e-15);
  EXPECT_NEAR(g.dk(), 1.0, 1e-15);
  EXPECT_NEAR(g.frequencies()[0], std::sqrt(2.0), 1e-15);
  EXPECT_EQ(g.frequencies()[g.zero_mode()], 1.0);
  EXPECT_EQ(g.label(g.zero_mode()), 0);
}

TEST(Grid, SpacingIdentity) {
  const ModeGrid g = build_grid(spec(5, 10.0, 0.5));
  EXPECT_NEAR(g.dk(), kPi / 5, 1e-15);
  EXPECT_NEAR(g.dx(), 2.0, 1e-15);
  EXPECT_NEAR(g.dk() * g.dx() * 5, 2 * kPi, 1e-13);
}

TEST(Grid, DispersionEvenAndMinimalAtZero) {
  const ModeGrid g = build_grid(spec(9, 7.0, 0.3));
  for (int i = 0; i < g.size(); ++i) {
    EXPECT_EQ(g.frequencies()[i], g.frequencies()[g.size() - 1 - i]);
    EXPECT_GE(g.frequencies()[i], 0.3);
    if (i != g.zero_mode()) EXPECT_GT(g.frequencies()[i], 0.3);
  }
}

TEST(Grid, RejectsBadSpecs) {
  EXPECT_THROW(build_grid(spec(4, 1.0, 1.0)), std::invalid_argument);
  EXPECT_THROW(build_grid(spec(5, 1.0, 0.0)), std::invalid_argument);
  EXPECT_THROW(build_grid(spec(5, -1.0, 1.0)), std::invalid_argument);
  LatticeSpec f = spec(3, 1.0, 1.0);
  f.statistics = Statistics::Fermi;
  f.n_max = 4;
  EXPECT_THROW(build_grid(f), std::invalid_argument);
}

TEST(Grid, DeltaAtSiteZeroIsUniformInModes) {
  const ModeGrid g = build_grid(spec(7, 3.0, 1.0));
  CVector delta = CVector::Zero(7);
  delta[0] = 1.0;
  const CVector modes = mode_site_transform(g, delta, Direction::ToMode);
  for (int j = 0; j < 7; ++j) EXPECT_NEAR(std::abs(modes[j]), 1.0 / std::sqrt(7.0), 1e-15);
}

TEST(Grid, PlaneWaveHasFlatModulus) {
  const ModeGrid g = build_grid(spec(7, 3.0, 1.0));
  const int j = 5;
  CVector mode = CVector::Zero(7);
  mode[j] = 1.0;
  const CVector site = mode_site_transform(g, mode, Direction::ToSite);
  for (int n = 0; n < 7; ++n) {
    const Complex expected = std::exp(Complex(0, g.momenta()[j] * g.positions()[n])) / std::sqrt(7.0);
    EXPECT_NEAR(std::abs(site[n] - expected), 0.0, 1e-14);
  }
}

TEST(Grid, TransformIsUnitary) {
  const ModeGrid g = build_grid(spec(31, 11.0, 1.0));
  std::mt19937_64 rng(7);
  std::normal_distribution<double> d;
  CVector v(31);
  for (auto& x : v) x = Complex(d(rng), d(rng));
  const CVector back = mode_site_transform(g, mode_site_transform(g, v, Direction::ToSite), Direction::ToMode);
  EXPECT_LE((back - v).norm(), 1e-13 * v.norm());
  EXPECT_NEAR(mode_site_transform(g, v, Direction::ToSite).norm(), v.norm(), 1e-12 * v.norm());
  EXPECT_THROW(mode_site_transform(g, CVector::Zero(30), Direction::ToSite), std::invalid_argument);
}
