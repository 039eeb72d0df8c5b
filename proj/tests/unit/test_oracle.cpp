#include <gtest/gtest.h>

#include "fockbridge/fields.hpp"
#include "fockbridge/oracle.hpp"
#include "oracles.hpp"

using namespace fockbridge;
using namespace fockbridge::oracle;

namespace {

ModeGrid grid5() {
  LatticeSpec s;
  s.mode_count = 5;
  return build_grid(s);
}

}  // namespace

TEST(NParticleSpace, Dimensions) {
  EXPECT_EQ(build_space(2, 2, Symmetry::Antisymmetric).subspace_dimension(), 1);
  EXPECT_EQ(build_space(2, 3, Symmetry::Symmetric).subspace_dimension(), 6);
  EXPECT_THROW(build_space(3, 2, Symmetry::Antisymmetric), std::invalid_argument);
  EXPECT_THROW(build_space(8, 10, Symmetry::Symmetric), CapacityError);
}

TEST(NParticleSpace, ProjectorAndIsometry) {
  for (auto sym : {Symmetry::Symmetric, Symmetry::Antisymmetric}) {
    for (auto [n, m] : {std::pair{2, 3}, {3, 3}, {3, 4}, {2, 5}}) {
      const NParticleSpace space = build_space(n, m, sym);
      const CMatrix p = space.projector();
      const CMatrix v = CMatrix(space.isometry());
      EXPECT_LE((p * p - p).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LE((p - p.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
      const auto expected = sym == Symmetry::Symmetric ? oracles::bose_sector(m, n) : oracles::fermi_sector(m, n);
      EXPECT_NEAR(p.trace().real(), static_cast<double>(expected), 1e-10);
      EXPECT_EQ(space.subspace_dimension(), expected);
      EXPECT_LE((v.adjoint() * v - CMatrix::Identity(expected, expected)).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LE((v * v.adjoint() - p).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(DirectSum, NumberAndMomentumSquares) {
  const ModeGrid g = grid5();
  const NParticleSpace space = build_space(2, 5, Symmetry::Symmetric);
  const CMatrix n = direct_sum_operator(space, g, 0, 0).matrix;
  EXPECT_LE((n - 2.0 * CMatrix::Identity(15, 15)).cwiseAbs().maxCoeff(), 1e-12);

  const CMatrix p2 = direct_sum_operator(space, g, 0, 2).matrix;
  std::vector<double> expected;
  for (int i = 0; i < 5; ++i)
    for (int j = i; j < 5; ++j) expected.push_back(std::pow(g.momenta()[i], 2) + std::pow(g.momenta()[j], 2));
  std::sort(expected.begin(), expected.end());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(p2);
  for (int i = 0; i < 15; ++i) EXPECT_NEAR(es.eigenvalues()[i], expected[i], 1e-12);
}

TEST(DirectSum, SingleParticleIsOneParticleMatrix) {
  const ModeGrid g = grid5();
  const CMatrix xp = direct_sum_operator(build_space(1, 5, Symmetry::Symmetric), g, 1, 1).matrix;
  EXPECT_LE((xp - g.position_operator() * g.momentum_operator()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(CompareWithLift, SweepBothStatistics) {
  const ModeGrid g = grid5();
  for (auto stats : {Statistics::Bose, Statistics::Fermi}) {
    const FockBasis b(5, 3, stats);
    const RealScalarField field(g, b);
    for (int n = 1; n <= 3; ++n) {
      const NParticleSpace space = build_space(n, 5, symmetry_for(stats));
      for (int m = 0; m <= 3; ++m) {
        for (int k = 0; m + k <= 3; ++k) {
          const SparseOperator lifted = field.building_block(m, k);
          EXPECT_LE(compare_with_lift(space, g, m, k, lifted, b), 1e-10) << n << " " << m << " " << k;
          EXPECT_EQ(cross_sector_max(lifted, b), 0.0);
        }
      }
    }
  }
}

TEST(PermutationOperator, TwoParticleXP) {
  const ModeGrid g = grid5();
  for (auto stats : {Statistics::Bose, Statistics::Fermi}) {
    const FockBasis b(5, 2, stats);
    const NParticleSpace space = build_space(2, 5, symmetry_for(stats));
    const std::vector<algebra::NormalForm> words{algebra::NormalForm::letter(algebra::Letter::X),
                                                 algebra::NormalForm::letter(algebra::Letter::P)};
    const CMatrix explicit_sum = permutation_invariant_operator(space, g, words).matrix;
    const auto blocks = algebra::to_building_blocks(algebra::expand_permutation_sum(words));
    const CMatrix via_lifts = evaluate_building_blocks(blocks, b, g, 2);
    EXPECT_LE((explicit_sum - via_lifts).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(PermutationOperator, ThreeParticleWordsViaLifts) {
  const ModeGrid g = grid5();
  using algebra::Letter;
  using algebra::NormalForm;
  const std::vector<std::vector<NormalForm>> cases{
      {NormalForm::letter(Letter::P), NormalForm::letter(Letter::X), NormalForm::letter(Letter::X)},
      {algebra::normal_order(algebra::parse_word("PX")), NormalForm::letter(Letter::X),
       algebra::normal_order(algebra::parse_word("XP"))},
  };
  for (auto stats : {Statistics::Bose, Statistics::Fermi}) {
    const FockBasis b(5, 3, stats);
    const NParticleSpace space = build_space(3, 5, symmetry_for(stats));
    for (const auto& words : cases) {
      const CMatrix explicit_sum = permutation_invariant_operator(space, g, words).matrix;
      const CMatrix via_lifts = evaluate_expansion(algebra::expand_permutation_sum(words), b, g, 3);
      EXPECT_LE((explicit_sum - via_lifts).cwiseAbs().maxCoeff(), 1e-9 * explicit_sum.cwiseAbs().maxCoeff());
    }
  }
}

TEST(PermutationOperator, ThreeMomentaSymmetricPolynomial) {
  const ModeGrid g = grid5();
  const NParticleSpace space = build_space(3, 5, Symmetry::Symmetric);
  const std::vector<algebra::NormalForm> words(3, algebra::NormalForm::letter(algebra::Letter::P));
  const CMatrix op = permutation_invariant_operator(space, g, words).matrix;
  const FockBasis b(5, 3, Statistics::Bose);
  for (std::int64_t c = 0; c < space.subspace_dimension(); ++c) {
    const Occupation& occ = b.state(b.sector_offset(3) + c);
    double prod = 1.0;
    for (int j = 0; j < 5; ++j)
      for (int r = 0; r < occ[j]; ++r) prod *= g.momenta()[j];
    EXPECT_NEAR(std::abs(op(c, c) - Complex(6.0 * prod)), 0.0, 1e-11);
  }
  EXPECT_LE((op - CMatrix(op.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 1e-11);
}

TEST(PermutationOperator, SingleParticleWord) {
  const ModeGrid g = grid5();
  const auto w = algebra::normal_order(algebra::parse_word("PXX"));
  const CMatrix op = permutation_invariant_operator(build_space(1, 5, Symmetry::Symmetric), g, {w}).matrix;
  const CMatrix x = g.position_operator(), p = g.momentum_operator();
  // PXX = XXP - 2 i hbar X
  EXPECT_LE((op - (x * x * p - Complex(0.0, 2.0 * g.hbar()) * x)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(PermutationOperator, BuildingBlocksNeedExactCommutator) {
  // The block form reorders with [X, P] = i hbar, which lattice matrices violate.
  const ModeGrid g = grid5();
  const FockBasis b(5, 3, Statistics::Bose);
  const NParticleSpace space = build_space(3, 5, Symmetry::Symmetric);
  using algebra::Letter;
  const std::vector<algebra::NormalForm> words{algebra::NormalForm::letter(Letter::P),
                                               algebra::NormalForm::letter(Letter::X),
                                               algebra::NormalForm::letter(Letter::X)};
  const CMatrix explicit_sum = permutation_invariant_operator(space, g, words).matrix;
  const auto expansion = algebra::expand_permutation_sum(words);
  EXPECT_LE((explicit_sum - evaluate_expansion(expansion, b, g, 3)).cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_GT((explicit_sum - evaluate_building_blocks(algebra::to_building_blocks(expansion), b, g, 3))
                .cwiseAbs()
                .maxCoeff(),
            1.0);
}
