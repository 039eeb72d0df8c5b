#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fockbridge/algebra.hpp"
#include "fockbridge/common.hpp"
#include "fockbridge/fock.hpp"
#include "fockbridge/grid.hpp"
#include "fockbridge/tensor.hpp"

namespace fockbridge::oracle {

enum class Symmetry { Symmetric, Antisymmetric };

Symmetry symmetry_for(Statistics statistics);

inline constexpr std::int64_t kDenseCap = 1000000;
inline constexpr std::int64_t kProjectorCap = 4096;

/// (Anti)symmetric subspace of the N-fold tensor power of C^M.
///
/// Column c of the isometry is the tensor-product image of the c-th occupation
/// state of Fock sector N. Bose states with repeated modes carry
/// 1/sqrt(N! prod n_j!); the Fermi state a+_{k1}..a+_{kN}|0> with k1 < .. < kN is
/// (1/sqrt(N!)) sum_P sgn(P) e_{k_P(1)} x .. x e_{k_P(N)}.
class NParticleSpace {
 public:
  NParticleSpace(int particles, int dim, Symmetry symmetry, std::int64_t cap = kDenseCap);

  int particles() const { return shape_.particles; }
  int dim() const { return shape_.dim; }
  Symmetry symmetry() const { return symmetry_; }
  const TensorShape& shape() const { return shape_; }
  std::int64_t subspace_dimension() const { return isometry_.cols(); }

  /// tensor_dim x subspace_dim, sparse.
  const SparseOperator& isometry() const { return isometry_; }

  /// (1/N!) sum_P chi(P) Perm_P built from explicit permutations; dense, capped at kProjectorCap.
  CMatrix projector() const;

  /// V^+ A V for an operator given through its action on tensor vectors.
  template <class Apply>
  CMatrix compress(Apply&& apply) const {
    const std::int64_t d = subspace_dimension();
    const CMatrix v = CMatrix(isometry_);
    CMatrix out(d, d);
    for (std::int64_t c = 0; c < d; ++c) out.col(c) = v.adjoint() * apply(CVector(v.col(c)));
    return out;
  }

 private:
  TensorShape shape_;
  Symmetry symmetry_;
  SparseOperator isometry_;
};

NParticleSpace build_space(int particles, int dim, Symmetry symmetry, std::int64_t cap = kDenseCap);

struct NParticleOperator {
  CMatrix matrix;
  std::string label;
};

/// sum_i 1 x .. x (x^m p^n)_i x .. x 1 compressed to the subspace.
NParticleOperator direct_sum_operator(const NParticleSpace& space, const ModeGrid& grid, int m, int n);

/// max |direct_sum_operator - sector-N block of the lifted operator|.
double compare_with_lift(const NParticleSpace& space, const ModeGrid& grid, int m, int n,
                         const SparseOperator& lifted, const FockBasis& basis);

/// Explicit sum_P O_1[P(1)] .. O_N[P(N)] with O_p the one-particle matrix of words[p]. N <= 6.
NParticleOperator permutation_invariant_operator(const NParticleSpace& space, const ModeGrid& grid,
                                                 const std::vector<algebra::NormalForm>& words);

/// Sector-N block of sum c (-i hbar)^k Gamma(x^m1 p^n1) Gamma(x^m2 p^n2) ...
CMatrix evaluate_building_blocks(const algebra::BuildingBlockSum& blocks, const FockBasis& basis,
                                 const ModeGrid& grid, int sector);

/// Sector-N block of the pattern expansion with every unrestricted sum lifted.
/// Reordering uses one-particle matrix commutators, so unlike the building-block
/// form it does not rely on [X, P] = i hbar and matches the explicit sum on a lattice.
CMatrix evaluate_expansion(const algebra::IndexedMonomialSum& expansion, const FockBasis& basis,
                           const ModeGrid& grid, int sector);

}  // namespace fockbridge::oracle
