#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "fockbridge/common.hpp"
#include "fockbridge/grid.hpp"

namespace fockbridge {

using Occupation = std::vector<int>;

inline constexpr std::int64_t kDefaultBasisCap = 200000;

/// Truncated occupation-number basis, N <= n_max.
///
/// Sector-major; inside a sector the occupation vectors run in descending
/// lexicographic order, so for M=2 the one-particle states are |10>, |01>.
/// The vacuum is index 0. Jordan-Wigner signs use the mode storage order.
class FockBasis {
 public:
  FockBasis(int modes, int n_max, Statistics statistics, std::int64_t cap = kDefaultBasisCap);

  int modes() const { return modes_; }
  int n_max() const { return n_max_; }
  Statistics statistics() const { return statistics_; }
  std::int64_t size() const { return static_cast<std::int64_t>(states_.size()); }

  const Occupation& state(std::int64_t index) const { return states_[index]; }
  int sector(std::int64_t index) const { return sectors_[index]; }
  std::int64_t sector_offset(int n) const { return offsets_[n]; }
  std::int64_t sector_size(int n) const { return offsets_[n + 1] - offsets_[n]; }

  /// -1 when the occupation is not in the basis.
  std::int64_t index(const Occupation& occupation) const;

 private:
  int modes_;
  int n_max_;
  Statistics statistics_;
  std::vector<Occupation> states_;
  std::vector<int> sectors_;
  std::vector<std::int64_t> offsets_;
  std::map<Occupation, std::int64_t> lookup_;
};

/// Closed-form sector dimension: C(M+N-1, N) for Bose, C(M, N) for Fermi.
std::int64_t sector_dimension(int modes, int n, Statistics statistics);

FockBasis enumerate_basis(const LatticeSpec& spec, std::int64_t cap = kDefaultBasisCap);

enum class LadderKind { Create, Annihilate };

SparseOperator ladder(const FockBasis& basis, int mode, LadderKind kind);

/// Gamma(t) = sum_{jl} t_jl a_j^+ a_l, built from hops on the basis states.
SparseOperator lift(const FockBasis& basis, const CMatrix& t);

/// Total number operator sum_j a_j^+ a_j (diagonal).
SparseOperator number_operator(const FockBasis& basis);
/// sum_j w_j a_j^+ a_j, diagonal with exact entries sum_j w_j n_j.
SparseOperator occupation_sum(const FockBasis& basis, const RVector& weights);

struct CanonicalReport {
  double max_deviation = 0.0;         // on the truncation-safe domain
  double top_sector_deviation = 0.0;  // documents the truncation boundary
  int domain_max_sector = 0;
};

/// Bose: [a_i,a_j] everywhere and [a_i,a_j^+] = delta on sectors <= n_max-1.
/// Fermi: anticommutators on the full space when n_max >= M, else on sectors <= n_max-1.
CanonicalReport check_canonical_relations(const FockBasis& basis);

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);
SparseOperator anticommutator(const SparseOperator& a, const SparseOperator& b);
SparseOperator identity_operator(std::int64_t dim);

double max_abs(const SparseOperator& op);
/// Max |entry| over columns whose basis state has sector <= max_sector.
double max_abs_on_sectors(const SparseOperator& op, const FockBasis& basis, int max_sector);
/// Max |entry| over columns selected by `keep`.
double max_abs_on_columns(const SparseOperator& op, const std::function<bool(std::int64_t)>& keep);
/// Max |entry| of blocks connecting different sectors.
double cross_sector_max(const SparseOperator& op, const FockBasis& basis);
/// Dense sector-n diagonal block.
CMatrix sector_block(const SparseOperator& op, const FockBasis& basis, int n);

}  // namespace fockbridge
