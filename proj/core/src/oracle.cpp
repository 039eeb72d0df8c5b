#include <functional>
#include "fockbridge/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fockbridge::oracle {

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

double factorial(int n) { return std::tgamma(n + 1.0); }

std::int64_t flat_index(const TensorShape& shape, const std::vector<int>& modes) {
  std::int64_t idx = 0;
  for (int m : modes) idx = idx * shape.dim + m;
  return idx;
}

CMatrix one_particle(const ModeGrid& grid, int m, int n) {
  CMatrix t = CMatrix::Identity(grid.size(), grid.size());
  const CMatrix x = grid.position_operator();
  const CMatrix p = grid.momentum_operator();
  for (int i = 0; i < m; ++i) t = t * x;
  for (int i = 0; i < n; ++i) t = t * p;
  return t;
}

}  // namespace

Symmetry symmetry_for(Statistics statistics) {
  return statistics == Statistics::Bose ? Symmetry::Symmetric : Symmetry::Antisymmetric;
}

NParticleSpace::NParticleSpace(int particles, int dim, Symmetry symmetry, std::int64_t cap)
    : shape_{particles, dim}, symmetry_(symmetry) {
  if (particles < 1 || dim < 1) throw std::invalid_argument("build_space: N and M must be >= 1");
  if (std::pow(static_cast<double>(dim), particles) > static_cast<double>(cap)) {
    throw CapacityError("build_space: M^N = " + std::to_string(dim) + "^" + std::to_string(particles) +
                        " exceeds the dense cap of " + std::to_string(cap));
  }
  const Statistics stats = symmetry == Symmetry::Symmetric ? Statistics::Bose : Statistics::Fermi;
  if (stats == Statistics::Fermi && particles > dim) {
    throw std::invalid_argument("build_space: C(" + std::to_string(dim) + "," + std::to_string(particles) +
                                ") = 0, no antisymmetric states");
  }
  const FockBasis sector(dim, particles, stats, cap);
  const std::int64_t offset = sector.sector_offset(particles);
  const std::int64_t count = sector.sector_size(particles);

  std::vector<Eigen::Triplet<Complex>> triplets;
  std::vector<int> perm(particles);
  for (std::int64_t c = 0; c < count; ++c) {
    const Occupation& occ = sector.state(offset + c);
    std::vector<int> modes;
    double occupancy = 1.0;
    for (int j = 0; j < dim; ++j) {
      for (int r = 0; r < occ[j]; ++r) modes.push_back(j);
      occupancy *= factorial(occ[j]);
    }
    const double norm = 1.0 / std::sqrt(factorial(particles) * occupancy);
    std::map<std::int64_t, double> column;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> slots(particles);
      for (int i = 0; i < particles; ++i) slots[i] = modes[perm[i]];
      const double sign = stats == Statistics::Fermi ? permutation_sign(perm) : 1.0;
      column[flat_index(shape_, slots)] += sign * norm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& [row, value] : column) {
      if (value != 0.0) triplets.emplace_back(row, c, Complex(value));
    }
  }
  isometry_.resize(shape_.size(), count);
  isometry_.setFromTriplets(triplets.begin(), triplets.end());
  isometry_.makeCompressed();
}

CMatrix NParticleSpace::projector() const {
  const std::int64_t dim = shape_.size();
  if (dim > kProjectorCap) {
    throw CapacityError("projector: dimension " + std::to_string(dim) + " exceeds " +
                        std::to_string(kProjectorCap));
  }
  const int n = shape_.particles;
  CMatrix proj = CMatrix::Zero(dim, dim);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> digits(n), moved(n);
  do {
    const double sign = symmetry_ == Symmetry::Antisymmetric ? permutation_sign(perm) : 1.0;
    for (std::int64_t col = 0; col < dim; ++col) {
      std::int64_t rest = col;
      for (int s = n - 1; s >= 0; --s) {
        digits[s] = static_cast<int>(rest % shape_.dim);
        rest /= shape_.dim;
      }
      for (int s = 0; s < n; ++s) moved[perm[s]] = digits[s];
      proj(flat_index(shape_, moved), col) += sign;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return proj / factorial(n);
}

NParticleSpace build_space(int particles, int dim, Symmetry symmetry, std::int64_t cap) {
  return NParticleSpace(particles, dim, symmetry, cap);
}

NParticleOperator direct_sum_operator(const NParticleSpace& space, const ModeGrid& grid, int m, int n) {
  if (grid.size() != space.dim()) throw std::invalid_argument("direct_sum_operator: grid/space size mismatch");
  const CMatrix t = one_particle(grid, m, n);
  CMatrix matrix = space.compress([&](const CVector& v) {
    CVector out = CVector::Zero(v.size());
    for (int slot = 0; slot < space.particles(); ++slot) out += apply_on_slot(space.shape(), t, slot, v);
    return out;
  });
  return {std::move(matrix), "sum_i X_i^" + std::to_string(m) + " P_i^" + std::to_string(n)};
}

double compare_with_lift(const NParticleSpace& space, const ModeGrid& grid, int m, int n,
                         const SparseOperator& lifted, const FockBasis& basis) {
  const Symmetry expected = symmetry_for(basis.statistics());
  if (expected != space.symmetry()) throw StatisticsMismatch("compare_with_lift: symmetry differs from basis");
  if (space.particles() > basis.n_max()) {
    throw std::invalid_argument("compare_with_lift: sector N exceeds the basis truncation");
  }
  const CMatrix direct = direct_sum_operator(space, grid, m, n).matrix;
  const CMatrix block = sector_block(lifted, basis, space.particles());
  return (direct - block).cwiseAbs().maxCoeff();
}

NParticleOperator permutation_invariant_operator(const NParticleSpace& space, const ModeGrid& grid,
                                                 const std::vector<algebra::NormalForm>& words) {
  const int n = space.particles();
  if (static_cast<int>(words.size()) != n) {
    throw std::invalid_argument("permutation_invariant_operator: need one word per particle");
  }
  if (n > 6) throw CapacityError("permutation_invariant_operator: N! enumeration limited to N <= 6");
  const CMatrix x = grid.position_operator();
  const CMatrix p = grid.momentum_operator();
  std::vector<CMatrix> ops;
  for (const auto& w : words) ops.push_back(w.evaluate(x, p, grid.hbar()));

  CMatrix matrix = space.compress([&](const CVector& v) {
    CVector out = CVector::Zero(v.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      CVector w = v;
      for (int i = n - 1; i >= 0; --i) w = apply_on_slot(space.shape(), ops[i], perm[i], w);
      out += w;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  });
  std::string label = "sum_P";
  for (const auto& w : words) label += " [" + w.to_string() + "]";
  return {std::move(matrix), label};
}

CMatrix evaluate_building_blocks(const algebra::BuildingBlockSum& blocks, const FockBasis& basis,
                                 const ModeGrid& grid, int sector) {
  const std::int64_t dim = basis.sector_size(sector);
  CMatrix total = CMatrix::Zero(dim, dim);
  std::map<std::pair<int, int>, CMatrix> cache;
  auto block = [&](std::pair<int, int> mn) -> const CMatrix& {
    auto it = cache.find(mn);
    if (it == cache.end()) {
      it = cache.emplace(mn, sector_block(lift(basis, one_particle(grid, mn.first, mn.second)), basis, sector)).first;
    }
    return it->second;
  };
  const Complex unit(0.0, -grid.hbar());
  for (const auto& [product, c] : blocks.terms) {
    CMatrix term = CMatrix::Identity(dim, dim);
    for (const auto& mn : product.blocks) term = term * block(mn);
    total += static_cast<double>(c) * std::pow(unit, product.hbar_power) * term;
  }
  return total;
}

namespace {

struct MatrixSlot {
  int label;
  CMatrix op;
};

// Same adjacent-swap reduction as the symbolic rewrite, but with exact
// one-particle matrix commutators, so it holds on the lattice as well.
void reduce_slots(std::vector<MatrixSlot> slots, const std::function<void(std::vector<CMatrix>)>& emit) {
  std::vector<int> first(slots.size() + 1, -1);
  int next = 0;
  for (const auto& s : slots)
    if (first[s.label] < 0) first[s.label] = next++;
  for (std::size_t p = 0; p + 1 < slots.size(); ++p) {
    if (first[slots[p].label] <= first[slots[p + 1].label]) continue;
    std::vector<MatrixSlot> swapped = slots;
    std::swap(swapped[p], swapped[p + 1]);
    reduce_slots(std::move(swapped), emit);

    const int keep = slots[p].label;
    const int gone = slots[p + 1].label;
    std::vector<MatrixSlot> merged;
    for (std::size_t q = 0; q < slots.size(); ++q) {
      if (q == p + 1) continue;
      MatrixSlot s = slots[q];
      if (q == p) s.op = slots[p].op * slots[p + 1].op - slots[p + 1].op * slots[p].op;
      if (s.label == gone) s.label = keep;
      merged.push_back(std::move(s));
    }
    reduce_slots(std::move(merged), emit);
    return;
  }
  std::vector<CMatrix> blocks;
  for (std::size_t p = 0; p < slots.size(); ++p) {
    if (p > 0 && slots[p].label == slots[p - 1].label) {
      blocks.back() = blocks.back() * slots[p].op;
    } else {
      blocks.push_back(slots[p].op);
    }
  }
  emit(std::move(blocks));
}

}  // namespace

CMatrix evaluate_expansion(const algebra::IndexedMonomialSum& expansion, const FockBasis& basis,
                           const ModeGrid& grid, int sector) {
  const CMatrix x = grid.position_operator();
  const CMatrix p = grid.momentum_operator();
  std::vector<CMatrix> factors;
  for (const auto& f : expansion.factors) factors.push_back(f.evaluate(x, p, grid.hbar()));

  const std::int64_t dim = basis.sector_size(sector);
  CMatrix total = CMatrix::Zero(dim, dim);
  for (const auto& [pattern, c] : expansion.terms) {
    std::vector<MatrixSlot> slots;
    for (std::size_t i = 0; i < pattern.size(); ++i) slots.push_back({pattern[i], factors[i]});
    reduce_slots(std::move(slots), [&](std::vector<CMatrix> blocks) {
      CMatrix term = CMatrix::Identity(dim, dim);
      for (const auto& b : blocks) term = term * sector_block(lift(basis, b), basis, sector);
      total += static_cast<double>(c) * term;
    });
  }
  return total;
}

}  // namespace fockbridge::oracle
