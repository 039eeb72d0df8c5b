#include "fockbridge/fock.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace fockbridge {

namespace {

double binomial_real(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

void fill_sector(int mode, int remaining, int cap_per_mode, Occupation& current, std::vector<Occupation>& out) {
  const int modes = static_cast<int>(current.size());
  if (mode == modes - 1) {
    if (remaining <= cap_per_mode) {
      current[mode] = remaining;
      out.push_back(current);
    }
    return;
  }
  for (int n = std::min(remaining, cap_per_mode); n >= 0; --n) {
    current[mode] = n;
    fill_sector(mode + 1, remaining - n, cap_per_mode, current, out);
  }
  current[mode] = 0;
}

int jordan_wigner_sign(const Occupation& occ, int mode) {
  int parity = 0;
  for (int l = 0; l < mode; ++l) parity += occ[l];
  return parity % 2 == 0 ? 1 : -1;
}

SparseOperator from_triplets(std::int64_t dim, const std::vector<Eigen::Triplet<Complex>>& triplets) {
  SparseOperator op(dim, dim);
  op.setFromTriplets(triplets.begin(), triplets.end());
  op.makeCompressed();
  return op;
}

}  // namespace

std::int64_t sector_dimension(int modes, int n, Statistics statistics) {
  const double d = statistics == Statistics::Bose ? binomial_real(modes + n - 1, n) : binomial_real(modes, n);
  return static_cast<std::int64_t>(d);
}

FockBasis::FockBasis(int modes, int n_max, Statistics statistics, std::int64_t cap)
    : modes_(modes), n_max_(n_max), statistics_(statistics) {
  if (modes < 1) throw std::invalid_argument("mode_count: must be >= 1");
  if (n_max < 0) throw std::invalid_argument("n_max: must be >= 0");
  if (statistics == Statistics::Fermi && n_max > modes) {
    throw std::invalid_argument("n_max: must not exceed mode_count for fermi statistics");
  }
  double total = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    total += statistics == Statistics::Bose ? binomial_real(modes + n - 1, n) : binomial_real(modes, n);
  }
  if (total > static_cast<double>(cap)) {
    throw CapacityError("fock basis of " + std::to_string(static_cast<long long>(total)) +
                        " states exceeds the cap of " + std::to_string(cap));
  }

  const int per_mode = statistics == Statistics::Bose ? n_max : 1;
  offsets_.push_back(0);
  Occupation current(modes, 0);
  for (int n = 0; n <= n_max; ++n) {
    fill_sector(0, n, per_mode, current, states_);
    offsets_.push_back(static_cast<std::int64_t>(states_.size()));
    sectors_.resize(states_.size(), n);
  }
  for (std::int64_t i = 0; i < size(); ++i) lookup_.emplace(states_[i], i);
}

std::int64_t FockBasis::index(const Occupation& occupation) const {
  auto it = lookup_.find(occupation);
  return it == lookup_.end() ? -1 : it->second;
}

FockBasis enumerate_basis(const LatticeSpec& spec, std::int64_t cap) {
  spec.validate();
  return FockBasis(spec.mode_count, spec.n_max, spec.statistics, cap);
}

SparseOperator ladder(const FockBasis& basis, int mode, LadderKind kind) {
  if (mode < 0 || mode >= basis.modes()) {
    throw std::out_of_range("ladder: mode " + std::to_string(mode) + " outside [0, " +
                            std::to_string(basis.modes()) + ")");
  }
  const bool fermi = basis.statistics() == Statistics::Fermi;
  std::vector<Eigen::Triplet<Complex>> triplets;
  for (std::int64_t col = 0; col < basis.size(); ++col) {
    Occupation occ = basis.state(col);
    double amp;
    if (kind == LadderKind::Annihilate) {
      if (occ[mode] == 0) continue;
      amp = fermi ? jordan_wigner_sign(occ, mode) : std::sqrt(static_cast<double>(occ[mode]));
      occ[mode] -= 1;
    } else {
      if (fermi && occ[mode] == 1) continue;
      amp = fermi ? jordan_wigner_sign(occ, mode) : std::sqrt(occ[mode] + 1.0);
      occ[mode] += 1;
    }
    const std::int64_t row = basis.index(occ);
    if (row < 0) continue;  // beyond n_max
    triplets.emplace_back(row, col, Complex(amp));
  }
  return from_triplets(basis.size(), triplets);
}

SparseOperator lift(const FockBasis& basis, const CMatrix& t) {
  const int m = basis.modes();
  if (t.rows() != m || t.cols() != m) {
    throw std::invalid_argument("lift: one-particle matrix must be " + std::to_string(m) + "x" +
                                std::to_string(m));
  }
  const bool fermi = basis.statistics() == Statistics::Fermi;
  std::vector<Eigen::Triplet<Complex>> triplets;
  for (std::int64_t col = 0; col < basis.size(); ++col) {
    const Occupation& occ = basis.state(col);
    for (int l = 0; l < m; ++l) {
      if (occ[l] == 0) continue;
      // diagonal hop: n_l exactly, no sqrt round trip
      if (t(l, l) != Complex(0.0)) triplets.emplace_back(col, col, t(l, l) * static_cast<double>(occ[l]));
      Occupation mid = occ;
      double amp_l = fermi ? jordan_wigner_sign(mid, l) : std::sqrt(static_cast<double>(mid[l]));
      mid[l] -= 1;
      for (int j = 0; j < m; ++j) {
        const Complex tjl = t(j, l);
        if (j == l || tjl == Complex(0.0)) continue;
        if (fermi && mid[j] == 1) continue;
        Occupation out = mid;
        const double amp_j = fermi ? jordan_wigner_sign(out, j) : std::sqrt(out[j] + 1.0);
        out[j] += 1;
        triplets.emplace_back(basis.index(out), col, tjl * amp_l * amp_j);
      }
    }
  }
  return from_triplets(basis.size(), triplets);
}

SparseOperator number_operator(const FockBasis& basis) {
  return occupation_sum(basis, RVector::Ones(basis.modes()));
}

SparseOperator occupation_sum(const FockBasis& basis, const RVector& weights) {
  if (weights.size() != basis.modes()) throw std::invalid_argument("occupation_sum: one weight per mode");
  std::vector<Eigen::Triplet<Complex>> triplets;
  for (std::int64_t i = 0; i < basis.size(); ++i) {
    double value = 0.0;
    const Occupation& occ = basis.state(i);
    for (int j = 0; j < basis.modes(); ++j) value += weights[j] * occ[j];
    if (value != 0.0) triplets.emplace_back(i, i, Complex(value));
  }
  return from_triplets(basis.size(), triplets);
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
  SparseOperator r = a * b - b * a;
  r.prune(Complex(0.0), 0.0);
  return r;
}

SparseOperator anticommutator(const SparseOperator& a, const SparseOperator& b) {
  SparseOperator r = a * b + b * a;
  r.prune(Complex(0.0), 0.0);
  return r;
}

SparseOperator identity_operator(std::int64_t dim) {
  SparseOperator id(dim, dim);
  id.setIdentity();
  return id;
}

double max_abs(const SparseOperator& op) {
  double worst = 0.0;
  for (int k = 0; k < op.outerSize(); ++k)
    for (SparseOperator::InnerIterator it(op, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
  return worst;
}

double max_abs_on_columns(const SparseOperator& op, const std::function<bool(std::int64_t)>& keep) {
  double worst = 0.0;
  for (int col = 0; col < op.outerSize(); ++col) {
    if (!keep(col)) continue;
    for (SparseOperator::InnerIterator it(op, col); it; ++it) worst = std::max(worst, std::abs(it.value()));
  }
  return worst;
}

double max_abs_on_sectors(const SparseOperator& op, const FockBasis& basis, int max_sector) {
  return max_abs_on_columns(op, [&](std::int64_t col) { return basis.sector(col) <= max_sector; });
}

double cross_sector_max(const SparseOperator& op, const FockBasis& basis) {
  double worst = 0.0;
  for (int col = 0; col < op.outerSize(); ++col)
    for (SparseOperator::InnerIterator it(op, col); it; ++it)
      if (basis.sector(it.row()) != basis.sector(col)) worst = std::max(worst, std::abs(it.value()));
  return worst;
}

CMatrix sector_block(const SparseOperator& op, const FockBasis& basis, int n) {
  const std::int64_t off = basis.sector_offset(n);
  const std::int64_t dim = basis.sector_size(n);
  CMatrix block = CMatrix::Zero(dim, dim);
  for (std::int64_t col = off; col < off + dim; ++col)
    for (SparseOperator::InnerIterator it(op, col); it; ++it)
      if (it.row() >= off && it.row() < off + dim) block(it.row() - off, col - off) = it.value();
  return block;
}

CanonicalReport check_canonical_relations(const FockBasis& basis) {
  const int m = basis.modes();
  const bool fermi = basis.statistics() == Statistics::Fermi;
  CanonicalReport report;
  report.domain_max_sector = (fermi && basis.n_max() >= m) ? basis.n_max() : basis.n_max() - 1;

  std::vector<SparseOperator> a, ad;
  for (int j = 0; j < m; ++j) {
    a.push_back(ladder(basis, j, LadderKind::Annihilate));
    ad.push_back(ladder(basis, j, LadderKind::Create));
  }
  const SparseOperator id = identity_operator(basis.size());
  auto bracket = fermi ? anticommutator : commutator;
  const int top = basis.n_max();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      report.max_deviation = std::max(report.max_deviation, max_abs(bracket(a[i], a[j])));
      SparseOperator mixed = bracket(a[i], ad[j]);
      if (i == j) mixed -= id;
      report.max_deviation =
          std::max(report.max_deviation, max_abs_on_sectors(mixed, basis, report.domain_max_sector));
      report.top_sector_deviation = std::max(
          report.top_sector_deviation,
          max_abs_on_columns(mixed, [&](std::int64_t col) { return basis.sector(col) == top; }));
    }
  }
  return report;
}

}  // namespace fockbridge
