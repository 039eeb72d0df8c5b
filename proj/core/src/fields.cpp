#include "fockbridge/fields.hpp"

#include <cmath>

namespace fockbridge {

namespace {

const Complex kI(0.0, 1.0);

// out_n = sum_m K_nm ops[m]
std::vector<SparseOperator> apply_site(const CMatrix& kernel, const std::vector<SparseOperator>& ops) {
  std::vector<SparseOperator> out;
  out.reserve(ops.size());
  for (Eigen::Index n = 0; n < kernel.rows(); ++n) out.push_back(linear_combination(ops, kernel.row(n).transpose()));
  return out;
}

SparseOperator zero_like(const FockBasis& basis) { return SparseOperator(basis.size(), basis.size()); }

}  // namespace

WKernel::WKernel(const ModeGrid& grid, double exponent)
    : grid_(grid), exponent_(exponent), site_(grid.site_kernel(exponent)) {
  multipliers_ = grid.frequencies().array().pow(exponent).matrix();
}

CVector WKernel::apply(const CVector& site_values) const {
  CVector modes = grid_.transform(site_values, Direction::ToMode);
  modes = modes.cwiseProduct(multipliers_.cast<Complex>());
  return grid_.transform(modes, Direction::ToSite);
}

CVector WKernel::apply_kernel(const CVector& site_values) const {
  if (site_values.size() != site_.cols()) throw std::invalid_argument("apply_W: length mismatch");
  return site_ * site_values;
}

SparseOperator linear_combination(const std::vector<SparseOperator>& ops, const CVector& weights) {
  if (ops.empty()) throw std::invalid_argument("linear_combination: no operators");
  SparseOperator r(ops.front().rows(), ops.front().cols());
  for (std::size_t m = 0; m < ops.size(); ++m) {
    if (weights[m] != Complex(0.0)) r += weights[m] * ops[m];
  }
  return r;
}

std::string_view to_string(Route route) {
  switch (route) {
    case Route::ModeForm:
      return "mode";
    case Route::FieldForm:
      return "field";
    case Route::PositionModeForm:
      return "position-mode";
  }
  return "?";
}

FieldSet build_fields(const ModeGrid& grid, const FockBasis& basis) {
  const int m = grid.size();
  if (basis.modes() != m) throw std::invalid_argument("build_fields: basis and grid mode counts differ");
  std::vector<SparseOperator> a, ad;
  for (int j = 0; j < m; ++j) {
    a.push_back(ladder(basis, j, LadderKind::Annihilate));
    ad.push_back(ladder(basis, j, LadderKind::Create));
  }
  const double hbar = grid.hbar();
  const double length = grid.box_length();
  const double root_m = std::sqrt(static_cast<double>(m));
  FieldSet f;
  for (int n = 0; n < m; ++n) {
    SparseOperator phi = zero_like(basis), pi = zero_like(basis);
    for (int j = 0; j < m; ++j) {
      const double w = grid.frequencies()[j];
      const Complex e = grid.site_transform()(n, j) * root_m;  // e^{i k_j x_n}
      const double cphi = std::sqrt(hbar / (2.0 * w * length));
      const double cpi = std::sqrt(hbar * w / (2.0 * length));
      phi += (cphi * e) * a[j] + (cphi * std::conj(e)) * ad[j];
      pi += (-kI * cpi * e) * a[j] + (kI * cpi * std::conj(e)) * ad[j];
    }
    f.phi.push_back(std::move(phi));
    f.pi.push_back(std::move(pi));
  }
  return f;
}

RealScalarField::RealScalarField(const ModeGrid& grid, const FockBasis& basis)
    : grid_(grid), basis_(basis), fields_(build_fields(grid, basis)) {
  std::vector<SparseOperator> a;
  for (int j = 0; j < grid_.size(); ++j) a.push_back(ladder(basis_, j, LadderKind::Annihilate));
  site_annihilators_ = apply_site(grid_.site_transform(), a);
}

void RealScalarField::require_bose(const char* what) const {
  if (basis_.statistics() != Statistics::Bose) {
    throw StatisticsMismatch(std::string(what) + ": the field form holds for Bose statistics only");
  }
}

SparseOperator RealScalarField::site_bilinear(const CMatrix& kernel) const {
  SparseOperator r = zero_like(basis_);
  const int m = grid_.size();
  for (int n = 0; n < m; ++n) {
    const SparseOperator bn_dag = site_annihilators_[n].adjoint();
    for (int k = 0; k < m; ++k) {
      if (kernel(n, k) != Complex(0.0)) r += kernel(n, k) * (bn_dag * site_annihilators_[k]);
    }
  }
  return r;
}


CompositeOperator RealScalarField::hamiltonian(Route route) const {
  const double hbar = grid_.hbar();
  if (route == Route::ModeForm) return {"H", route, occupation_sum(basis_, hbar * grid_.frequencies())};
  if (route == Route::PositionModeForm) return {"H", route, site_bilinear(hbar * grid_.site_kernel(1.0))};
  require_bose("H");
  const auto& phi = fields_.phi;
  const auto& pi = fields_.pi;
  const auto dphi = apply_site(grid_.site_derivative(), phi);
  const auto wphi = apply_site(grid_.site_kernel(1.0), phi);
  const double m2 = grid_.mass() * grid_.mass();
  SparseOperator h = zero_like(basis_);
  for (int n = 0; n < grid_.size(); ++n) {
    h += pi[n] * pi[n] + dphi[n] * dphi[n] + m2 * (phi[n] * phi[n]);
    h += kI * (SparseOperator(wphi[n] * pi[n]) - SparseOperator(pi[n] * wphi[n]));
  }
  h *= 0.5 * grid_.dx();
  return {"H", route, h};
}

CompositeOperator RealScalarField::momentum(Route route) const {
  const double hbar = grid_.hbar();
  if (route == Route::ModeForm) return {"P", route, occupation_sum(basis_, hbar * grid_.momenta())};
  if (route == Route::PositionModeForm) {
    return {"P", route, site_bilinear(-kI * hbar * grid_.site_derivative())};
  }
  require_bose("P");
  const auto& phi = fields_.phi;
  const auto& pi = fields_.pi;
  const auto dphi = apply_site(grid_.site_derivative(), phi);
  const auto dpi = apply_site(grid_.site_derivative(), pi);
  const auto wphi = apply_site(grid_.site_kernel(1.0), phi);
  const auto winv_pi = apply_site(grid_.site_kernel(-1.0), pi);
  SparseOperator p = zero_like(basis_);
  for (int n = 0; n < grid_.size(); ++n) {
    p -= dphi[n] * pi[n] + pi[n] * dphi[n];
    p += kI * (SparseOperator(dphi[n] * wphi[n]) + SparseOperator(dpi[n] * winv_pi[n]));
  }
  p *= 0.5 * grid_.dx();
  return {"P", route, p};
}

CompositeOperator RealScalarField::number(Route route) const {
  if (route == Route::ModeForm) return {"N", route, occupation_sum(basis_, RVector::Ones(grid_.size()))};
  if (route == Route::PositionModeForm) {
    return {"N", route, site_bilinear(CMatrix::Identity(grid_.size(), grid_.size()))};
  }
  require_bose("N");
  const auto& phi = fields_.phi;
  const auto& pi = fields_.pi;
  const auto wphi = apply_site(grid_.site_kernel(1.0), phi);
  const auto winv_pi = apply_site(grid_.site_kernel(-1.0), pi);
  SparseOperator n_op = zero_like(basis_);
  for (int n = 0; n < grid_.size(); ++n) {
    n_op += phi[n] * wphi[n] + pi[n] * winv_pi[n];
    n_op += kI * (SparseOperator(phi[n] * pi[n]) - SparseOperator(pi[n] * phi[n]));
  }
  n_op *= 0.5 * grid_.dx() / grid_.hbar();
  return {"N", route, n_op};
}

CompositeOperator RealScalarField::position(Route route) const {
  if (route == Route::ModeForm) return {"X", route, lift(basis_, grid_.position_operator())};
  if (route == Route::PositionModeForm) {
    return {"X", route, site_bilinear(grid_.positions().cast<Complex>().asDiagonal())};
  }
  require_bose("X");
  const auto psi = apply_site(grid_.site_kernel(0.5), fields_.phi);
  const auto chi = apply_site(grid_.site_kernel(-0.5), fields_.pi);
  SparseOperator x = zero_like(basis_);
  for (int n = 0; n < grid_.size(); ++n) {
    SparseOperator local = psi[n] * psi[n] + chi[n] * chi[n];
    local += kI * (SparseOperator(psi[n] * chi[n]) - SparseOperator(chi[n] * psi[n]));
    x += grid_.positions()[n] * local;
  }
  x *= 0.5 * grid_.dx() / grid_.hbar();
  return {"X", route, x};
}

SparseOperator RealScalarField::building_block(int m, int n) const {
  if (m < 0 || n < 0) throw std::invalid_argument("building_block: powers must be >= 0");
  CMatrix t = CMatrix::Identity(grid_.size(), grid_.size());
  const CMatrix x = grid_.position_operator();
  const CMatrix p = grid_.momentum_operator();
  for (int i = 0; i < m; ++i) t = t * x;
  for (int i = 0; i < n; ++i) t = t * p;
  return lift(basis_, t);
}

SparseOperator RealScalarField::velocity() const {
  RVector v = grid_.momenta().cwiseQuotient(grid_.frequencies());
  return lift(basis_, v.cast<Complex>().asDiagonal().toDenseMatrix());
}

HeisenbergReport heisenberg_checks(const RealScalarField& field) {
  HeisenbergReport r;
  const double hbar = field.grid().hbar();
  const SparseOperator h = field.hamiltonian(Route::ModeForm).op;
  r.number_commutator = max_abs(commutator(field.number(Route::ModeForm).op, h));
  r.momentum_commutator = max_abs(commutator(field.momentum(Route::ModeForm).op, h));

  const int top = field.equivalence_max_sector();
  const Complex ih(0.0, hbar);
  SparseOperator literal = commutator(field.position(Route::ModeForm).op, h) / ih - field.velocity();
  r.velocity_literal = max_abs_on_sectors(literal, field.basis(), top);

  const bool bose = field.basis().statistics() == Statistics::Bose;
  const SparseOperator x = field.position(bose ? Route::FieldForm : Route::ModeForm).op;
  const SparseOperator hf = bose ? field.hamiltonian(Route::FieldForm).op : h;
  const CMatrix xo = field.grid().position_operator();
  const CMatrix ho = field.grid().energy_operator();
  const CMatrix vo = (xo * ho - ho * xo) / ih;
  SparseOperator lattice = commutator(x, hf) / ih - lift(field.basis(), vo);
  r.velocity_lattice = max_abs_on_sectors(lattice, field.basis(), top);

  r.max_speed = field.grid().momenta().cwiseQuotient(field.grid().frequencies()).cwiseAbs().maxCoeff();
  return r;
}

double lift_homomorphism_deviation(const FockBasis& basis, const CMatrix& t1, const CMatrix& t2) {
  const SparseOperator g1 = lift(basis, t1);
  const SparseOperator g2 = lift(basis, t2);
  const CMatrix t12 = t1 * t2 - t2 * t1;
  return max_abs(SparseOperator(commutator(g1, g2) - lift(basis, t12)));
}

CVector gaussian_packet(const ModeGrid& grid, double x0, double sigma, double k0) {
  CVector site(grid.size());
  for (int n = 0; n < grid.size(); ++n) {
    const double d = grid.positions()[n] - x0;
    site[n] = std::exp(-d * d / (2.0 * sigma * sigma)) * std::exp(kI * (k0 * d));
  }
  site.normalize();
  return grid.transform(site, Direction::ToMode);
}

double xp_wavepacket_deviation(const ModeGrid& grid, const CVector& packet) {
  const CMatrix x = grid.position_operator();
  const CMatrix p = grid.momentum_operator();
  const CVector r = x * (p * packet) - p * (x * packet) - Complex(0.0, grid.hbar()) * packet;
  return r.cwiseAbs().maxCoeff();
}

double velocity_wavepacket_deviation(const ModeGrid& grid, const CVector& packet) {
  const CMatrix x = grid.position_operator();
  const CMatrix h = grid.energy_operator();
  const CVector v = grid.momenta().cwiseQuotient(grid.frequencies()).cast<Complex>();
  const CVector r = (x * (h * packet) - h * (x * packet)) / Complex(0.0, grid.hbar()) - v.cwiseProduct(packet);
  return r.cwiseAbs().maxCoeff();
}

AnticommutatorReport fermi_field_anticommutators(const ModeGrid& grid, const FockBasis& basis) {
  if (basis.statistics() != Statistics::Fermi) {
    throw StatisticsMismatch("fermi_field_anticommutators: basis must have fermi statistics");
  }
  const FieldSet f = build_fields(grid, basis);
  const int m = grid.size();
  AnticommutatorReport r;
  r.domain_max_sector = basis.n_max() >= m ? basis.n_max() : basis.n_max() - 1;
  const double scale = grid.hbar() / grid.dx();
  const CMatrix winv = grid.site_kernel(-1.0);
  const CMatrix w = grid.site_kernel(1.0);
  const SparseOperator id = identity_operator(basis.size());
  for (int n = 0; n < m; ++n) {
    for (int k = 0; k < m; ++k) {
      SparseOperator pp = anticommutator(f.phi[n], f.phi[k]) - (scale * winv(n, k)) * id;
      SparseOperator qq = anticommutator(f.pi[n], f.pi[k]) - (scale * w(n, k)) * id;
      SparseOperator pq = anticommutator(f.phi[n], f.pi[k]);
      r.phi_phi = std::max(r.phi_phi, max_abs_on_sectors(pp, basis, r.domain_max_sector));
      r.pi_pi = std::max(r.pi_pi, max_abs_on_sectors(qq, basis, r.domain_max_sector));
      r.phi_pi = std::max(r.phi_pi, max_abs_on_sectors(pq, basis, r.domain_max_sector));
    }
  }
  const SparseOperator witness = anticommutator(f.phi[0], f.phi[m / 2]);
  r.max_separation_value = std::abs(witness.coeff(0, 0));
  return r;
}

RVector anticommutator_kernel(const ModeGrid& grid) {
  const CMatrix winv = grid.site_kernel(-1.0);
  return (grid.hbar() / grid.dx()) * winv.row(0).real().transpose();
}

}  // namespace fockbridge
