#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "fockbridge/fields.hpp"

namespace fockbridge {

namespace {

const Complex kI(0.0, 1.0);

std::vector<SparseOperator> apply_site(const CMatrix& kernel, const std::vector<SparseOperator>& ops) {
  std::vector<SparseOperator> out;
  for (Eigen::Index n = 0; n < kernel.rows(); ++n) out.push_back(linear_combination(ops, kernel.row(n).transpose()));
  return out;
}

SparseOperator comm(const SparseOperator& a, const SparseOperator& b) { return a * b - b * a; }
SparseOperator anti(const SparseOperator& a, const SparseOperator& b) { return a * b + b * a; }

}  // namespace

ComplexScalarField::ComplexScalarField(const ModeGrid& grid, int n_max_a, int n_max_b, double charge,
                                       std::int64_t cap)
    : grid_(grid),
      basis_a_(grid.size(), n_max_a, Statistics::Bose, cap),
      basis_b_(grid.size(), n_max_b, Statistics::Bose, cap),
      charge_(charge) {
  if (static_cast<double>(basis_a_.size()) * static_cast<double>(basis_b_.size()) > static_cast<double>(cap)) {
    throw CapacityError("complex field space of " + std::to_string(basis_a_.size() * basis_b_.size()) +
                        " states exceeds the cap of " + std::to_string(cap));
  }
  const int m = grid_.size();
  for (int j = 0; j < m; ++j) {
    a_.push_back(family_a(ladder(basis_a_, j, LadderKind::Annihilate)));
    b_.push_back(family_b(ladder(basis_b_, j, LadderKind::Annihilate)));
  }
  const double hbar = grid_.hbar();
  const double length = grid_.box_length();
  const double root_m = std::sqrt(static_cast<double>(m));
  for (int n = 0; n < m; ++n) {
    SparseOperator phi(size(), size()), pi(size(), size());
    for (int j = 0; j < m; ++j) {
      const double w = grid_.frequencies()[j];
      const Complex e = grid_.site_transform()(n, j) * root_m;
      const double cphi = std::sqrt(hbar / (2.0 * w * length));
      const double cpi = std::sqrt(hbar * w / (2.0 * length));
      const SparseOperator ad = a_[j].adjoint();
      const SparseOperator bd = b_[j].adjoint();
      phi += (cphi * e) * a_[j] + (cphi * std::conj(e)) * bd;
      pi += (kI * cpi * std::conj(e)) * ad - (kI * cpi * e) * b_[j];
    }
    fields_.phi_bar.push_back(phi.adjoint());
    fields_.pi_bar.push_back(pi.adjoint());
    fields_.phi.push_back(std::move(phi));
    fields_.pi.push_back(std::move(pi));
  }
}

SparseOperator ComplexScalarField::family_a(const SparseOperator& op) const {
  SparseOperator id = identity_operator(basis_b_.size());
  SparseOperator r = Eigen::kroneckerProduct(op, id);
  return r;
}

SparseOperator ComplexScalarField::family_b(const SparseOperator& op) const {
  SparseOperator id = identity_operator(basis_a_.size());
  SparseOperator r = Eigen::kroneckerProduct(id, op);
  return r;
}

SparseOperator ComplexScalarField::create_a(int mode) const { return a_.at(mode).adjoint(); }
SparseOperator ComplexScalarField::create_b(int mode) const { return b_.at(mode).adjoint(); }

bool ComplexScalarField::in_equivalence_domain(std::int64_t i) const {
  return sector_a(i) <= basis_a_.n_max() - 1 && sector_b(i) <= basis_b_.n_max() - 1;
}

namespace {

// sum_nm K_nm c_n^+ c_m for site annihilators c.
SparseOperator site_bilinear(const std::vector<SparseOperator>& c, const CMatrix& kernel, std::int64_t dim) {
  SparseOperator r(dim, dim);
  for (std::size_t n = 0; n < c.size(); ++n) {
    const SparseOperator cd = c[n].adjoint();
    for (std::size_t k = 0; k < c.size(); ++k)
      if (kernel(n, k) != Complex(0.0)) r += kernel(n, k) * (cd * c[k]);
  }
  return r;
}


}  // namespace

CompositeOperator ComplexScalarField::number_a(Route route) const {
  const int m = grid_.size();
  if (route == Route::ModeForm) return {"N_a", route, family_a(number_operator(basis_a_))};
  if (route == Route::PositionModeForm) {
    return {"N_a", route, site_bilinear(apply_site(grid_.site_transform(), a_), CMatrix::Identity(m, m), size())};
  }
  const auto& f = fields_;
  const auto wphi = apply_site(grid_.site_kernel(1.0), f.phi);
  const auto winv_pib = apply_site(grid_.site_kernel(-1.0), f.pi_bar);
  SparseOperator r(size(), size());
  for (int n = 0; n < m; ++n) {
    r += f.phi_bar[n] * wphi[n] + f.pi[n] * winv_pib[n];
    r += kI * (SparseOperator(f.phi_bar[n] * f.pi_bar[n]) - SparseOperator(f.pi[n] * f.phi[n]));
  }
  r *= 0.5 * grid_.dx() / grid_.hbar();
  return {"N_a", route, r};
}

CompositeOperator ComplexScalarField::number_b(Route route) const {
  const int m = grid_.size();
  if (route == Route::ModeForm) return {"N_b", route, family_b(number_operator(basis_b_))};
  if (route == Route::PositionModeForm) {
    return {"N_b", route, site_bilinear(apply_site(grid_.site_transform(), b_), CMatrix::Identity(m, m), size())};
  }
  const auto& f = fields_;
  const auto wphib = apply_site(grid_.site_kernel(1.0), f.phi_bar);
  const auto winv_pi = apply_site(grid_.site_kernel(-1.0), f.pi);
  SparseOperator r(size(), size());
  for (int n = 0; n < m; ++n) {
    r += f.phi[n] * wphib[n] + f.pi_bar[n] * winv_pi[n];
    r += kI * (SparseOperator(f.phi[n] * f.pi[n]) - SparseOperator(f.pi_bar[n] * f.phi_bar[n]));
  }
  r *= 0.5 * grid_.dx() / grid_.hbar();
  return {"N_b", route, r};
}

CompositeOperator ComplexScalarField::charge_operator(Route route) const {
  if (route != Route::FieldForm) {
    SparseOperator q = charge_ * (number_a(route).op - number_b(route).op);
    return {"Q", route, q};
  }
  const auto& f = fields_;
  const auto wphi = apply_site(grid_.site_kernel(1.0), f.phi);
  const auto winv_pib = apply_site(grid_.site_kernel(-1.0), f.pi_bar);
  SparseOperator r(size(), size());
  for (int n = 0; n < grid_.size(); ++n) {
    r += comm(f.phi_bar[n], wphi[n]) + comm(f.pi[n], winv_pib[n]);
    r += kI * anti(f.phi_bar[n], f.pi_bar[n]) - kI * anti(f.pi[n], f.phi[n]);
  }
  r *= 0.5 * charge_ * grid_.dx() / grid_.hbar();
  return {"Q", route, r};
}

CompositeOperator ComplexScalarField::hamiltonian(Route route) const {
  const double hbar = grid_.hbar();
  if (route == Route::ModeForm) {
    const RVector w = hbar * grid_.frequencies();
    return {"H", route, family_a(occupation_sum(basis_a_, w)) + family_b(occupation_sum(basis_b_, w))};
  }
  if (route == Route::PositionModeForm) {
    const CMatrix k = hbar * grid_.site_kernel(1.0);
    return {"H", route,
            site_bilinear(apply_site(grid_.site_transform(), a_), k, size()) +
                site_bilinear(apply_site(grid_.site_transform(), b_), k, size())};
  }
  const auto& f = fields_;
  const auto dphi = apply_site(grid_.site_derivative(), f.phi);
  const auto dphib = apply_site(grid_.site_derivative(), f.phi_bar);
  const auto wphi = apply_site(grid_.site_kernel(1.0), f.phi);
  const auto wphib = apply_site(grid_.site_kernel(1.0), f.phi_bar);
  const double m2 = grid_.mass() * grid_.mass();
  SparseOperator r(size(), size());
  for (int n = 0; n < grid_.size(); ++n) {
    r += f.pi[n] * f.pi_bar[n] + f.pi_bar[n] * f.pi[n];
    r += dphib[n] * dphi[n] + dphi[n] * dphib[n];
    r += m2 * SparseOperator(f.phi_bar[n] * f.phi[n] + f.phi[n] * f.phi_bar[n]);
    r += kI * comm(wphib[n], f.pi_bar[n]) + kI * comm(wphi[n], f.pi[n]);
  }
  r *= 0.5 * grid_.dx();
  return {"H", route, r};
}

CompositeOperator ComplexScalarField::momentum(Route route) const {
  const double hbar = grid_.hbar();
  if (route == Route::ModeForm) {
    const RVector k = hbar * grid_.momenta();
    return {"P", route, family_a(occupation_sum(basis_a_, k)) + family_b(occupation_sum(basis_b_, k))};
  }
  if (route == Route::PositionModeForm) {
    const CMatrix p = -kI * hbar * grid_.site_derivative();
    return {"P", route,
            site_bilinear(apply_site(grid_.site_transform(), a_), p, size()) +
                site_bilinear(apply_site(grid_.site_transform(), b_), p, size())};
  }
  const auto& f = fields_;
  const CMatrix d = grid_.site_derivative();
  const auto dphi = apply_site(d, f.phi);
  const auto dphib = apply_site(d, f.phi_bar);
  const auto dpi = apply_site(d, f.pi);
  const auto dpib = apply_site(d, f.pi_bar);
  const auto wphi = apply_site(grid_.site_kernel(1.0), f.phi);
  const auto wphib = apply_site(grid_.site_kernel(1.0), f.phi_bar);
  const auto winv_pi = apply_site(grid_.site_kernel(-1.0), f.pi);
  const auto winv_pib = apply_site(grid_.site_kernel(-1.0), f.pi_bar);
  SparseOperator r(size(), size());
  for (int n = 0; n < grid_.size(); ++n) {
    r -= dphib[n] * f.pi_bar[n] + f.pi[n] * dphi[n];
    r += kI * SparseOperator(dphib[n] * wphi[n] + dpi[n] * winv_pib[n]);
    r -= dphi[n] * f.pi[n] + f.pi_bar[n] * dphib[n];
    r += kI * SparseOperator(dphi[n] * wphib[n] + dpib[n] * winv_pi[n]);
  }
  r *= 0.5 * grid_.dx();
  return {"P", route, r};
}

CompositeOperator ComplexScalarField::position(Route route) const {
  const CMatrix x = grid_.positions().cast<Complex>().asDiagonal();
  if (route == Route::ModeForm) {
    const CMatrix xo = grid_.position_operator();
    return {"X", route, family_a(lift(basis_a_, xo)) + family_b(lift(basis_b_, xo))};
  }
  if (route == Route::PositionModeForm) {
    return {"X", route,
            site_bilinear(apply_site(grid_.site_transform(), a_), x, size()) +
                site_bilinear(apply_site(grid_.site_transform(), b_), x, size())};
  }
  const auto& f = fields_;
  const auto hphi = apply_site(grid_.site_kernel(0.5), f.phi);
  const auto hphib = apply_site(grid_.site_kernel(0.5), f.phi_bar);
  const auto hpi = apply_site(grid_.site_kernel(-0.5), f.pi);
  const auto hpib = apply_site(grid_.site_kernel(-0.5), f.pi_bar);
  SparseOperator r(size(), size());
  for (int n = 0; n < grid_.size(); ++n) {
    SparseOperator first = SparseOperator(hphib[n] - kI * hpi[n]) * SparseOperator(hphi[n] + kI * hpib[n]);
    SparseOperator second = SparseOperator(hphi[n] - kI * hpib[n]) * SparseOperator(hphib[n] + kI * hpi[n]);
    r += grid_.positions()[n] * SparseOperator(first + second);
  }
  r *= 0.5 * grid_.dx() / grid_.hbar();
  return {"X", route, r};
}

}  // namespace fockbridge
