#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fockbridge/common.hpp"
#include "fockbridge/fock.hpp"
#include "fockbridge/grid.hpp"

namespace fockbridge {

/// W^s = (m^2 - d^2/dx^2)^{s/2}: multiplier omega_j^s in momentum space.
class WKernel {
 public:
  WKernel(const ModeGrid& grid, double exponent);

  double exponent() const { return exponent_; }
  const RVector& multipliers() const { return multipliers_; }
  /// Site-space kernel B_nm, the lattice analog of B(x - y).
  const CMatrix& site_matrix() const { return site_; }

  /// DFT, multiply by omega^s, inverse DFT.
  CVector apply(const CVector& site_values) const;
  /// Same through the site kernel matrix.
  CVector apply_kernel(const CVector& site_values) const;

 private:
  ModeGrid grid_;
  double exponent_;
  RVector multipliers_;
  CMatrix site_;
};

/// Site field operators at t = 0. The bar members are filled for the complex field only.
struct FieldSet {
  std::vector<SparseOperator> phi;
  std::vector<SparseOperator> pi;
  std::vector<SparseOperator> phi_bar;
  std::vector<SparseOperator> pi_bar;
};

/// phi_n = sum_j sqrt(hbar/(2 omega_j L)) (a_j e^{ik_j x_n} + a_j^+ e^{-ik_j x_n}),
/// pi_n = -i sum_j sqrt(hbar omega_j/(2L)) (a_j e^{ik_j x_n} - a_j^+ e^{-ik_j x_n}).
FieldSet build_fields(const ModeGrid& grid, const FockBasis& basis);

enum class Route { ModeForm, FieldForm, PositionModeForm };
std::string_view to_string(Route route);

struct CompositeOperator {
  std::string name;
  Route route;
  SparseOperator op;
};

/// Real Klein-Gordon field on a truncated Fock space.
class RealScalarField {
 public:
  RealScalarField(const ModeGrid& grid, const FockBasis& basis);

  const ModeGrid& grid() const { return grid_; }
  const FockBasis& basis() const { return basis_; }
  const FieldSet& fields() const { return fields_; }

  /// FieldForm throws StatisticsMismatch for Fermi statistics.
  CompositeOperator hamiltonian(Route route) const;
  CompositeOperator momentum(Route route) const;
  CompositeOperator number(Route route) const;
  CompositeOperator position(Route route) const;

  /// Gamma(x^m p^n) with x = U^+ diag(x_n) U and p = diag(hbar k_j).
  SparseOperator building_block(int m, int n) const;
  /// Gamma(diag(k_j / omega_j)).
  SparseOperator velocity() const;

  /// Position modes b_n = sum_j U_nj a_j.
  const std::vector<SparseOperator>& position_modes() const { return site_annihilators_; }

  /// Sectors on which field forms equal mode forms: N <= n_max - 2.
  int equivalence_max_sector() const { return basis_.n_max() - 2; }

 private:
  void require_bose(const char* what) const;
  SparseOperator site_bilinear(const CMatrix& kernel) const;

  ModeGrid grid_;
  FockBasis basis_;
  FieldSet fields_;
  std::vector<SparseOperator> site_annihilators_;
};

/// sum_m w_m ops[m]
SparseOperator linear_combination(const std::vector<SparseOperator>& ops, const CVector& weights);

struct HeisenbergReport {
  double number_commutator = 0.0;    // max |[N,H]|
  double momentum_commutator = 0.0;  // max |[P,H]|
  /// [X,H]/(i hbar) against Gamma(diag(k/omega)) on sectors <= n_max-2.
  double velocity_literal = 0.0;
  /// field-form [X,H]/(i hbar) against Gamma([x,h]/(i hbar)) on sectors <= n_max-2.
  double velocity_lattice = 0.0;
  double max_speed = 0.0;  // max |k_j/omega_j|
};

HeisenbergReport heisenberg_checks(const RealScalarField& field);

/// max |[Gamma(t1),Gamma(t2)] - Gamma([t1,t2])| over the whole basis.
double lift_homomorphism_deviation(const FockBasis& basis, const CMatrix& t1, const CMatrix& t2);

/// One-particle Gaussian (width sigma, centre x0, carrier k0) in site space,
/// returned in the mode basis with unit norm.
CVector gaussian_packet(const ModeGrid& grid, double x0, double sigma, double k0 = 0.0);

/// max |([x,p] - i hbar) psi| for the packet psi given in the mode basis.
double xp_wavepacket_deviation(const ModeGrid& grid, const CVector& packet);
/// max |[x,h]/(i hbar) psi - (k/omega) psi|.
double velocity_wavepacket_deviation(const ModeGrid& grid, const CVector& packet);

struct AnticommutatorReport {
  double phi_pi = 0.0;
  double phi_phi = 0.0;
  double pi_pi = 0.0;
  /// c-number value of {phi_0, phi_{M/2}}, the spacelike witness.
  double max_separation_value = 0.0;
  int domain_max_sector = 0;
};

/// {phi_n,phi_m} = (hbar/dx) W^{-1}_nm, {phi_n,pi_m} = 0, {pi_n,pi_m} = (hbar/dx) W_nm.
AnticommutatorReport fermi_field_anticommutators(const ModeGrid& grid, const FockBasis& basis);

/// (hbar/dx) W^{-1}_{0,m} for m = 0..M-1, the {phi_0, phi_m} kernel.
RVector anticommutator_kernel(const ModeGrid& grid);

// Classical field configurations (real site vectors).
double classical_number_functional(const ModeGrid& grid, const RVector& phi, const RVector& pi);
double classical_energy(const ModeGrid& grid, const RVector& phi, const RVector& pi);
std::pair<RVector, RVector> classical_evolve(const ModeGrid& grid, const RVector& phi, const RVector& pi,
                                             double t);

/// Complex Klein-Gordon field on F_a x F_b (Bose), flat index ia * dim_b + ib.
class ComplexScalarField {
 public:
  ComplexScalarField(const ModeGrid& grid, int n_max_a, int n_max_b, double charge = 1.0,
                     std::int64_t cap = kDefaultBasisCap);

  const ModeGrid& grid() const { return grid_; }
  const FockBasis& basis_a() const { return basis_a_; }
  const FockBasis& basis_b() const { return basis_b_; }
  std::int64_t size() const { return basis_a_.size() * basis_b_.size(); }
  std::int64_t index(std::int64_t ia, std::int64_t ib) const { return ia * basis_b_.size() + ib; }
  int sector_a(std::int64_t i) const { return basis_a_.sector(i / basis_b_.size()); }
  int sector_b(std::int64_t i) const { return basis_b_.sector(i % basis_b_.size()); }
  double charge() const { return charge_; }

  const FieldSet& fields() const { return fields_; }

  CompositeOperator number_a(Route route) const;
  CompositeOperator number_b(Route route) const;
  CompositeOperator charge_operator(Route route) const;
  CompositeOperator hamiltonian(Route route) const;
  CompositeOperator momentum(Route route) const;
  CompositeOperator position(Route route) const;

  SparseOperator create_a(int mode) const;
  SparseOperator create_b(int mode) const;

  /// Field form equals mode form for N_a <= n_max_a - 1 and N_b <= n_max_b - 1.
  bool in_equivalence_domain(std::int64_t i) const;

 private:
  SparseOperator family_a(const SparseOperator& op) const;
  SparseOperator family_b(const SparseOperator& op) const;

  ModeGrid grid_;
  FockBasis basis_a_;
  FockBasis basis_b_;
  double charge_;
  FieldSet fields_;
  std::vector<SparseOperator> a_, b_;
};

}  // namespace fockbridge
