// Acceptance runner: one pass/fail line per sub-check, grouped by criterion.
// Usage: fockbridge_acceptance <criterion>|all

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "fockbridge/algebra.hpp"
#include "fockbridge/fields.hpp"
#include "fockbridge/lorentz.hpp"
#include "fockbridge/newton_wigner.hpp"
#include "fockbridge/oracle.hpp"
#include "oracles.hpp"

using namespace fockbridge;

namespace {

struct Line {
  std::string what;
  double value;
  double bound;
  bool lower = false;  // pass iff value > bound instead of value <= bound
  bool ok() const { return lower ? value > bound : value <= bound; }
};

struct Criterion {
  std::string name;
  double runtime_limit;  // seconds
  std::function<std::vector<Line>()> run;
};

LatticeSpec lattice(int modes, int n_max, Statistics s = Statistics::Bose, double length = 2 * kPi) {
  LatticeSpec l;
  l.mode_count = modes;
  l.n_max = n_max;
  l.statistics = s;
  l.box_length = length;
  return l;
}

CMatrix random_matrix(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> d;
  CMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) m(i, j) = Complex(d(rng), d(rng));
  return m;
}

std::vector<Line> normal_order_anchor() {
  const auto nf = algebra::normal_order(algebra::parse_word("PPPXPPXX"));
  const std::int64_t expected[4] = {1, 13, 44, 36};
  std::vector<Line> out;
  for (int k = 0; k < 4; ++k) {
    const double diff = std::abs(static_cast<double>(nf.coefficient(3 - k, 5 - k, k) - expected[k]));
    out.push_back({"coefficient of (-i hbar)^" + std::to_string(k) + " X^" + std::to_string(3 - k) + " P^" +
                       std::to_string(5 - k) + " = " + std::to_string(expected[k]),
                   diff, 0.0});
  }
  out.push_back({"no other terms", std::abs(static_cast<double>(nf.size()) - 4.0), 0.0});
  return out;
}

std::vector<Line> permutation_expansion() {
  const auto e = algebra::expand_permutation_sum(3);
  const std::map<algebra::IndexPattern, std::int64_t> expected{
      {{0, 1, 2}, 1}, {{0, 0, 1}, -1}, {{0, 1, 0}, -1}, {{0, 1, 1}, -1}, {{0, 0, 0}, 2}};
  double diff = std::abs(static_cast<double>(e.terms.size()) - 5.0);
  for (const auto& [p, c] : expected) diff += std::abs(static_cast<double>(e.coefficient(p) - c));
  std::mt19937_64 rng(7);
  double dev = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<CMatrix> f;
    for (int i = 0; i < 3; ++i) f.push_back(random_matrix(rng, 2));
    dev = std::max(dev, algebra::verify_expansion(e, f).max_deviation);
  }
  return {{"five terms with coefficients (+1, -1, -1, -1, +2)", diff, 0.0},
          {"brute-force enumeration, 10 random 2x2 triples", dev, 1e-10}};
}

std::vector<Line> building_block_sweep() {
  std::vector<Line> out;
  for (Statistics s : {Statistics::Bose, Statistics::Fermi}) {
    const auto spec = lattice(5, 3, s);
    const ModeGrid g = build_grid(spec);
    const FockBasis b = enumerate_basis(spec);
    const RealScalarField field(g, b);
    double dev = 0.0, cross = 0.0;
    for (int n = 1; n <= 3; ++n) {
      const auto space = oracle::build_space(n, 5, oracle::symmetry_for(s));
      for (int m = 0; m <= 3; ++m)
        for (int k = 0; m + k <= 3; ++k) {
          const SparseOperator lifted = field.building_block(m, k);
          dev = std::max(dev, oracle::compare_with_lift(space, g, m, k, lifted, b));
          cross = std::max(cross, cross_sector_max(lifted, b));
        }
    }
    const std::string tag(to_string(s));
    out.push_back({tag + ": lifted blocks = dense N-particle oracle, N <= 3, m + n <= 3", dev, 1e-10});
    out.push_back({tag + ": cross-sector blocks vanish", cross, 0.0});
  }
  return out;
}

std::vector<Line> field_form_equivalence() {
  const auto spec = lattice(5, 4);
  const RealScalarField field(build_grid(spec), enumerate_basis(spec));
  using Getter = CompositeOperator (RealScalarField::*)(Route) const;
  std::vector<Line> out;
  for (auto [label, get] : {std::pair<const char*, Getter>{"H", &RealScalarField::hamiltonian},
                            {"P", &RealScalarField::momentum},
                            {"N", &RealScalarField::number},
                            {"X", &RealScalarField::position}}) {
    const SparseOperator d = (field.*get)(Route::FieldForm).op - (field.*get)(Route::ModeForm).op;
    out.push_back({std::string(label) + ": field form = mode form on sectors <= 2",
                   max_abs_on_sectors(d, field.basis(), 2), 1e-10});
  }
  return out;
}

std::vector<Line> lift_homomorphism() {
  std::vector<Line> out;
  for (Statistics s : {Statistics::Bose, Statistics::Fermi}) {
    const FockBasis b = enumerate_basis(lattice(5, 4, s));
    std::mt19937_64 rng(11);
    double dev = 0.0;
    for (int i = 0; i < 20; ++i) {
      const CMatrix t1 = random_matrix(rng, 5), t2 = random_matrix(rng, 5);
      dev = std::max(dev, lift_homomorphism_deviation(b, t1, t2));
    }
    out.push_back({std::string(to_string(s)) + ": [G(t1), G(t2)] = G([t1, t2]), 20 random pairs", dev, 1e-12});
  }
  return out;
}

std::vector<Line> conservation() {
  std::vector<Line> out;
  for (Statistics s : {Statistics::Bose, Statistics::Fermi}) {
    const auto spec = lattice(5, 4, s);
    const HeisenbergReport r = heisenberg_checks(RealScalarField(build_grid(spec), enumerate_basis(spec)));
    const std::string tag(to_string(s));
    out.push_back({tag + ": [N, H] = 0", r.number_commutator, 0.0});
    out.push_back({tag + ": [P, H] = 0", r.momentum_commutator, 0.0});
    out.push_back({tag + ": [X, H]/(i hbar) = G([x, h]/(i hbar)) on sectors <= 2", r.velocity_lattice, 1e-10});
  }
  const ModeGrid bulk = build_grid(lattice(61, 1, Statistics::Bose, 36.0));
  out.push_back({"[x, h]/(i hbar) psi = (k/omega) psi on a bulk wavepacket",
                 velocity_wavepacket_deviation(bulk, gaussian_packet(bulk, 18.0, 1.2)), 1e-6});
  const ModeGrid g = build_grid(lattice(5, 4));
  const RVector v = g.momenta().cwiseQuotient(g.frequencies());
  out.push_back({"one-particle velocity eigenvalues in (-1, 1): max |v|", v.cwiseAbs().maxCoeff(), 1.0 - 1e-15});
  return out;
}

std::vector<Line> velocity_literal() {
  std::vector<Line> out;
  for (Statistics s : {Statistics::Bose, Statistics::Fermi}) {
    const auto spec = lattice(5, 4, s);
    const HeisenbergReport r = heisenberg_checks(RealScalarField(build_grid(spec), enumerate_basis(spec)));
    out.push_back({std::string(to_string(s)) + ": [X, H]/(i hbar) = G(diag k/omega) on sectors <= 2",
                   r.velocity_literal, 1e-10});
  }
  return out;
}

std::vector<Line> fermi_anticommutators() {
  const auto spec = lattice(5, 5, Statistics::Fermi, 5.0);
  const ModeGrid g = build_grid(spec);
  const AnticommutatorReport r = fermi_field_anticommutators(g, enumerate_basis(spec));
  const RVector kernel = anticommutator_kernel(g);
  double oracle_dev = 0.0;
  for (int n = 0; n < 5; ++n) {
    const double mode_sum = 2.0 * oracles::vacuum_correlator(5, 5.0, 1.0, 1.0, n, 0).real();
    oracle_dev = std::max(oracle_dev, std::abs(kernel[n] - mode_sum));
  }
  return {{"{phi, pi} = 0", r.phi_pi, 1e-12},
          {"{phi, phi} = hbar W^-1 delta kernel", r.phi_phi, 1e-10},
          {"{pi, pi} = hbar W delta kernel", r.pi_pi, 1e-10},
          {"W^-1 kernel = mode-sum oracle", oracle_dev, 1e-12},
          {"|{phi_0, phi_far}| at maximal separation > 1e-6", r.max_separation_value, 1e-6, true}};
}

std::vector<Line> classical_conservation() {
  const ModeGrid g = build_grid(lattice(15, 1, Statistics::Bose, 8.0));
  std::mt19937_64 rng(5);
  std::normal_distribution<double> d;
  double dn = 0.0, de = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    RVector phi(g.size()), pi(g.size());
    for (int n = 0; n < g.size(); ++n) {
      phi[n] = d(rng);
      pi[n] = d(rng);
    }
    const double n0 = classical_number_functional(g, phi, pi), e0 = classical_energy(g, phi, pi);
    for (int i = 0; i <= 100; ++i) {
      const auto [a, b] = classical_evolve(g, phi, pi, 0.1 * i);
      dn = std::max(dn, std::abs(classical_number_functional(g, a, b) - n0) / n0);
      de = std::max(de, std::abs(classical_energy(g, a, b) - e0) / e0);
    }
  }
  return {{"N_cl conserved on t in [0, 10] (relative)", dn, 1e-12},
          {"H_cl conserved on t in [0, 10] (relative)", de, 1e-12}};
}

std::vector<Line> newton_wigner() {
  const QuadratureGrid g = QuadratureGrid::standard(1.0);
  double k0_dev = 0.0, integral_dev = 0.0;
  for (int i = 1; i <= 30; ++i) {
    const double d = 0.1 * i;
    const double q = nw::chi_overlap(g, d, 0.0).real();
    const double direct = oracles::cutoff_overlap_integral(1.0, 40.0, d);
    k0_dev = std::max(k0_dev, std::abs(q - nw::cutoff_bessel_k0_overlap(1.0, 40.0, d)) / std::abs(direct));
    integral_dev = std::max(integral_dev, std::abs(q - direct) / std::abs(direct));
  }
  double parseval = 0.0;
  for (double w : {0.5, 1.0, 2.0}) parseval = std::max(parseval, nw::x_route_norm_deviation(g, nw::gaussian_state(g, 0.0, w), w));
  const double ratio = nw::localization_width(g, nw::Representation::Chi) /
                       nw::localization_width(QuadratureGrid::standard(2.0), nw::Representation::Chi);
  const auto m = nw::measure_consistency_check();
  return {{"chi overlap = cutoff K0 profile, m d in [0.1, 3] (relative)", k0_dev, 1e-2},
          {"chi overlap = Gauss-Kronrod integral oracle (relative)", integral_dev, 1e-2},
          {"x-representation Parseval", parseval, 1e-6},
          {"FWHM(m) / FWHM(2m) within 2 +- 10%: |ratio/2 - 1|", std::abs(ratio / 2.0 - 1.0), 0.1},
          {"x-route norm deviation, width-m Gaussian", m.x_route_wide, 1e-6},
          {"chi-route norm deviation, width-m Gaussian > 1%", m.chi_route_wide, 1e-2, true}};
}

std::vector<Line> lorentz_checks() {
  const auto f = lorentz::gaussian_amplitude(QuadratureGrid::standard(1.0), 1.0, 0.2, 0.4);
  const double n = lorentz::particle_number(f);
  const auto [e, p] = lorentz::four_momentum_expectation(f);
  std::vector<Line> out;
  for (double eta : {0.2, 0.5, 1.0}) {
    char tag[32];
    std::snprintf(tag, sizeof tag, "eta=%.1f: ", eta);
    const lorentz::BoostParams b{eta};
    const auto boosted = lorentz::boost_amplitude(f, b);
    const auto [eb, pb] = lorentz::four_momentum_expectation(boosted);
    const auto [ee, pe] = lorentz::transform_four_vector(e, p, b);
    out.push_back({std::string(tag) + "(E, P) transforms as a 2-vector (relative)",
                   std::hypot(eb - ee, pb - pe) / std::hypot(ee, pe), 1e-6});
    out.push_back({std::string(tag) + "N invariant (relative)", std::abs(lorentz::particle_number(boosted) - n) / n,
                   1e-6});
    out.push_back({std::string(tag) + "<[X, P]>/N = i hbar",
                   lorentz::position_expectation_and_commutator(f, b).commutator_deviation, 1e-5});
    const auto two = lorentz::boost_amplitude(lorentz::boost_amplitude(f, {0.5 * eta}), {0.5 * eta});
    out.push_back({std::string(tag) + "U(eta/2) U(eta/2) = U(eta)", (two.values - boosted.values).cwiseAbs().maxCoeff(),
                   2e-5});
  }
  return out;
}

std::vector<Line> antiparticles() {
  LatticeSpec s = lattice(3, 2);
  s.box_length = 5.0;
  const ComplexScalarField f(build_grid(s), 2, 2, 1.0);
  const SparseOperator q = f.charge_operator(Route::ModeForm).op;
  const SparseOperator h = f.hamiltonian(Route::ModeForm).op;
  double qdev = max_abs(SparseOperator(q - SparseOperator(q.diagonal().asDiagonal())));
  for (std::int64_t i = 0; i < f.size(); ++i)
    qdev = std::max(qdev, std::abs(q.coeff(i, i) - Complex(f.sector_a(i) - f.sector_b(i))));
  const CVector pair = f.create_a(0) * (f.create_b(2) * CVector(CVector::Unit(f.size(), 0)));
  const SparseOperator n = f.number_a(Route::ModeForm).op + f.number_b(Route::ModeForm).op;
  auto keep = [&](std::int64_t i) { return f.in_equivalence_domain(i); };
  using Getter = CompositeOperator (ComplexScalarField::*)(Route) const;
  double eq = 0.0;
  for (Getter get : {&ComplexScalarField::number_a, &ComplexScalarField::number_b, &ComplexScalarField::charge_operator,
                     &ComplexScalarField::hamiltonian, &ComplexScalarField::momentum, &ComplexScalarField::position}) {
    eq = std::max(eq, max_abs_on_columns(SparseOperator((f.*get)(Route::FieldForm).op - (f.*get)(Route::ModeForm).op), keep));
  }
  return {{"Q = e (N_a - N_b) on the basis", qdev, 0.0},
          {"[Q, H] = 0", max_abs(commutator(q, h)), 0.0},
          {"[N_a, H] = 0", max_abs(commutator(f.number_a(Route::ModeForm).op, h)), 0.0},
          {"[N_b, H] = 0", max_abs(commutator(f.number_b(Route::ModeForm).op, h)), 0.0},
          {"pair state: Q = 0", (q * pair).norm(), 0.0},
          {"pair state: N = 2", (n * pair - 2.0 * pair).norm(), 0.0},
          {"field form = mode form on truncation-safe sectors", eq, 1e-10}};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Line> determinism() {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / ("fockbridge_determinism_" + std::to_string(::getpid()));
  std::vector<std::string> reports;
  int status = 0;
  for (const char* run : {"a", "b"}) {
    const std::string cmd = std::string("\"") + FOCKBRIDGE_CLI + "\" verify all --seed 17 --out \"" +
                            (root / run).string() + "\" > /dev/null";
    status = std::max(status, std::system(cmd.c_str()));
    reports.push_back(slurp(root / run / "report.json"));
  }
  fs::remove_all(root);
  return {{"both runs exit 0", static_cast<double>(status), 0.0},
          {"report.json non-empty", reports[0].empty() ? 1.0 : 0.0, 0.0},
          {"report.json byte-identical across runs", reports[0] == reports[1] ? 0.0 : 1.0, 0.0}};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"normal_order_anchor", 1e-3, normal_order_anchor},
      {"permutation_expansion", 1.0, permutation_expansion},
      {"building_block_sweep", 30.0, building_block_sweep},
      {"field_form_equivalence", 10.0, field_form_equivalence},
      {"lift_homomorphism", 5.0, lift_homomorphism},
      {"conservation", 60.0, conservation},
      {"velocity_literal", 60.0, velocity_literal},
      {"fermi_anticommutators", 60.0, fermi_anticommutators},
      {"classical_conservation", 60.0, classical_conservation},
      {"newton_wigner", 10.0, newton_wigner},
      {"lorentz", 10.0, lorentz_checks},
      {"antiparticles", 60.0, antiparticles},
      {"determinism", 120.0, determinism},
  };
  return all;
}

bool run(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Line> lines = c.run();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = true;
  for (const auto& l : lines) {
    ok = ok && l.ok();
    std::printf("%s  %-22s %-70s %.3e %s %.1e\n", l.ok() ? "PASS" : "FAIL", c.name.c_str(), l.what.c_str(), l.value,
                l.lower ? ">" : "<=", l.bound);
  }
  const bool fast = seconds < c.runtime_limit;
  std::printf("%s  %-22s %-70s %.3e <= %.1e\n", fast ? "PASS" : "FAIL", c.name.c_str(), "runtime (s)", seconds,
              c.runtime_limit);
  return ok && fast;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string which = argc > 1 ? argv[1] : "all";
  bool ok = true, found = false;
  for (const auto& c : criteria()) {
    if (which != "all" && which != c.name) continue;
    found = true;
    ok = run(c) && ok;
  }
  if (!found) {
    std::fprintf(stderr, "unknown criterion '%s'\n", which.c_str());
    return 2;
  }
  return ok ? 0 : 1;
}
