#include "fockbridge_cli/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <memory>
#include <random>
#include <set>

#include "fockbridge/algebra.hpp"
#include "fockbridge/fields.hpp"
#include "fockbridge/fock.hpp"
#include "fockbridge/lorentz.hpp"
#include "fockbridge/newton_wigner.hpp"
#include "fockbridge/oracle.hpp"

namespace fockbridge::cli {

namespace {

std::string stats_name(Statistics s) { return std::string(to_string(s)); }

std::string eta_label(double eta) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "[eta=%g]", eta);
  return buf;
}

// Per-check stream so concurrent scheduling cannot change the numbers.
std::mt19937_64 check_rng(std::uint64_t seed, const std::string& name) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(std::hash<std::string>{}(name))};
  return std::mt19937_64(seq);
}

CMatrix random_matrix(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> d;
  CMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) m(i, j) = Complex(d(rng), d(rng));
  return m;
}

ModeGrid make_grid(const RunConfig& c, Statistics s = Statistics::Bose) { return build_grid(c.lattice(s)); }
FockBasis make_basis(const RunConfig& c, Statistics s) { return enumerate_basis(c.lattice(s)); }
QuadratureGrid make_quadrature(const RunConfig& c) {
  return QuadratureGrid(c.mass, c.quadrature.cutoff_multiple * c.mass, c.quadrature.nodes, c.hbar);
}

// Checks outlive the builder, so they share ownership of the config.
class Builder {
 public:
  explicit Builder(const RunConfig& config) : c(std::make_shared<const RunConfig>(config)) {}

  void add(std::string group, std::string name, std::string anchor, double tol, std::function<CheckOutcome()> run) {
    checks_.push_back({std::move(group), std::move(name), std::move(anchor), tol, std::move(run)});
  }

  void algebra();
  void fock();
  void equivalence();
  void fields();
  void statistics();
  void classical();
  void nw();
  void lorentz();
  void antiparticles();

  std::vector<CheckDefinition> take() { return std::move(checks_); }

 private:
  std::shared_ptr<const RunConfig> c;
  std::vector<CheckDefinition> checks_;
};

void Builder::algebra() {
  add("algebra", "algebra.normal_order_example",
      "P^3 X P^2 X^2 = X^3 P^5 + 13 (-i hbar) X^2 P^4 + 44 (-i hbar)^2 X P^3 + 36 (-i hbar)^3 P^2", 0.0, [] {
        const auto nf = algebra::normal_order(algebra::parse_word("PPPXPPXX"));
        const std::map<algebra::Monomial, std::int64_t> expected{
            {{0, 3, 5}, 1}, {{1, 2, 4}, 13}, {{2, 1, 3}, 44}, {{3, 0, 2}, 36}};
        double dev = 0.0;
        for (const auto& [m, c] : nf.terms()) {
          auto it = expected.find(m);
          dev += std::abs(static_cast<double>(c - (it == expected.end() ? 0 : it->second)));
        }
        for (const auto& [m, c] : expected)
          if (!nf.terms().count(m)) dev += std::abs(static_cast<double>(c));
        return CheckOutcome{dev};
      });
  add("algebra", "algebra.permutation_coefficients_n3",
      "sum_P over 3 particles = (+1)[ijk] (-1)[iij] (-1)[iji] (-1)[ijj] (+2)[iii]", 0.0, [] {
        const auto e = algebra::expand_permutation_sum(3);
        const std::map<algebra::IndexPattern, std::int64_t> expected{
            {{0, 1, 2}, 1}, {{0, 0, 1}, -1}, {{0, 1, 0}, -1}, {{0, 1, 1}, -1}, {{0, 0, 0}, 2}};
        double dev = std::abs(static_cast<double>(e.terms.size()) - 5.0);
        for (const auto& [p, c] : expected) dev += std::abs(static_cast<double>(e.coefficient(p) - c));
        return CheckOutcome{dev};
      });
  for (int n : {3, 4}) {
    const std::string name = "algebra.permutation_brute_force_n" + std::to_string(n);
    add("algebra", name, "pattern expansion = explicit permutation sum, random 2x2 factors (relative)", 1e-10,
        [n, name, seed = c->seed] {
          auto rng = check_rng(seed, name);
          const auto e = algebra::expand_permutation_sum(n);
          std::vector<CMatrix> f;
          for (int i = 0; i < n; ++i) f.push_back(random_matrix(rng, 2));
          const auto r = algebra::verify_expansion(e, f);
          return CheckOutcome{r.max_deviation / r.scale};
        });
  }
}

void Builder::fock() {
  for (Statistics s : c->statistics_list()) {
    const std::string tag = stats_name(s);
    add("fock", "fock.sector_dimensions." + tag, "sector sizes = binomial counts", 0.0, [c = c, s] {
      const FockBasis b = make_basis(*c, s);
      double dev = 0.0;
      for (int n = 0; n <= b.n_max(); ++n)
        dev += std::abs(static_cast<double>(b.sector_size(n) - sector_dimension(b.modes(), n, s)));
      return CheckOutcome{dev};
    });
    add("fock", "fock.canonical." + tag,
        s == Statistics::Bose ? "[a_i, a_j^+] = delta_ij on untruncated sectors"
                              : "{a_i, a_j^+} = delta_ij on untruncated sectors",
        1e-13, [c = c, s] {
          const CanonicalReport r = check_canonical_relations(make_basis(*c, s));
          if (r.domain_max_sector < 0) return CheckOutcome::skipped("no sector below the truncation");
          return CheckOutcome{r.max_deviation};
        });
    const std::string name = "fock.lift_homomorphism." + tag;
    add("fock", name, "[Gamma(t1), Gamma(t2)] = Gamma([t1, t2]), 20 random pairs", 1e-12, [c = c, s, name] {
      auto rng = check_rng(c->seed, name);
      const FockBasis b = make_basis(*c, s);
      double dev = 0.0;
      for (int i = 0; i < 20; ++i) {
        const CMatrix t1 = random_matrix(rng, b.modes()), t2 = random_matrix(rng, b.modes());
        dev = std::max(dev, lift_homomorphism_deviation(b, t1, t2));
      }
      return CheckOutcome{dev};
    });
  }
}

void Builder::equivalence() {
  for (Statistics s : c->statistics_list()) {
    const std::string tag = stats_name(s);
    add("equivalence", "equivalence.building_blocks." + tag,
        "sector-N block of Gamma(x^m p^n) = sum_i x_i^m p_i^n, N <= 3, m + n <= 3", 1e-10, [c = c, s] {
          if (c->n_max < 1) return CheckOutcome::skipped("n_max < 1: no particle sector");
          const ModeGrid g = make_grid(*c, s);
          const FockBasis b = make_basis(*c, s);
          const RealScalarField field(g, b);
          double dev = 0.0;
          for (int n = 1; n <= std::min(3, c->n_max); ++n) {
            if (s == Statistics::Fermi && n > g.size()) continue;
            const auto space = oracle::build_space(n, g.size(), oracle::symmetry_for(s));
            for (int m = 0; m <= 3; ++m)
              for (int k = 0; m + k <= 3; ++k)
                dev = std::max(dev, oracle::compare_with_lift(space, g, m, k, field.building_block(m, k), b));
          }
          return CheckOutcome{dev};
        });
    add("equivalence", "equivalence.cross_sector." + tag, "lifted building blocks have no cross-sector entries", 0.0,
        [c = c, s] {
          const RealScalarField field(make_grid(*c, s), make_basis(*c, s));
          double dev = 0.0;
          for (int m = 0; m <= 3; ++m)
            for (int k = 0; m + k <= 3; ++k) dev = std::max(dev, cross_sector_max(field.building_block(m, k), field.basis()));
          return CheckOutcome{dev};
        });
    add("equivalence", "equivalence.permutation_operator." + tag,
        "sum_P P_i X_j (XP)_k = pattern expansion evaluated with lifts", 1e-9, [c = c, s] {
          if (c->n_max < 3) return CheckOutcome::skipped("n_max < 3: three-particle sector truncated away");
          const ModeGrid g = make_grid(*c, s);
          if (s == Statistics::Fermi && g.size() < 3) return CheckOutcome::skipped("fewer than 3 modes");
          const FockBasis b = make_basis(*c, s);
          const auto space = oracle::build_space(3, g.size(), oracle::symmetry_for(s));
          const std::vector<algebra::NormalForm> words{algebra::NormalForm::letter(algebra::Letter::P),
                                                       algebra::NormalForm::letter(algebra::Letter::X),
                                                       algebra::normal_order(algebra::parse_word("XP"))};
          const CMatrix direct = oracle::permutation_invariant_operator(space, g, words).matrix;
          const CMatrix lifted = oracle::evaluate_expansion(algebra::expand_permutation_sum(words), b, g, 3);
          return CheckOutcome{(direct - lifted).cwiseAbs().maxCoeff()};
        });
  }
}

void Builder::fields() {
  using Getter = CompositeOperator (RealScalarField::*)(Route) const;
  const std::pair<const char*, Getter> ops[] = {{"H", &RealScalarField::hamiltonian},
                                                {"P", &RealScalarField::momentum},
                                                {"N", &RealScalarField::number},
                                                {"X", &RealScalarField::position}};
  for (const auto& [label, get] : ops) {
    add("fields", std::string("fields.field_form.") + label,
        std::string(label) + ": field-operator form = mode form on sectors <= n_max - 2", 1e-10, [c = c, get = get] {
          if (c->n_max < 2) return CheckOutcome::skipped("n_max < 2: no sector is free of truncation effects");
          const RealScalarField field(make_grid(*c), make_basis(*c, Statistics::Bose));
          const SparseOperator d = (field.*get)(Route::FieldForm).op - (field.*get)(Route::ModeForm).op;
          return CheckOutcome{max_abs_on_sectors(d, field.basis(), field.equivalence_max_sector())};
        });
  }
  add("fields", "fields.xp_wavepacket", "[x, p] psi = i hbar psi on a bulk wavepacket", 1e-6, [c = c] {
    LatticeSpec s = c->lattice(Statistics::Bose);
    s.mode_count = 41;
    s.box_length = std::sqrt(2 * kPi * 41) * std::sqrt(c->hbar);
    s.n_max = 1;
    const ModeGrid g = build_grid(s);
    return CheckOutcome{xp_wavepacket_deviation(g, gaussian_packet(g, s.box_length / 2, std::sqrt(c->hbar / 2)))};
  });
}

void Builder::statistics() {
  for (Statistics s : c->statistics_list()) {
    const std::string tag = stats_name(s);
    auto report = [c = c, s] { return heisenberg_checks(RealScalarField(make_grid(*c, s), make_basis(*c, s))); };
    add("statistics", "statistics.number_conservation." + tag, "[N, H] = 0 structurally", 0.0,
        [report] { return CheckOutcome{report().number_commutator}; });
    add("statistics", "statistics.momentum_conservation." + tag, "[P, H] = 0 structurally", 0.0,
        [report] { return CheckOutcome{report().momentum_commutator}; });
    add("statistics", "statistics.velocity_lift." + tag,
        "[X, H]/(i hbar) = Gamma([x, h]/(i hbar)) on sectors <= n_max - 2", 1e-10, [c = c, report] {
          if (c->n_max < 2) return CheckOutcome::skipped("n_max < 2: no sector is free of truncation effects");
          return CheckOutcome{report().velocity_lattice};
        });
  }
  add("statistics", "statistics.velocity_wavepacket", "[x, h]/(i hbar) psi = (k/omega) psi on a bulk wavepacket",
      1e-6, [c = c] {
        LatticeSpec s = c->lattice(Statistics::Bose);
        s.mode_count = 61;
        s.box_length = 36.0;
        s.n_max = 1;
        const ModeGrid g = build_grid(s);
        return CheckOutcome{velocity_wavepacket_deviation(g, gaussian_packet(g, 18.0, 1.2))};
      });
  add("statistics", "statistics.subluminal", "one-particle velocities |k/omega| < 1 (max reported)", 1.0, [c = c] {
    const ModeGrid g = make_grid(*c);
    return CheckOutcome{g.momenta().cwiseQuotient(g.frequencies()).cwiseAbs().maxCoeff()};
  });

  const auto list = c->statistics_list();
  if (std::find(list.begin(), list.end(), Statistics::Fermi) == list.end()) return;
  auto anti = [c = c] { return fermi_field_anticommutators(make_grid(*c, Statistics::Fermi), make_basis(*c, Statistics::Fermi)); };
  add("statistics", "statistics.fermi_phi_pi", "{phi_n, pi_m} = 0", 1e-12, [anti] {
    const auto r = anti();
    if (r.domain_max_sector < 0) return CheckOutcome::skipped("no sector below the truncation");
    return CheckOutcome{r.phi_pi};
  });
  add("statistics", "statistics.fermi_phi_phi", "{phi_n, phi_m} = (hbar/dx) W^-1 kernel", 1e-10, [anti] {
    const auto r = anti();
    if (r.domain_max_sector < 0) return CheckOutcome::skipped("no sector below the truncation");
    return CheckOutcome{r.phi_phi};
  });
  add("statistics", "statistics.fermi_pi_pi", "{pi_n, pi_m} = (hbar/dx) W kernel", 1e-10, [anti] {
    const auto r = anti();
    if (r.domain_max_sector < 0) return CheckOutcome::skipped("no sector below the truncation");
    return CheckOutcome{r.pi_pi};
  });
  add("statistics", "statistics.fermi_spacelike_witness",
      "|{phi_0, phi_far}| > 1e-6 at maximal separation (reported as 1e-6 / value)", 1.0, [anti] {
        const auto r = anti();
        return CheckOutcome{r.max_separation_value > 0.0 ? 1e-6 / r.max_separation_value
                                                         : std::numeric_limits<double>::infinity()};
      });
}

void Builder::classical() {
  for (const char* which : {"number", "energy"}) {
    const std::string name = std::string("classical.") + which + "_conservation";
    const bool energy = std::string(which) == "energy";
    add("classical", name,
        energy ? "H_cl constant under free evolution, t in [0, 10] (relative)"
               : "N_cl constant under free evolution, t in [0, 10] (relative)",
        1e-12, [c = c, name, energy] {
          auto rng = check_rng(c->seed, name);
          std::normal_distribution<double> d;
          const ModeGrid g = make_grid(*c);
          RVector phi(g.size()), pi(g.size());
          for (int n = 0; n < g.size(); ++n) {
            phi[n] = d(rng);
            pi[n] = d(rng);
          }
          auto measure = [&](const RVector& a, const RVector& b) {
            return energy ? classical_energy(g, a, b) : classical_number_functional(g, a, b);
          };
          const double v0 = measure(phi, pi);
          double dev = 0.0;
          for (int i = 1; i <= 20; ++i) {
            const auto [a, b] = classical_evolve(g, phi, pi, 0.5 * i);
            dev = std::max(dev, std::abs(measure(a, b) - v0) / std::abs(v0));
          }
          return CheckOutcome{dev};
        });
  }
}

void Builder::nw() {
  add("nw", "nw.k0_profile", "chi overlap = cutoff K0 profile, m d in [0.1, 3] (relative)", 1e-2, [c = c] {
    const QuadratureGrid q = make_quadrature(*c);
    double dev = 0.0;
    for (int i = 1; i <= 30; ++i) {
      const double d = 0.1 * i * c->hbar / c->mass;
      const double k0 = nw::cutoff_bessel_k0_overlap(c->mass, q.cutoff(), d, c->hbar);
      dev = std::max(dev, std::abs(nw::chi_overlap(q, d, 0.0).real() - k0) / std::abs(k0));
    }
    return CheckOutcome{dev};
  });
  add("nw", "nw.x_parseval", "int |psi(x)|^2 dx = int |psi(p)|^2 dp/omega for Gaussians", 1e-6, [c = c] {
    const QuadratureGrid q = make_quadrature(*c);
    double dev = 0.0;
    for (double w : {0.5, 1.0, 2.0}) {
      dev = std::max(dev, nw::x_route_norm_deviation(q, nw::gaussian_state(q, 0.0, w * c->mass), w * c->mass));
    }
    return CheckOutcome{dev};
  });
  add("nw", "nw.compton_scaling", "chi-profile FWHM halves when m doubles (|ratio/2 - 1|)", 0.1, [c = c] {
    const double k = c->quadrature.cutoff_multiple;
    const QuadratureGrid q1(c->mass, k * c->mass, c->quadrature.nodes, c->hbar);
    const QuadratureGrid q2(2 * c->mass, 2 * k * c->mass, c->quadrature.nodes, c->hbar);
    const double ratio = nw::localization_width(q1, nw::Representation::Chi) /
                         nw::localization_width(q2, nw::Representation::Chi);
    return CheckOutcome{std::abs(ratio / 2.0 - 1.0)};
  });
  auto measure = [c = c] { return nw::measure_consistency_check(c->mass, c->hbar); };
  add("nw", "nw.measure_x_route", "x-route norm = invariant norm, width-m Gaussian", 1e-6,
      [measure] { return CheckOutcome{measure().x_route_wide}; });
  add("nw", "nw.measure_chi_route_witness",
      "chi-route norm misses the invariant norm by > 1% (reported as 0.01 / deviation)", 1.0, [measure] {
        return CheckOutcome{0.01 / measure().chi_route_wide};
      });
  add("nw", "nw.measure_narrow", "both routes agree for a nonrelativistic (narrow) Gaussian", 1e-3, [measure] {
    const auto r = measure();
    return CheckOutcome{std::max(r.x_route_narrow, r.chi_route_narrow)};
  });
}

void Builder::lorentz() {
  auto packet = [c = c] { return lorentz::gaussian_amplitude(make_quadrature(*c), c->mass, 0.2 * c->mass, 0.4 * c->hbar / c->mass); };
  for (double eta : c->rapidities) {
    const std::string tag = eta_label(eta);
    const lorentz::BoostParams b{eta};
    add("lorentz", "lorentz.four_vector" + tag, "(E, P) of the boosted packet = Lambda (E, P) (relative)", 1e-6,
        [packet, b] {
          const auto f = packet();
          const auto [e, p] = lorentz::four_momentum_expectation(f);
          const auto [eb, pb] = lorentz::four_momentum_expectation(lorentz::boost_amplitude(f, b));
          const auto [ee, pe] = lorentz::transform_four_vector(e, p, b);
          return CheckOutcome{std::hypot(eb - ee, pb - pe) / std::hypot(ee, pe)};
        });
    add("lorentz", "lorentz.number" + tag, "N[f] invariant under the boost (relative)", 1e-6, [packet, b] {
      const auto f = packet();
      const double n = lorentz::particle_number(f);
      return CheckOutcome{std::abs(lorentz::particle_number(lorentz::boost_amplitude(f, b)) - n) / n};
    });
    add("lorentz", "lorentz.commutator" + tag, "<[X, P]>/N = i hbar in the boosted frame", 1e-5, [packet, b] {
      return CheckOutcome{lorentz::position_expectation_and_commutator(packet(), b).commutator_deviation};
    });
    add("lorentz", "lorentz.group" + tag, "U(0.4 eta) U(0.6 eta) = U(eta) on the packet", 2e-5, [packet, eta] {
      const auto f = packet();
      const auto two = lorentz::boost_amplitude(lorentz::boost_amplitude(f, {0.6 * eta}), {0.4 * eta});
      const auto one = lorentz::boost_amplitude(f, {eta});
      return CheckOutcome{(two.values - one.values).cwiseAbs().maxCoeff()};
    });
  }
}

void Builder::antiparticles() {
  auto field = [c = c] {
    LatticeSpec s;
    s.mode_count = c->antiparticles.modes;
    s.box_length = c->antiparticles.box_length;
    s.mass = c->mass;
    s.hbar = c->hbar;
    return ComplexScalarField(build_grid(s), c->antiparticles.n_max, c->antiparticles.n_max, c->antiparticles.charge);
  };
  add("antiparticles", "antiparticles.charge_diagonal", "Q = e (N_a - N_b) on every basis state", 0.0, [field] {
    const ComplexScalarField f = field();
    const SparseOperator q = f.charge_operator(Route::ModeForm).op;
    const SparseOperator off = q - SparseOperator(q.diagonal().asDiagonal());
    double dev = max_abs(off);
    for (std::int64_t i = 0; i < f.size(); ++i)
      dev = std::max(dev, std::abs(q.coeff(i, i) - f.charge() * (f.sector_a(i) - f.sector_b(i))));
    return CheckOutcome{dev};
  });
  add("antiparticles", "antiparticles.conservation", "[Q, H] = [N_a, H] = [N_b, H] = 0 structurally", 0.0, [field] {
    const ComplexScalarField f = field();
    const SparseOperator h = f.hamiltonian(Route::ModeForm).op;
    return CheckOutcome{std::max({max_abs(commutator(f.charge_operator(Route::ModeForm).op, h)),
                                  max_abs(commutator(f.number_a(Route::ModeForm).op, h)),
                                  max_abs(commutator(f.number_b(Route::ModeForm).op, h))})};
  });
  add("antiparticles", "antiparticles.pair_state", "a^+ b^+ |0> has Q = 0 and N = 2", 0.0, [field] {
    const ComplexScalarField f = field();
    const CVector pair = f.create_a(0) * (f.create_b(f.grid().size() - 1) * CVector(CVector::Unit(f.size(), 0)));
    const SparseOperator n = f.number_a(Route::ModeForm).op + f.number_b(Route::ModeForm).op;
    const CVector q = f.charge_operator(Route::ModeForm).op * pair;
    return CheckOutcome{std::max(q.norm(), (n * pair - 2.0 * pair).norm())};
  });
  add("antiparticles", "antiparticles.field_form",
      "N_a, N_b, Q, H, P, X: field form = mode form on truncation-safe sectors", 1e-10, [field] {
        const ComplexScalarField f = field();
        auto keep = [&](std::int64_t i) { return f.in_equivalence_domain(i); };
        using Getter = CompositeOperator (ComplexScalarField::*)(Route) const;
        double dev = 0.0;
        for (Getter get : {&ComplexScalarField::number_a, &ComplexScalarField::number_b,
                           &ComplexScalarField::charge_operator, &ComplexScalarField::hamiltonian,
                           &ComplexScalarField::momentum, &ComplexScalarField::position}) {
          const SparseOperator d = (f.*get)(Route::FieldForm).op - (f.*get)(Route::ModeForm).op;
          dev = std::max(dev, max_abs_on_columns(d, keep));
        }
        return CheckOutcome{dev};
      });
}

}  // namespace

const std::vector<std::string>& selectors() {
  static const std::vector<std::string> s{"algebra", "fock",  "fields",  "equivalence",   "statistics",
                                          "classical", "nw", "lorentz", "antiparticles", "all"};
  return s;
}

std::vector<CheckDefinition> build_checks(const RunConfig& config, const std::string& selector) {
  if (std::find(selectors().begin(), selectors().end(), selector) == selectors().end()) {
    throw ConfigError("unknown selector '" + selector + "'");
  }
  Builder b(config);
  b.algebra();
  b.fock();
  b.equivalence();
  b.fields();
  b.statistics();
  b.classical();
  b.nw();
  b.lorentz();
  b.antiparticles();
  std::vector<CheckDefinition> all = b.take();

  std::set<std::string> names;
  for (const auto& c : all) names.insert(c.name);
  for (const auto& [name, tol] : config.tolerances) {
    if (!names.count(name)) throw ConfigError("config field 'tolerances." + name + "': no such check");
  }
  std::vector<CheckDefinition> out;
  for (auto& c : all) {
    if (selector != "all" && c.group != selector) continue;
    if (auto it = config.tolerances.find(c.name); it != config.tolerances.end()) c.tolerance = it->second;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CheckReport> run_checks(const std::vector<CheckDefinition>& checks, bool timings) {
  std::vector<std::future<CheckReport>> pending;
  for (const auto& check : checks) {
    pending.push_back(std::async(std::launch::async, [&check, timings] {
      CheckReport r;
      r.name = check.name;
      r.anchor = check.anchor;
      r.tolerance = check.tolerance;
      const auto start = std::chrono::steady_clock::now();
      try {
        const CheckOutcome o = check.run();
        if (!o.skip_reason.empty()) {
          r.status = CheckStatus::Skipped;
          r.reason = o.skip_reason;
        } else {
          r.deviation = o.deviation;
          r.status = *r.pass() ? CheckStatus::Pass : CheckStatus::Fail;
        }
      } catch (const CapacityError& e) {
        r.status = CheckStatus::Error;
        r.capacity_exceeded = true;
        r.reason = std::string("capacity: ") + e.what();
      } catch (const std::exception& e) {
        r.status = CheckStatus::Error;
        r.reason = e.what();
      }
      if (timings) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return r;
    }));
  }
  std::vector<CheckReport> out;
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

std::vector<CheckReport> run_suite(const RunConfig& config, const std::string& selector, bool timings) {
  return run_checks(build_checks(config, selector), timings);
}

}  // namespace fockbridge::cli
