#include <benchmark/benchmark.h>

#include <random>

#include "fockbridge/algebra.hpp"
#include "fockbridge/fields.hpp"
#include "fockbridge/lorentz.hpp"
#include "fockbridge/newton_wigner.hpp"

using namespace fockbridge;

namespace {

LatticeSpec spec(int modes, int n_max, Statistics s = Statistics::Bose) {
  LatticeSpec l;
  l.mode_count = modes;
  l.n_max = n_max;
  l.statistics = s;
  return l;
}

void BM_NormalOrder(benchmark::State& state) {
  std::string w;
  for (int i = 0; i < state.range(0); ++i) w += "PPPXPPXX";
  const auto word = algebra::parse_word(w);
  for (auto _ : state) benchmark::DoNotOptimize(algebra::normal_order(word));
}
BENCHMARK(BM_NormalOrder)->Arg(1)->Arg(2)->Arg(3);

void BM_PermutationExpansion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(algebra::expand_permutation_sum(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PermutationExpansion)->DenseRange(3, 7);

void BM_EnumerateBasis(benchmark::State& state) {
  const auto s = spec(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_basis(s));
}
BENCHMARK(BM_EnumerateBasis)->Args({5, 4})->Args({21, 4})->Args({41, 3});

void BM_Lift(benchmark::State& state) {
  const auto s = spec(static_cast<int>(state.range(0)), 3, state.range(1) ? Statistics::Fermi : Statistics::Bose);
  const FockBasis b = enumerate_basis(s);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> d;
  CMatrix t(s.mode_count, s.mode_count);
  for (int j = 0; j < t.cols(); ++j)
    for (int i = 0; i < t.rows(); ++i) t(i, j) = Complex(d(rng), d(rng));
  for (auto _ : state) benchmark::DoNotOptimize(lift(b, t));
}
BENCHMARK(BM_Lift)->Args({9, 0})->Args({9, 1})->Args({15, 0});

void BM_FieldFormHamiltonian(benchmark::State& state) {
  const auto s = spec(static_cast<int>(state.range(0)), 4);
  const RealScalarField field(build_grid(s), enumerate_basis(s));
  for (auto _ : state) benchmark::DoNotOptimize(field.hamiltonian(Route::FieldForm));
}
BENCHMARK(BM_FieldFormHamiltonian)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_ChiOverlap(benchmark::State& state) {
  const QuadratureGrid g = QuadratureGrid::standard(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(nw::chi_overlap(g, 1.0, 0.0));
}
BENCHMARK(BM_ChiOverlap);

void BM_BoostAmplitude(benchmark::State& state) {
  const auto f = lorentz::gaussian_amplitude(QuadratureGrid::standard(1.0), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(lorentz::boost_amplitude(f, {0.5}));
}
BENCHMARK(BM_BoostAmplitude);

}  // namespace

BENCHMARK_MAIN();
