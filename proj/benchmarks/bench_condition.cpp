#include <benchmark/benchmark.h>

#include <random>

#include "subcond/condition.hpp"
#include "subcond/grassmann.hpp"
#include "subcond/perturbation.hpp"

namespace {

using namespace subcond;

PaddedSpectrum spectrum_of_size(Index m) {
  RealVector sigma(m);
  std::mt19937_64 rng(7);
  double value = static_cast<double>(m) + 1.0;
  for (Index i = 0; i < m; ++i) {
    value -= 0.3 + (rng() % 100) / 150.0;
    sigma(i) = value > 0.0 ? value : 1.0 / static_cast<double>(i + 1);
  }
  std::sort(sigma.data(), sigma.data() + m, std::greater<>());
  return PaddedSpectrum::create(sigma, m, m, m);
}

Selection half_selection(Index m) {
  std::vector<int> idx;
  for (int i = 1; i <= m; i += 2) idx.push_back(i);
  return Selection(Side::Left, m, idx);
}

Matrix random_matrix(Index m, Index n) {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> gauss;
  RealMatrix a(m, n);
  for (Index c = 0; c < n; ++c) {
    for (Index r = 0; r < m; ++r) a(r, c) = gauss(rng);
  }
  return Matrix::from_real(std::move(a));
}

void BM_KappaFormula(benchmark::State& state) {
  const Index m = state.range(0);
  const PaddedSpectrum spectrum = spectrum_of_size(m);
  const Selection sel = half_selection(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kappa_formula(spectrum, sel).kappa);
  }
  state.SetComplexityN(m);
}
BENCHMARK(BM_KappaFormula)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_KappaDiagonalOperator(benchmark::State& state) {
  const Index m = state.range(0);
  const PaddedSpectrum spectrum = spectrum_of_size(m);
  const Selection sel = half_selection(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kappa_diagonal_operator(spectrum, sel));
  }
}
BENCHMARK(BM_KappaDiagonalOperator)->RangeMultiplier(4)->Range(16, 1024);

void BM_SvdFull(benchmark::State& state) {
  const Index m = state.range(0);
  const Matrix a = random_matrix(m, (3 * m) / 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(svd_full(a).rank);
  }
}
BENCHMARK(BM_SvdFull)->RangeMultiplier(2)->Range(8, 64);

void BM_WorstDirection(benchmark::State& state) {
  const Index m = state.range(0);
  const SvdFactors f = svd_full(random_matrix(m, (3 * m) / 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        worst_direction(f, 1, static_cast<int>(m)).adot.rows());
  }
}
BENCHMARK(BM_WorstDirection)->RangeMultiplier(2)->Range(8, 64);

void BM_PrincipalAngles(benchmark::State& state) {
  const Index d = state.range(0);
  const SvdFactors f = svd_full(random_matrix(d, d));
  const SubspaceProjector p =
      subspace_of(f, Selection(Side::Left, d, {1, 2}));
  const SubspaceProjector q =
      subspace_of(f, Selection(Side::Left, d, {2, 3}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(principal_angles(p, q).theta.sum());
  }
}
BENCHMARK(BM_PrincipalAngles)->RangeMultiplier(2)->Range(8, 64);

void BM_DirectionalQuotient(benchmark::State& state) {
  const Matrix a = random_matrix(12, 9);
  const SvdFactors f = svd_full(a);
  const Selection sel(Side::Left, 12, {1});
  const ConditionReport report = kappa_formula(padded_spectrum(f), sel);
  const PerturbationDirection dir =
      worst_direction(f, report.witness->first, report.witness->second);
  const double t = 1e-6 / dir.adot.frobenius_norm();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        directional_quotient(a, sel, dir, t, DistanceKind::Chordal));
  }
}
BENCHMARK(BM_DirectionalQuotient);

}  // namespace

BENCHMARK_MAIN();
