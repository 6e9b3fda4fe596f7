#include <benchmark/benchmark.h>

#include "noneq/driven.hpp"
#include "noneq/faddeeva.hpp"
#include "noneq/response.hpp"
#include "noneq/wavemixing.hpp"

using namespace noneq;

namespace {

void BM_Faddeeva(benchmark::State& state) {
  double x = -4.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::faddeeva(cplx(x, 0.3)));
    x = x > 4.0 ? -4.0 : x + 1e-3;
  }
}
BENCHMARK(BM_Faddeeva);

void BM_LinearSignal(benchmark::State& state) {
  const auto sys = make_lambda_system(0.0, 0.1, 0.8);
  const auto rho = maximally_coherent_state(sys, "a", "b");
  const auto pulse = fields::ChirpedGaussianPulse::from_fs(1.0, 6.6, 0.5, 50.0);
  const auto grid = uniform_grid(0.6, 0.9, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(response::linear_signal(sys, rho, pulse, grid, 0.004));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LinearSignal)->Arg(301)->Arg(3001);

void BM_DrivenSignal(benchmark::State& state) {
  const auto sys = make_lambda_system(
      0.0, 0.01, 1.0, {{1, 0, 0.004}, {2, 0, 0.0001}, {2, 1, 0.0002}}, 0.0259);
  const auto d = driven::make_driven(sys, 0.05, 0.01);
  const auto pulse = fields::ChirpedGaussianPulse::from_fs(1.0, 0.14, 0.5, 0.0);
  const auto grid = uniform_grid(0.92, 1.08, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(driven::driven_signal(d, pulse, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DrivenSignal)->Arg(641)->Arg(6401);

void BM_PathwayFwm(benchmark::State& state) {
  CMatrix mu = CMatrix::Zero(3, 3);
  mu(0, 2) = 1.0;
  mu(1, 2) = 1.0;
  const LevelSystem sys({"a", "b", "c"}, {0.0, 0.4, 1.2}, mu);
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 0) = m(1, 1) = 0.5;
  const wavemixing::FWMScenario sc{
      sys,
      DensityMatrix(m, 1.0),
      {fields::CWField(1.0, 1.1, 1), fields::CWField(1.0, 0.75, -1),
       fields::CWField(1.0, 1.0, 1)},
      fields::GaussianProbe(10.0, 0.5),
      0.002};
  const auto grid = uniform_grid(0.75, 1.95, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wavemixing::chi3_pathway_fwm(sc, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PathwayFwm)->Arg(601);

void BM_FilteredChi3(benchmark::State& state) {
  CMatrix mu = CMatrix::Zero(3, 3);
  mu(0, 2) = 1.0;
  mu(1, 2) = 1.0;
  const LevelSystem sys({"a", "b", "c"}, {0.0, 0.4, 1.2}, mu);
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 0) = m(1, 1) = 0.5;
  const wavemixing::FWMScenario sc{
      sys,
      DensityMatrix(m, 1.0),
      {fields::CWField(1.0, 1.1, 1), fields::CWField(1.0, 0.75, -1),
       fields::CWField(1.0, 1.0, 1)},
      fields::GaussianProbe(10.0, 0.5),
      0.002};
  const auto grid = uniform_grid(0.75, 1.95, 601);
  const auto window = wavemixing::default_filter_window(sc);
  for (auto _ : state)
    benchmark::DoNotOptimize(wavemixing::fwm_signal_from_chi3(sc, grid, window));
}
BENCHMARK(BM_FilteredChi3);

}  // namespace

BENCHMARK_MAIN();
