#include <benchmark/benchmark.h>

#include <numbers>

#include "chiraltp/dynamics.hpp"
#include "chiraltp/lindblad.hpp"
#include "chiraltp/rotor.hpp"
#include "chiraltp/selection.hpp"
#include "chiraltp/stark.hpp"
#include "chiraltp/wigner.hpp"

namespace {

using namespace chiraltp;

const MoleculeSpec kMol = preset("propanediol-1,2");

void BM_wigner3j(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wigner3j(j, 1, j - 1, 1, 0, -1));
  }
}
BENCHMARK(BM_wigner3j)->Arg(2)->Arg(10)->Arg(30);

void BM_diagonalize_block(benchmark::State& state) {
  const int J_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(diagonalize_block(kMol, 10.0, 0, J_max));
  }
}
BENCHMARK(BM_diagonalize_block)->Arg(6)->Arg(10)->Arg(14);

void BM_coupling_pair(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(coupling_pair(kMol, 10.0, {1, 1, 4}, 10));
  }
}
BENCHMARK(BM_coupling_pair);

void BM_steady_state(benchmark::State& state) {
  const BeamDrive drive{1.0, 0.1, 0.1, 0.4, 0.7, std::numbers::pi / 2.0};
  const Liouvillian L = build_liouvillian(drive, DecayModel{0.1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(steady_state(L));
  }
}
BENCHMARK(BM_steady_state);

void BM_time_averaged_P_gamma(benchmark::State& state) {
  const BeamDrive drive{1.0, 1.0, 0.1, 0.4, 0.7, std::numbers::pi / 2.0};
  Eigen::Vector4cd c0 = Eigen::Vector4cd::Zero();
  c0(0) = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(time_averaged_P_gamma(drive, c0));
  }
}
BENCHMARK(BM_time_averaged_P_gamma);

}  // namespace

BENCHMARK_MAIN();
