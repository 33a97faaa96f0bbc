#include <benchmark/benchmark.h>

#include "mpconc/mpconc.hpp"

using namespace mpconc;

namespace {

DensityMatrix sample(const Dims& dims) {
  Rng rng(1);
  return random_mixed(dims, rng);
}

void BM_TauBound(benchmark::State& state, Dims dims, int threads) {
  const DensityMatrix rho = sample(dims);
  BoundOptions opts;
  opts.threads = threads;
  for (auto _ : state) benchmark::DoNotOptimize(tau_n(rho, opts).tau);
  state.counters["pairs"] = total_pair_count(dims);
}

void BM_LambdaSpectrum(benchmark::State& state, Dims dims) {
  const DensityMatrix rho = sample(dims);
  const SOperator s = embed_pair_operator(enumerate_bipartitions(static_cast<int>(dims.parties()))[1], {0, 1},
                                          {0, 1}, dims);
  for (auto _ : state) benchmark::DoNotOptimize(lambda_spectrum(rho, s).lambdas[0]);
}

void BM_EigRealSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  const Dims dims{n};
  const Matrix a = random_mixed(dims, rng).matrix(), b = random_mixed(dims, rng).matrix();
  const Matrix m = a * b;
  for (auto _ : state) benchmark::DoNotOptimize(eig_real_spectrum(m).front());
}

void BM_KyFan(benchmark::State& state) {
  const DensityMatrix rho = sample(Dims::uniform(2, 3));
  for (auto _ : state) benchmark::DoNotOptimize(kf_criterion(correlation_tensor(rho)).norm);
}

void BM_Scan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(threshold_scan(Family::wmix, Detector::tau3, 1e-4).p_star);
}

}  // namespace

BENCHMARK_CAPTURE(BM_TauBound, qubits3_serial, Dims::uniform(2, 3), 1);
BENCHMARK_CAPTURE(BM_TauBound, qubits3_auto, Dims::uniform(2, 3), 0);
BENCHMARK_CAPTURE(BM_TauBound, qutrits3_serial, Dims::uniform(3, 3), 1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TauBound, qutrits3_auto, Dims::uniform(3, 3), 0)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TauBound, qubits4_auto, Dims::uniform(2, 4), 0)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LambdaSpectrum, qubits3, Dims::uniform(2, 3));
BENCHMARK_CAPTURE(BM_LambdaSpectrum, qutrits3, Dims::uniform(3, 3));
BENCHMARK(BM_EigRealSpectrum)->Arg(8)->Arg(27)->Arg(64);
BENCHMARK(BM_KyFan);
BENCHMARK(BM_Scan)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
