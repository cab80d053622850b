// Serial reference against the OpenMP kernel on the same mode sums.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stringvac/identities.hpp"
#include "stringvac/manifest.hpp"
#include "stringvac/modesum.hpp"
#include "stringvac/specfun.hpp"

using namespace stringvac;

namespace {

// Generalized Heine sum; zeta close to 1 and small alpha make it heavy.
modesum::Problem heine(double alpha, double zeta) {
  modesum::Problem p;
  p.alpha = alpha;
  p.x1 = std::cos(1.1);
  p.x2 = std::cos(1.9);
  p.dphi = 0.8;
  p.decay = std::acosh(zeta);
  p.weight = [zeta](double mu, std::span<double> w) {
    specfun::legendre_Q_band(mu, zeta, w);
    for (std::size_t k = 0; k < w.size(); ++k) w[k] *= 2.0 * (mu + double(k)) + 1.0;
  };
  return p;
}

modesum::Truncation trunc_for(int threads) {
  modesum::Truncation t;
  t.tol = 1e-12;
  t.threads = threads;
  return t;
}

void BM_Serial(benchmark::State& state) {
  const auto p = heine(0.3, 1.0 + 1e-2 * state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(modesum::azimuthal_sum_serial(p, trunc_for(1)).value);
  }
}

void BM_Parallel(benchmark::State& state) {
  const auto p = heine(0.3, 1.0 + 1e-2 * state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(modesum::azimuthal_sum(p, trunc_for(threads)).value);
  }
}

void BM_VerifySuite(benchmark::State& state) {
  const auto cases = manifest::parse(manifest::default_manifest(), 1e-6);
  const int parallelism = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(identities::run_suite(cases, parallelism).size());
  }
}

void parallel_args(benchmark::internal::Benchmark* b) {
  const int max_threads = std::max(4, omp_get_max_threads());
  for (int z : {1, 10}) {
    for (int t = 1; t <= max_threads; t *= 2) b->Args({z, t});
  }
}

}  // namespace

// First argument: 100 (zeta - 1).
BENCHMARK(BM_Serial)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Parallel)->Apply(parallel_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifySuite)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
