#include <random>

#include <benchmark/benchmark.h>

#include "fracml/dynamics.hpp"
#include "fracml/fracops.hpp"
#include "fracml/spectra.hpp"
#include "fracml/stability.hpp"
#include "fracml/sweep.hpp"

using namespace fracml;

static void BM_MemoryConvolution(benchmark::State& state) {
  const std::size_t t = static_cast<std::size_t>(state.range(0));
  const std::size_t dim = 12;
  const KernelWeights w(FractionalOrder(0.5), t + 1);
  std::vector<double> history((t + 1) * dim, 0.25);
  std::vector<double> out(dim);
  for (auto _ : state) {
    memory_convolution(w, history, dim, t, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>((t + 1) * dim));
}
BENCHMARK(BM_MemoryConvolution)->Arg(1000)->Arg(10000);

static void BM_SimulateLinear(benchmark::State& state) {
  SystemSpec s;
  s.alpha = 0.6;
  s.n = 12;
  s.coupling = CirculantSpec{0.1, 0.3, 0.1, 12};
  s.horizon = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simulate(s).length());
}
BENCHMARK(BM_SimulateLinear)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_SimulateNonlinear(benchmark::State& state) {
  SystemSpec s;
  s.alpha = 0.8;
  s.n = 7;
  s.coupling = logistic_circle(0.6, -0.8);
  s.horizon = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simulate(s).length());
}
BENCHMARK(BM_SimulateNonlinear)->Arg(2000)->Arg(5000)->Unit(benchmark::kMillisecond);

static void BM_DenseEigenvalues(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  DenseMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = g(rng);
  for (auto _ : state) benchmark::DoNotOptimize(dense_eigenvalues(a).size());
}
BENCHMARK(BM_DenseEigenvalues)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_RegionConstruction(benchmark::State& state) {
  for (auto _ : state) {
    const EigenvalueRegion r(FractionalOrder(0.3));
    benchmark::DoNotOptimize(&r);
  }
}
BENCHMARK(BM_RegionConstruction)->Unit(benchmark::kMillisecond);

static void BM_RegionClassify(benchmark::State& state) {
  const EigenvalueRegion r(FractionalOrder(0.3));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.5);
  std::vector<Complex> pts(4096);
  for (auto& z : pts) z = {u(rng), u(rng)};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(r.classify(pts[i++ & 4095]).margin);
  }
}
BENCHMARK(BM_RegionClassify);

static void BM_AnalyticSweep(benchmark::State& state) {
  SweepConfig c;
  c.family = SweepFamily::symmetric;
  c.alpha = 0.2;
  c.n = 8;
  c.p1 = {-0.5, 0.5, 100};
  c.p2 = {-0.5, 1.2, 100};
  for (auto _ : state) benchmark::DoNotOptimize(sweep(c).size());
}
BENCHMARK(BM_AnalyticSweep)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
