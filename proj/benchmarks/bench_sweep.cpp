#include <cmath>
#include <numbers>

#include <benchmark/benchmark.h>

#include "legspec/builtins.hpp"
#include "legspec/genfam.hpp"
#include "legspec/minmax.hpp"
#include "legspec/products.hpp"

namespace {

std::vector<double> wave(int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double a = 2 * std::numbers::pi * i / n;
      const double b = 2 * std::numbers::pi * j / n;
      v.push_back(std::cos(a) + 0.5 * std::cos(b) + 0.1 * std::sin(a + 2 * b));
    }
  }
  return v;
}

void BM_EssentialValuesT2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto torus = legspec::torus(2, n);
  const legspec::SampledFunction f(torus, wave(n));
  for (auto _ : state) benchmark::DoNotOptimize(legspec::essential_values(f));
  state.SetComplexityN(n * n);
}
BENCHMARK(BM_EssentialValuesT2)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_SelectorT2(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto s = legspec::GeneratingFamily::quadratic_plus({16, 16}, wave(16), 1, m, 2.0, {1, 0});
  for (auto _ : state) {
    const legspec::SpectralSelector sel(s);
    benchmark::DoNotOptimize(sel.gamma());
  }
}
BENCHMARK(BM_SelectorT2)->Arg(5)->Arg(9)->Arg(17);

void BM_CupLengthT3(benchmark::State& state) {
  const auto t3 = legspec::torus(3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(legspec::cup_length(t3));
}
BENCHMARK(BM_CupLengthT3);

void BM_FrontAndSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = legspec::GeneratingFamily::quadratic_plus({n, n}, wave(n), 1, 5, 2.0, {1, 0});
  for (auto _ : state) {
    const auto cloud = legspec::front(s);
    benchmark::DoNotOptimize(legspec::spectrum(cloud, legspec::default_tolerances(cloud)));
  }
}
BENCHMARK(BM_FrontAndSpectrum)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
