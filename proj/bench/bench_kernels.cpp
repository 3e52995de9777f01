#include <benchmark/benchmark.h>

#include <random>

#include "logsig/cartan.hpp"
#include "logsig/kernels.hpp"
#include "logsig/signature.hpp"
#include "logsig/winding.hpp"

using namespace logsig;

namespace {

GradedTensor random_tensor(int d, int depth, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  GradedTensor t(d, depth);
  for (auto& c : t.data()) c = {u(rng), u(rng)};
  return t;
}

void BM_Mul(benchmark::State& state, bool parallel) {
  const int depth = static_cast<int>(state.range(0));
  const auto a = random_tensor(2, depth, 1), b = random_tensor(2, depth, 2);
  GradedTensor out(2, depth);
  for (auto _ : state) {
    if (parallel)
      kernels::mul_omp(a, b, out, depth);
    else
      kernels::mul_serial(a, b, out, depth);
    benchmark::DoNotOptimize(out.data().data());
  }
}

void BM_HatF(benchmark::State& state, bool parallel) {
  const int depth = static_cast<int>(state.range(0));
  const auto x = log_signature(figure_eight(), depth);
  const DevelopmentMap f(cartan_element({0.3, -0.2, 0.5}), nilpotent_sum(3));
  for (auto _ : state) {
    auto levels = parallel ? hat_f_levels(x, f) : hat_f_levels_serial(x, f);
    benchmark::DoNotOptimize(levels.data());
  }
}

void BM_Winding(benchmark::State& state, bool parallel) {
  const int n = static_cast<int>(state.range(0));
  const auto p = tilde(figure_eight());
  const GridSpec g{-0.2, 1.2, -0.5, 0.5, n, n};
  for (auto _ : state) {
    auto w = parallel ? winding_field(p, g) : winding_field_serial(p, g);
    benchmark::DoNotOptimize(w.values.data());
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Mul, serial, false)->DenseRange(12, 18, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Mul, omp, true)->DenseRange(12, 18, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_HatF, serial, false)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_HatF, omp, true)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Winding, serial, false)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Winding, omp, true)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
