// Serial reference kernels vs their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "csd/featext.hpp"
#include "csd/kernels.hpp"

namespace {

std::vector<double> random_values(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d(0.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = d(rng);
  return v;
}

// Patch-embedding shaped product: (B*T) x 2056 times 2056 x D.
template <auto Gemm>
void BM_Gemm(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const std::size_t k = 2056, n = 32;
  const auto a = random_values(m * k, 1);
  const auto b = random_values(k * n, 2);
  std::vector<double> c(m * n);
  csd::kernels::GemmShape s{m, n, k, false, false, false};
  for (auto _ : state) {
    Gemm(s, a, b, c);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * m * n * k));
}
BENCHMARK(BM_Gemm<csd::kernels::serial::gemm>)->Name("gemm/serial")->Arg(400)->Arg(1600);
BENCHMARK(BM_Gemm<csd::kernels::omp::gemm>)->Name("gemm/omp")->Arg(400)->Arg(1600);

template <auto LayerNorm>
void BM_LayerNorm(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const std::size_t cols = 2056;
  const auto x = random_values(rows * cols, 3);
  std::vector<double> y(x.size()), rstd(rows);
  for (auto _ : state) {
    LayerNorm(x, rows, cols, 1e-5, y, rstd);
    benchmark::DoNotOptimize(y.data());
  }
}
BENCHMARK(BM_LayerNorm<csd::kernels::serial::layer_norm_rows>)->Name("layer_norm/serial")->Arg(800);
BENCHMARK(BM_LayerNorm<csd::kernels::omp::layer_norm_rows>)->Name("layer_norm/omp")->Arg(800);

template <auto Softmax>
void BM_Softmax(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const std::size_t cols = 51;
  const auto x = random_values(rows * cols, 4);
  std::vector<double> y(x.size());
  for (auto _ : state) {
    Softmax(x, rows, cols, y);
    benchmark::DoNotOptimize(y.data());
  }
}
BENCHMARK(BM_Softmax<csd::kernels::serial::softmax_rows>)->Name("softmax/serial")->Arg(3264);
BENCHMARK(BM_Softmax<csd::kernels::omp::softmax_rows>)->Name("softmax/omp")->Arg(3264);

template <auto Gelu>
void BM_Gelu(benchmark::State& state) {
  const auto x = random_values(static_cast<std::size_t>(state.range(0)), 5);
  std::vector<double> y(x.size());
  for (auto _ : state) {
    Gelu(x, y);
    benchmark::DoNotOptimize(y.data());
  }
}
BENCHMARK(BM_Gelu<csd::kernels::serial::gelu>)->Name("gelu/serial")->Arg(1 << 16);
BENCHMARK(BM_Gelu<csd::kernels::omp::gelu>)->Name("gelu/omp")->Arg(1 << 16);

csd::feat::AudioClip noise_clip(double seconds) {
  csd::feat::AudioClip clip;
  const auto n = static_cast<std::size_t>(seconds * csd::feat::kSampleRate);
  clip.channels = {random_values(n, 6), random_values(n, 7)};
  for (auto& ch : clip.channels) {
    for (double& x : ch) x *= 0.1;
  }
  return clip;
}

void BM_StftReference(benchmark::State& state) {
  const auto clip = noise_clip(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(csd::feat::reference::stft_log_spectrum(clip));
}
BENCHMARK(BM_StftReference)->Name("stft/serial_dft")->Unit(benchmark::kMillisecond);

void BM_StftFast(benchmark::State& state) {
  const auto clip = noise_clip(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(csd::feat::stft_log_spectrum(clip));
}
BENCHMARK(BM_StftFast)->Name("stft/omp_fft")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
