#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "spinchain/builders.hpp"
#include "spinchain/dense.hpp"
#include "spinchain/kernels.hpp"

using namespace spinchain;

namespace {

std::vector<Complex> random_matrix(std::size_t dim) {
  std::mt19937 rng(1);
  std::normal_distribution<double> g;
  std::vector<Complex> m(dim * dim);
  for (auto& z : m) z = {g(rng), g(rng)};
  return m;
}

template <auto Matmul>
void bm_matmul(benchmark::State& state) {
  const std::size_t dim = std::size_t{1} << state.range(0);
  const auto a = random_matrix(dim), b = random_matrix(dim);
  std::vector<Complex> c(dim * dim);
  for (auto _ : state) {
    Matmul(a, b, c, dim);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetComplexityN(static_cast<std::int64_t>(dim));
}

template <auto Apply>
void bm_apply_1q(benchmark::State& state) {
  const int spins = static_cast<int>(state.range(0));
  const std::size_t dim = std::size_t{1} << spins;
  auto m = random_matrix(dim);
  const auto g = rotation_matrix(Axis::X, 0.3);
  for (auto _ : state) {
    for (int bit = 0; bit < spins; ++bit) Apply(m, dim, bit, g);
    benchmark::DoNotOptimize(m.data());
  }
}

void bm_propagator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto seq = *build_soliton(n, 1.0).sequence;
  const auto chain = ChainSpec::uniform(n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(dense_propagator(seq, chain));
}

}  // namespace

BENCHMARK(bm_matmul<kernels::serial::matmul>)->Name("matmul/serial")->DenseRange(5, 9);
BENCHMARK(bm_matmul<kernels::parallel::matmul>)->Name("matmul/parallel")->DenseRange(5, 9);
BENCHMARK(bm_apply_1q<kernels::serial::apply_left_1q>)->Name("apply_1q/serial")->DenseRange(6, 10, 2);
BENCHMARK(bm_apply_1q<kernels::parallel::apply_left_1q>)->Name("apply_1q/parallel")->DenseRange(6, 10, 2);
BENCHMARK(bm_propagator)->Name("soliton_propagator")->DenseRange(4, 10, 2);

BENCHMARK_MAIN();
