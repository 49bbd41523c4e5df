#include <benchmark/benchmark.h>

#include <random>

#include "radix/radix.hpp"

namespace {

using radix::Matrix;

Matrix gram(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(-3, 3);
  Matrix g(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      g(r, c) = pick(rng);
      g(c, r) = g(r, c);
    }
  }
  // A zero row and column to keep the radical nontrivial.
  for (std::size_t i = 0; i < n; ++i) g(0, i) = g(i, 0) = 0;
  return g;
}

void BM_CongruenceDiagonalize(benchmark::State& state) {
  const Matrix g = gram(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(radix::congruence_diagonalize(g));
}
BENCHMARK(BM_CongruenceDiagonalize)->DenseRange(2, 8, 2);

void BM_SpaceAnalysis(benchmark::State& state) {
  const Matrix g = gram(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(radix::Space(g));
}
BENCHMARK(BM_SpaceAnalysis)->DenseRange(2, 8, 2);

void BM_ExtendCometric(benchmark::State& state) {
  const radix::Space s(gram(static_cast<std::size_t>(state.range(0)), 3));
  const auto sd = radix::choose_screen(s);
  for (auto _ : state) benchmark::DoNotOptimize(radix::extend_cometric(s, sd));
}
BENCHMARK(BM_ExtendCometric)->DenseRange(2, 8, 2);

}  // namespace
