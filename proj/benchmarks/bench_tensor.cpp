#include <benchmark/benchmark.h>

#include <random>

#include "radix/radix.hpp"

namespace {

using radix::Matrix;
using radix::Space;
using radix::Tensor;

Space space(std::size_t n) {
  std::vector<radix::Scalar> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<long>(i % 3) - 1;
  return Space(Matrix::diagonal(d));
}

// Covariant tensor of order `cova` built from flat vectors so every slot
// is radical-annihilator.
Tensor flat_tensor(const Space& s, std::size_t cova, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(-3, 3);
  Tensor t = Tensor::scalar(s.dim(), 1);
  for (std::size_t i = 0; i < cova; ++i) {
    radix::Vector v(s.dim());
    for (auto& x : v) x = pick(rng);
    t = radix::tensor_product(t, Tensor::covector(radix::flat(s, v)));
  }
  return t;
}

void BM_ContractCovariant(benchmark::State& state) {
  const Space s = space(static_cast<std::size_t>(state.range(0)));
  const Tensor t = flat_tensor(s, static_cast<std::size_t>(state.range(1)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(radix::contract_covariant(s, t, 1, 2));
}
BENCHMARK(BM_ContractCovariant)->ArgsProduct({{3, 5, 8}, {2, 4}});

void BM_ChangeBasis(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Space s = space(n);
  const Tensor t = flat_tensor(s, static_cast<std::size_t>(state.range(1)), 11);
  Matrix b = Matrix::identity(n);
  for (std::size_t i = 0; i + 1 < n; ++i) b(i, i + 1) = 1;
  for (auto _ : state) benchmark::DoNotOptimize(radix::change_basis(t, b));
}
BENCHMARK(BM_ChangeBasis)->ArgsProduct({{3, 5, 8}, {2, 4}});

void BM_LowerIndex(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Space s = space(n);
  Tensor t = Tensor::identity(n);
  t = radix::tensor_product(t, Tensor::identity(n));
  for (auto _ : state) benchmark::DoNotOptimize(radix::lower_index(s, t, 1));
}
BENCHMARK(BM_LowerIndex)->Arg(3)->Arg(5)->Arg(8);

}  // namespace
