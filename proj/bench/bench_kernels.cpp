#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "zq/kernels.hpp"
#include "zq/synthesis.hpp"

namespace {

using zq::Complex;

std::vector<Complex> random_state(std::size_t dim) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  std::vector<Complex> v(dim);
  for (auto& z : v) z = {g(rng), g(rng)};
  return v;
}

zq::ComplexMatrix random_gate(std::size_t dim) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g;
  std::vector<Complex> e(dim * dim);
  for (auto& z : e) z = {g(rng), g(rng)};
  return zq::ComplexMatrix(dim, dim, std::move(e));
}

template <auto Kernel>
void apply_two_qubit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto in = random_state(std::size_t{1} << n);
  std::vector<Complex> out(in.size());
  const auto g = random_gate(4);
  const std::vector<std::size_t> targets{n - 1, 0};
  for (auto _ : state) {
    Kernel(in, out, g, 2, n, targets);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(in.size()));
}

void BM_ApplyGate(benchmark::State& s) { apply_two_qubit<zq::kernels::apply_gate>(s); }
void BM_ApplyGateReference(benchmark::State& s) { apply_two_qubit<zq::kernels::apply_gate_reference>(s); }

BENCHMARK(BM_ApplyGate)->DenseRange(8, 20, 4);
BENCHMARK(BM_ApplyGateReference)->DenseRange(8, 20, 4);

void BM_Enumerate(benchmark::State& state) {
  const auto f = zq::ClassicalFunction(3, 3, {7, 6, 5, 4, 3, 2, 1, 0});
  const auto enc = zq::builtin_encoding("qubit");
  for (auto _ : state) benchmark::DoNotOptimize(zq::enumerate_permutation_quantizations(f, enc));
}

void BM_EnumerateSerial(benchmark::State& state) {
  const auto f = zq::ClassicalFunction(3, 3, {7, 6, 5, 4, 3, 2, 1, 0});
  const auto enc = zq::builtin_encoding("qubit");
  for (auto _ : state) benchmark::DoNotOptimize(zq::enumerate_permutation_quantizations_serial(f, enc));
}

BENCHMARK(BM_Enumerate)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
