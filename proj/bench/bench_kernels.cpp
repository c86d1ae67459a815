#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "numevent/kernels.hpp"

using namespace numevent;

namespace {

std::vector<double> random_values(std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<double> v(size);
  for (auto& x : v) x = u(rng);
  return v;
}

template <void (*Kernel)(std::span<double>, int)>
void BM_Zeta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto base = random_values(std::size_t{1} << n, 1);
  base[0] = 0;
  std::vector<double> a;
  for (auto _ : state) {
    a = base;
    Kernel(a, n);
    benchmark::DoNotOptimize(a.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}

template <void (*Kernel)(std::span<const double>, std::span<const double>, std::size_t, std::span<double>)>
void BM_WeightedSums(benchmark::State& state) {
  const std::size_t m = 16, states = 5, rows = static_cast<std::size_t>(state.range(0));
  const auto coeffs = random_values(rows * m, 2);
  const auto table = random_values(m * states, 3);
  std::vector<double> out(rows * states);
  for (auto _ : state) {
    Kernel(coeffs, table, states, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(rows));
}

template <void (*Kernel)(std::span<const std::uint64_t>, int, std::span<double>)>
void BM_ExpandCodes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::uint64_t> codes;
  const std::uint64_t last = (std::uint64_t{1} << ((1u << n) - 1)) - 1;
  for (std::uint64_t c = 1; c <= last && codes.size() < (1u << 16); ++c) codes.push_back(c);
  std::vector<double> out(codes.size() << n);
  for (auto _ : state) {
    Kernel(codes, n, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(codes.size()));
}

}  // namespace

BENCHMARK(BM_Zeta<kernels::zeta_serial>)->Name("zeta/serial")->DenseRange(12, 20, 4);
BENCHMARK(BM_Zeta<kernels::zeta_parallel>)->Name("zeta/parallel")->DenseRange(12, 20, 4);
BENCHMARK(BM_Zeta<kernels::mobius_serial>)->Name("mobius/serial")->DenseRange(12, 20, 4);
BENCHMARK(BM_Zeta<kernels::mobius_parallel>)->Name("mobius/parallel")->DenseRange(12, 20, 4);
BENCHMARK(BM_WeightedSums<kernels::weighted_sums_serial>)->Name("weighted_sums/serial")->Arg(32767);
BENCHMARK(BM_WeightedSums<kernels::weighted_sums_parallel>)->Name("weighted_sums/parallel")->Arg(32767);
BENCHMARK(BM_ExpandCodes<kernels::expand_01_codes_serial>)->Name("expand_codes/serial")->Arg(4);
BENCHMARK(BM_ExpandCodes<kernels::expand_01_codes_parallel>)->Name("expand_codes/parallel")->Arg(4);

BENCHMARK_MAIN();
