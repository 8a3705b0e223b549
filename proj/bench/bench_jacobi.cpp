#include <benchmark/benchmark.h>

#include <random>

#include "qrm/linalg.hpp"
#include "qrm/spectra.hpp"

using namespace qrm;

namespace {

SymMatrix random_sym(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
  return m;
}

void BM_serial_random(benchmark::State& st) {
  SymMatrix m = random_sym(static_cast<int>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(sym_eig_serial(m).values.data());
}

void BM_parallel_random(benchmark::State& st) {
  SymMatrix m = random_sym(static_cast<int>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(sym_eig(m).values.data());
}

// the Hamiltonian matrices actually used by the sweeps
void BM_serial_hamiltonian(benchmark::State& st) {
  SymMatrix m = hamiltonian_matrix(3, 1.2, 0.5, static_cast<int>(st.range(0))).matrix;
  for (auto _ : st) benchmark::DoNotOptimize(sym_eig_serial(m).values.data());
}

void BM_parallel_hamiltonian(benchmark::State& st) {
  SymMatrix m = hamiltonian_matrix(3, 1.2, 0.5, static_cast<int>(st.range(0))).matrix;
  for (auto _ : st) benchmark::DoNotOptimize(sym_eig(m).values.data());
}

}  // namespace

BENCHMARK(BM_serial_random)->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel_random)->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_serial_hamiltonian)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel_hamiltonian)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
