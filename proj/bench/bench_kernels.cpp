// Serial reference kernels against their OpenMP counterparts.
//
//   ./build/bench/bench_kernels --benchmark_filter=Alpha
//   OMP_NUM_THREADS=4 ./build/bench/bench_kernels

#include <benchmark/benchmark.h>

#include "blockdet/block_det.hpp"
#include "blockdet/kernels.hpp"
#include "blockdet/lu.hpp"
#include "blockdet/random.hpp"

namespace {

using blockdet::kernels::Execution;

template <Execution Exec>
void BM_AlphaRecursion(benchmark::State& state) {
  blockdet::Rng rng(blockdet::kDefaultSeed);
  const auto count = static_cast<std::size_t>(state.range(0));
  const auto size = static_cast<std::size_t>(state.range(1));
  const blockdet::BlockMatrix bm = blockdet::random_block_matrix(rng, count, size);
  const blockdet::EngineOptions opts{blockdet::kDefaultTolerances, Exec};
  for (auto _ : state) {
    auto levels = blockdet::alpha_recursion(bm, opts);
    benchmark::DoNotOptimize(levels);
  }
  state.SetLabel("N=" + std::to_string(count) + " n=" + std::to_string(size));
}

template <Execution Exec>
void BM_Gemm(benchmark::State& state) {
  blockdet::Rng rng(blockdet::kDefaultSeed);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const blockdet::DenseMatrix a = blockdet::random_dense(rng, dim, dim);
  const blockdet::DenseMatrix b = blockdet::random_dense(rng, dim, dim);
  for (auto _ : state) {
    blockdet::DenseMatrix c(dim, dim);
    blockdet::kernels::gemm_accumulate(a, b, c, Exec);
    benchmark::DoNotOptimize(c);
  }
}

void BM_DenseDet(benchmark::State& state) {
  blockdet::Rng rng(blockdet::kDefaultSeed);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const blockdet::DenseMatrix m = blockdet::random_dense(rng, dim, dim);
  for (auto _ : state) benchmark::DoNotOptimize(blockdet::det_dense(m));
}

void AlphaArgs(benchmark::internal::Benchmark* b) {
  for (int count : {4, 8, 16, 32})
    for (int size : {4, 8, 16}) b->Args({count, size});
}

}  // namespace

BENCHMARK(BM_AlphaRecursion<Execution::serial>)->Apply(AlphaArgs)->Name("AlphaRecursion/serial");
BENCHMARK(BM_AlphaRecursion<Execution::parallel>)->Apply(AlphaArgs)->Name("AlphaRecursion/parallel");
BENCHMARK(BM_Gemm<Execution::serial>)->RangeMultiplier(2)->Range(16, 256)->Name("Gemm/serial");
BENCHMARK(BM_Gemm<Execution::parallel>)->RangeMultiplier(2)->Range(16, 256)->Name("Gemm/parallel");
BENCHMARK(BM_DenseDet)->RangeMultiplier(2)->Range(16, 256);

BENCHMARK_MAIN();
