#include "blockdet/kernels.hpp"

#include <cstdint>

#include "blockdet/lu.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace blockdet::kernels {

namespace {

// Below this many multiply-adds thread start-up dominates.
constexpr std::size_t kGemmParallelWork = 32 * 32 * 32;

inline void gemm_row(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c, std::size_t i) {
  const std::size_t inner = a.cols();
  const std::size_t cols = b.cols();
  for (std::size_t k = 0; k < inner; ++k) {
    const cplx aik = a(i, k);
    if (aik == cplx{}) continue;
    for (std::size_t j = 0; j < cols; ++j) c(i, j) += aik * b(k, j);
  }
}

inline DenseMatrix updated_block(std::span<const DenseMatrix> grid, std::size_t m,
                                 std::span<const DenseMatrix> solved, std::size_t i,
                                 std::size_t j) {
  DenseMatrix out = grid[i * m + j];
  const DenseMatrix& left = grid[i * m + (m - 1)];
  if (left.is_zero()) return out;
  DenseMatrix correction(out.rows(), out.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) gemm_row(left, solved[j], correction, r);
  return out - correction;
}

}  // namespace

void gemm_accumulate_serial(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c) {
  for (std::size_t i = 0; i < a.rows(); ++i) gemm_row(a, b, c, i);
}

void gemm_accumulate_parallel(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c) {
  const auto rows = static_cast<std::int64_t>(a.rows());
  const bool big = a.rows() * a.cols() * b.cols() >= kGemmParallelWork;
#pragma omp parallel for schedule(static) if (big)
  for (std::int64_t i = 0; i < rows; ++i) gemm_row(a, b, c, static_cast<std::size_t>(i));
}

void gemm_accumulate(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c, Execution exec) {
  if (exec == Execution::parallel) {
    gemm_accumulate_parallel(a, b, c);
  } else {
    gemm_accumulate_serial(a, b, c);
  }
}

std::vector<DenseMatrix> eliminate_last_serial(std::span<const DenseMatrix> grid, std::size_t m,
                                               const LuFactors& pivot) {
  const std::size_t next = m - 1;
  std::vector<DenseMatrix> solved(next);
  for (std::size_t j = 0; j < next; ++j) solved[j] = solve(pivot, grid[(m - 1) * m + j]);

  std::vector<DenseMatrix> out(next * next);
  for (std::size_t i = 0; i < next; ++i)
    for (std::size_t j = 0; j < next; ++j)
      out[i * next + j] = updated_block(grid, m, solved, i, j);
  return out;
}

std::vector<DenseMatrix> eliminate_last_parallel(std::span<const DenseMatrix> grid,
                                                 std::size_t m, const LuFactors& pivot) {
  const std::size_t next = m - 1;
  const auto n_next = static_cast<std::int64_t>(next);
  std::vector<DenseMatrix> solved(next);
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < n_next; ++j) {
    const auto col = static_cast<std::size_t>(j);
    solved[col] = solve(pivot, grid[(m - 1) * m + col]);
  }

  std::vector<DenseMatrix> out(next * next);
  const auto total = static_cast<std::int64_t>(next * next);
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < total; ++t) {
    const auto idx = static_cast<std::size_t>(t);
    out[idx] = updated_block(grid, m, solved, idx / next, idx % next);
  }
  return out;
}

std::vector<DenseMatrix> eliminate_last(std::span<const DenseMatrix> grid, std::size_t m,
                                        const LuFactors& pivot, Execution exec) {
  return exec == Execution::parallel ? eliminate_last_parallel(grid, m, pivot)
                                     : eliminate_last_serial(grid, m, pivot);
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace blockdet::kernels
