#pragma once

// Data-parallel inner loops. Every kernel has a serial reference and an
// OpenMP version; both evaluate each output entry with the same operation
// order, so their results agree bit for bit.

#include <cstddef>
#include <span>
#include <vector>

#include "blockdet/dense_matrix.hpp"

namespace blockdet {

struct LuFactors;

namespace kernels {

enum class Execution { serial, parallel };

/// c += a * b. Shapes are checked by the caller.
void gemm_accumulate_serial(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c);
void gemm_accumulate_parallel(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c);
void gemm_accumulate(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c,
                     Execution exec = Execution::parallel);

/// One elimination step of the block recursion. `grid` is an m x m table of
/// blocks in row-major order whose last diagonal block has been factored into
/// `pivot`; the result is the (m-1) x (m-1) table with entries
///
///   grid(i,j) - grid(i,m) * pivot^-1 * grid(m,j).
///
/// pivot must not be flagged singular.
std::vector<DenseMatrix> eliminate_last_serial(std::span<const DenseMatrix> grid, std::size_t m,
                                               const LuFactors& pivot);
std::vector<DenseMatrix> eliminate_last_parallel(std::span<const DenseMatrix> grid,
                                                 std::size_t m, const LuFactors& pivot);
std::vector<DenseMatrix> eliminate_last(std::span<const DenseMatrix> grid, std::size_t m,
                                        const LuFactors& pivot,
                                        Execution exec = Execution::parallel);

/// Number of OpenMP threads available (1 without OpenMP).
int max_threads();

}  // namespace kernels
}  // namespace blockdet
