#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "blockdet/dense_matrix.hpp"
#include "blockdet/tolerances.hpp"

namespace blockdet {

/// An (N*n) x (N*n) matrix viewed as an N x N grid of n x n blocks.
///
/// Block indices are 1-based everywhere in this interface: block(1, 1) is the
/// top-left block S_11 and block(N, N) the bottom-right S_NN. Blocks are
/// copied in on construction and never mutated afterwards.
class BlockMatrix {
 public:
  /// N x N grid of zero blocks.
  BlockMatrix(std::size_t block_count, std::size_t block_size);
  /// `blocks` in row-major block order; each must be block_size square.
  BlockMatrix(std::size_t block_count, std::size_t block_size, std::vector<DenseMatrix> blocks);

  /// Builds each block from `make(i, j)` with 1-based i, j.
  static BlockMatrix generate(std::size_t block_count, std::size_t block_size,
                              const std::function<DenseMatrix(std::size_t, std::size_t)>& make);

  std::size_t block_count() const noexcept { return count_; }
  std::size_t block_size() const noexcept { return size_; }
  std::size_t dimension() const noexcept { return count_ * size_; }

  const DenseMatrix& block(std::size_t i, std::size_t j) const;
  const std::vector<DenseMatrix>& blocks() const noexcept { return blocks_; }

  double max_abs() const noexcept;

  friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;

 private:
  std::size_t count_;
  std::size_t size_;
  std::vector<DenseMatrix> blocks_;
};

/// s_ij: the blocks (i..N, j) stacked as a column.
struct BlockVectorColumn {
  std::size_t origin_row;
  std::size_t origin_col;
  std::vector<DenseMatrix> blocks;

  DenseMatrix stacked() const;
};

/// sigma^T_ij: the blocks (i, j..N) laid out as a row.
struct BlockVectorRow {
  std::size_t origin_row;
  std::size_t origin_col;
  std::vector<DenseMatrix> blocks;

  DenseMatrix stacked() const;
};

BlockVectorColumn column_vector(const BlockMatrix& bm, std::size_t i, std::size_t j);
BlockVectorRow row_vector(const BlockMatrix& bm, std::size_t i, std::size_t j);

/// Requires m square with dimension block_count * block_size.
BlockMatrix partition(const DenseMatrix& m, std::size_t block_count, std::size_t block_size);
DenseMatrix flatten(const BlockMatrix& bm);

/// The k x k block matrix from the lower-right corner (blocks N-k+1..N).
BlockMatrix trailing_submatrix(const BlockMatrix& bm, std::size_t k);

/// Simultaneously reorders block rows and columns: result block (i, j) is
/// bm.block(order[i-1], order[j-1]). `order` holds 1-based indices.
BlockMatrix permute_blocks(const BlockMatrix& bm, const std::vector<std::size_t>& order);

/// [[a, b], [c, d]] as one dense matrix; the split may be uneven.
DenseMatrix assemble_2x2(const DenseMatrix& a, const DenseMatrix& b, const DenseMatrix& c,
                         const DenseMatrix& d);

/// a - b * d^-1 * c, with d^-1 * c obtained by a linear solve.
/// Throws SingularMatrix when d fails the pivot tolerance.
DenseMatrix schur_complement_2x2(const DenseMatrix& a, const DenseMatrix& b, const DenseMatrix& c,
                                 const DenseMatrix& d, const Tolerances& tol = kDefaultTolerances);

/// The four blocks of the inverse of [[a, b], [c, d]].
struct BlockInverse2x2 {
  DenseMatrix top_left;
  DenseMatrix top_right;
  DenseMatrix bottom_left;
  DenseMatrix bottom_right;

  DenseMatrix assembled() const {
    return assemble_2x2(top_left, top_right, bottom_left, bottom_right);
  }
};

/// Blockwise inverse through the Schur complement A - B D^-1 C:
///
///   [ X^-1              -X^-1 B D^-1                 ]
///   [ -D^-1 C X^-1       D^-1 (I + C X^-1 B D^-1)    ]   with X = A - B D^-1 C.
///
/// Throws SingularMatrix if D or X cannot be inverted.
BlockInverse2x2 banachiewicz_inverse(const DenseMatrix& a, const DenseMatrix& b,
                                     const DenseMatrix& c, const DenseMatrix& d,
                                     const Tolerances& tol = kDefaultTolerances);

}  // namespace blockdet
