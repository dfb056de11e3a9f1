#include "blockdet/block_matrix.hpp"

#include <algorithm>
#include <string>

#include "blockdet/errors.hpp"
#include "blockdet/lu.hpp"

namespace blockdet {

namespace {

void require_block_index(const BlockMatrix& bm, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > bm.block_count() || j > bm.block_count()) {
    throw IndexOutOfRange("block index (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside 1.." + std::to_string(bm.block_count()));
  }
}

}  // namespace

BlockMatrix::BlockMatrix(std::size_t block_count, std::size_t block_size)
    : count_(block_count),
      size_(block_size),
      blocks_(block_count * block_count, DenseMatrix(block_size, block_size)) {
  if (block_count == 0 || block_size == 0) {
    throw DimensionMismatch("BlockMatrix: block count and block size must be positive");
  }
}

BlockMatrix::BlockMatrix(std::size_t block_count, std::size_t block_size,
                         std::vector<DenseMatrix> blocks)
    : count_(block_count), size_(block_size), blocks_(std::move(blocks)) {
  if (block_count == 0 || block_size == 0) {
    throw DimensionMismatch("BlockMatrix: block count and block size must be positive");
  }
  if (blocks_.size() != count_ * count_) {
    throw DimensionMismatch("BlockMatrix: expected " + std::to_string(count_ * count_) +
                            " blocks, got " + std::to_string(blocks_.size()));
  }
  for (const DenseMatrix& b : blocks_) {
    if (b.rows() != size_ || b.cols() != size_) {
      throw DimensionMismatch("BlockMatrix: block of shape " + std::to_string(b.rows()) + "x" +
                              std::to_string(b.cols()) + ", expected " + std::to_string(size_) +
                              "x" + std::to_string(size_));
    }
  }
}

BlockMatrix BlockMatrix::generate(
    std::size_t block_count, std::size_t block_size,
    const std::function<DenseMatrix(std::size_t, std::size_t)>& make) {
  std::vector<DenseMatrix> blocks;
  blocks.reserve(block_count * block_count);
  for (std::size_t i = 1; i <= block_count; ++i)
    for (std::size_t j = 1; j <= block_count; ++j) blocks.push_back(make(i, j));
  return BlockMatrix(block_count, block_size, std::move(blocks));
}

const DenseMatrix& BlockMatrix::block(std::size_t i, std::size_t j) const {
  require_block_index(*this, i, j);
  return blocks_[(i - 1) * count_ + (j - 1)];
}

double BlockMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const DenseMatrix& b : blocks_) m = std::max(m, b.max_abs());
  return m;
}

DenseMatrix BlockVectorColumn::stacked() const {
  if (blocks.empty()) return {};
  const std::size_t n = blocks.front().rows();
  DenseMatrix out(n * blocks.size(), blocks.front().cols());
  for (std::size_t k = 0; k < blocks.size(); ++k) out.paste(k * n, 0, blocks[k]);
  return out;
}

DenseMatrix BlockVectorRow::stacked() const {
  if (blocks.empty()) return {};
  const std::size_t n = blocks.front().cols();
  DenseMatrix out(blocks.front().rows(), n * blocks.size());
  for (std::size_t k = 0; k < blocks.size(); ++k) out.paste(0, k * n, blocks[k]);
  return out;
}

BlockVectorColumn column_vector(const BlockMatrix& bm, std::size_t i, std::size_t j) {
  require_block_index(bm, i, j);
  BlockVectorColumn v{i, j, {}};
  for (std::size_t r = i; r <= bm.block_count(); ++r) v.blocks.push_back(bm.block(r, j));
  return v;
}

BlockVectorRow row_vector(const BlockMatrix& bm, std::size_t i, std::size_t j) {
  require_block_index(bm, i, j);
  BlockVectorRow v{i, j, {}};
  for (std::size_t c = j; c <= bm.block_count(); ++c) v.blocks.push_back(bm.block(i, c));
  return v;
}

BlockMatrix partition(const DenseMatrix& m, std::size_t block_count, std::size_t block_size) {
  if (block_count == 0 || block_size == 0) {
    throw DimensionMismatch("partition: block count and block size must be positive");
  }
  if (!m.is_square() || m.rows() != block_count * block_size) {
    throw DimensionMismatch("partition: " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " matrix cannot be split into " +
                            std::to_string(block_count) + "x" + std::to_string(block_count) +
                            " blocks of size " + std::to_string(block_size));
  }
  return BlockMatrix::generate(block_count, block_size, [&](std::size_t i, std::size_t j) {
    return m.slice((i - 1) * block_size, (j - 1) * block_size, block_size, block_size);
  });
}

DenseMatrix flatten(const BlockMatrix& bm) {
  const std::size_t n = bm.block_size();
  DenseMatrix out(bm.dimension(), bm.dimension());
  for (std::size_t i = 1; i <= bm.block_count(); ++i)
    for (std::size_t j = 1; j <= bm.block_count(); ++j)
      out.paste((i - 1) * n, (j - 1) * n, bm.block(i, j));
  return out;
}

BlockMatrix trailing_submatrix(const BlockMatrix& bm, std::size_t k) {
  const std::size_t big_n = bm.block_count();
  if (k < 1 || k > big_n) {
    throw IndexOutOfRange("trailing_submatrix: k=" + std::to_string(k) + " outside 1.." +
                          std::to_string(big_n));
  }
  const std::size_t offset = big_n - k;
  return BlockMatrix::generate(k, bm.block_size(), [&](std::size_t i, std::size_t j) {
    return bm.block(offset + i, offset + j);
  });
}

BlockMatrix permute_blocks(const BlockMatrix& bm, const std::vector<std::size_t>& order) {
  if (order.size() != bm.block_count()) {
    throw DimensionMismatch("permute_blocks: order has wrong length");
  }
  return BlockMatrix::generate(bm.block_count(), bm.block_size(),
                               [&](std::size_t i, std::size_t j) {
                                 return bm.block(order[i - 1], order[j - 1]);
                               });
}

DenseMatrix assemble_2x2(const DenseMatrix& a, const DenseMatrix& b, const DenseMatrix& c,
                         const DenseMatrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
      b.cols() != d.cols()) {
    throw DimensionMismatch("assemble_2x2: blocks are not conformable");
  }
  DenseMatrix out(a.rows() + c.rows(), a.cols() + b.cols());
  out.paste(0, 0, a);
  out.paste(0, a.cols(), b);
  out.paste(a.rows(), 0, c);
  out.paste(a.rows(), a.cols(), d);
  return out;
}

DenseMatrix schur_complement_2x2(const DenseMatrix& a, const DenseMatrix& b, const DenseMatrix& c,
                                 const DenseMatrix& d, const Tolerances& tol) {
  if (!a.is_square() || !d.is_square() || b.rows() != a.rows() || b.cols() != d.rows() ||
      c.rows() != d.rows() || c.cols() != a.cols()) {
    throw DimensionMismatch("schur_complement_2x2: blocks are not conformable");
  }
  const LuFactors fd = lu_decompose(d, tol);
  if (fd.singular) throw SingularMatrix("schur_complement_2x2: D is singular");
  return a - b * solve(fd, c);
}

BlockInverse2x2 banachiewicz_inverse(const DenseMatrix& a, const DenseMatrix& b,
                                     const DenseMatrix& c, const DenseMatrix& d,
                                     const Tolerances& tol) {
  const DenseMatrix schur = schur_complement_2x2(a, b, c, d, tol);
  const LuFactors fs = lu_decompose(schur, tol);
  if (fs.singular) {
    throw SingularMatrix("banachiewicz_inverse: Schur complement A - B D^-1 C is singular");
  }
  const DenseMatrix d_inv = invert(d, tol);
  const DenseMatrix schur_inv = solve(fs, DenseMatrix::identity(schur.rows()));
  const DenseMatrix b_dinv = b * d_inv;

  BlockInverse2x2 inv;
  inv.top_left = schur_inv;
  inv.top_right = -(schur_inv * b_dinv);
  inv.bottom_left = -(d_inv * c * schur_inv);
  inv.bottom_right =
      d_inv * (DenseMatrix::identity(d.rows()) + c * schur_inv * b_dinv);
  return inv;
}

}  // namespace blockdet
