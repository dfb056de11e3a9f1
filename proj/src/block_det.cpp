#include "blockdet/block_det.hpp"

#include <string>

#include "blockdet/errors.hpp"
#include "blockdet/lu.hpp"

namespace blockdet {

namespace {

void require_block_count(const BlockMatrix& bm, std::size_t n, const char* op) {
  if (bm.block_count() != n) {
    throw DimensionMismatch(std::string(op) + ": expected " + std::to_string(n) + "x" +
                            std::to_string(n) + " blocks, got " +
                            std::to_string(bm.block_count()));
  }
}

ScaledDet reduced_2x2(const BlockMatrix& bm, OffDiagonal which, const Tolerances& tol,
                      bool anticommuting) {
  require_block_count(bm, 2, anticommuting ? "det_2x2_anticommuting" : "det_2x2_commuting");
  const DenseMatrix& s11 = bm.block(1, 1);
  const DenseMatrix& s12 = bm.block(1, 2);
  const DenseMatrix& s21 = bm.block(2, 1);
  const DenseMatrix& s22 = bm.block(2, 2);

  const DenseMatrix& partner = which == OffDiagonal::S12 ? s12 : s21;
  const DenseMatrix bracket =
      anticommuting ? anticommutator(partner, s22) : commutator(partner, s22);
  const double limit = tol.commutator_rel * bm.max_abs();
  if (bracket.max_abs() > limit) {
    throw CommutatorViolation(std::string(which == OffDiagonal::S12 ? "S12" : "S21") +
                              (anticommuting ? " does not anti-commute" : " does not commute") +
                              " with S22 (residual " + std::to_string(bracket.max_abs()) + ")");
  }

  const DenseMatrix product = which == OffDiagonal::S12 ? s22 * s11 : s11 * s22;
  const DenseMatrix cross = s12 * s21;
  return det_dense(anticommuting ? product + cross : product - cross, tol);
}

}  // namespace

AlphaTable::AlphaTable(std::size_t level, std::size_t size, std::vector<DenseMatrix> blocks)
    : level_(level), size_(size), blocks_(std::move(blocks)) {
  if (blocks_.size() != size_ * size_) {
    throw DimensionMismatch("AlphaTable: block count does not match table size");
  }
}

const DenseMatrix& AlphaTable::block(std::size_t i, std::size_t j) const {
  if (i < 1 || j < 1 || i > size_ || j > size_) {
    throw IndexOutOfRange("alpha^(" + std::to_string(level_) + ") index (" + std::to_string(i) +
                          "," + std::to_string(j) + ") outside 1.." + std::to_string(size_));
  }
  return blocks_[(i - 1) * size_ + (j - 1)];
}

BlockMatrix AlphaTable::as_block_matrix() const {
  return BlockMatrix(size_, blocks_.front().rows(), blocks_);
}

std::vector<AlphaTable> alpha_recursion(const BlockMatrix& bm, const EngineOptions& opts) {
  const std::size_t big_n = bm.block_count();
  std::vector<AlphaTable> levels;
  levels.reserve(big_n);
  levels.emplace_back(0, big_n, bm.blocks());

  for (std::size_t k = 0; k + 1 < big_n; ++k) {
    const AlphaTable& current = levels.back();
    const std::size_t m = current.size();
    const LuFactors pivot = lu_decompose(current.pivot(), opts.tol);
    if (pivot.singular) throw SingularPivotBlock(k, m);
    levels.emplace_back(k + 1, m - 1,
                        kernels::eliminate_last(current.blocks(), m, pivot, opts.execution));
  }
  return levels;
}

DenseMatrix alpha_direct(const BlockMatrix& bm, std::size_t k, std::size_t i, std::size_t j,
                         const Tolerances& tol) {
  const std::size_t big_n = bm.block_count();
  if (k >= big_n || i < 1 || j < 1 || i > big_n - k || j > big_n - k) {
    throw IndexOutOfRange("alpha_direct: (k,i,j)=(" + std::to_string(k) + "," +
                          std::to_string(i) + "," + std::to_string(j) + ") invalid for N=" +
                          std::to_string(big_n));
  }
  if (k == 0) return bm.block(i, j);

  const std::size_t first = big_n - k + 1;
  const DenseMatrix trailing = flatten(trailing_submatrix(bm, k));
  const DenseMatrix sigma = row_vector(bm, i, first).stacked();
  const DenseMatrix s = column_vector(bm, first, j).stacked();
  const LuFactors f = lu_decompose(trailing, tol);
  if (f.singular) {
    throw SingularMatrix("alpha_direct: trailing submatrix S~_" + std::to_string(k) +
                         " is singular");
  }
  return bm.block(i, j) - sigma * solve(f, s);
}

DetReport block_det(const BlockMatrix& bm, const EngineOptions& opts) {
  const std::vector<AlphaTable> levels = alpha_recursion(bm, opts);
  const std::size_t big_n = bm.block_count();

  DetReport report;
  report.value = ScaledDet::one();
  report.factors.reserve(big_n);
  report.condition.reserve(big_n);
  // Factor k uses alpha^(N-k)_kk, the last diagonal block of level N-k.
  for (std::size_t k = 1; k <= big_n; ++k) {
    const DenseMatrix& diag = levels[big_n - k].pivot();
    const ScaledDet factor = det_dense(diag, opts.tol);
    report.factors.push_back(factor);
    report.condition.push_back(condition_estimate(diag, opts.tol));
    report.value *= factor;
  }
  return report;
}

ScaledDet det_2x2_closed(const BlockMatrix& bm, const Tolerances& tol) {
  require_block_count(bm, 2, "det_2x2_closed");
  const DenseMatrix& s22 = bm.block(2, 2);
  const DenseMatrix schur =
      schur_complement_2x2(bm.block(1, 1), bm.block(1, 2), bm.block(2, 1), s22, tol);
  return det_dense(schur, tol) * det_dense(s22, tol);
}

ScaledDet det_2x2_commuting(const BlockMatrix& bm, OffDiagonal which, const Tolerances& tol) {
  return reduced_2x2(bm, which, tol, false);
}

ScaledDet det_2x2_anticommuting(const BlockMatrix& bm, OffDiagonal which,
                                const Tolerances& tol) {
  return reduced_2x2(bm, which, tol, true);
}

ScaledDet det_3x3_closed(const BlockMatrix& bm, const Tolerances& tol) {
  require_block_count(bm, 3, "det_3x3_closed");
  const auto s = [&](std::size_t i, std::size_t j) -> const DenseMatrix& { return bm.block(i, j); };

  const LuFactors f33 = lu_decompose(s(3, 3), tol);
  if (f33.singular) throw SingularPivotBlock(0, 3);
  // X - S_i3 S33^-1 S_3j
  const auto reduced = [&](std::size_t i, std::size_t j) {
    return s(i, j) - s(i, 3) * solve(f33, s(3, j));
  };

  const DenseMatrix middle = reduced(2, 2);
  const LuFactors fmid = lu_decompose(middle, tol);
  if (fmid.singular) throw SingularPivotBlock(1, 2);

  const DenseMatrix top = reduced(1, 1) - reduced(1, 2) * solve(fmid, reduced(2, 1));
  return det_dense(top, tol) * det_from_factors(fmid) * det_from_factors(f33);
}

}  // namespace blockdet
