#pragma once

#include <cstddef>
#include <vector>

#include "blockdet/block_matrix.hpp"
#include "blockdet/kernels.hpp"
#include "blockdet/scaled_det.hpp"
#include "blockdet/tolerances.hpp"

namespace blockdet {

struct EngineOptions {
  Tolerances tol{};
  kernels::Execution execution = kernels::Execution::parallel;
};

/// alpha^(k): the (N-k) x (N-k) block table left after k elimination steps.
/// Level 0 is the source matrix itself.
class AlphaTable {
 public:
  AlphaTable(std::size_t level, std::size_t size, std::vector<DenseMatrix> blocks);

  std::size_t level() const noexcept { return level_; }
  /// Number of block rows (N - level).
  std::size_t size() const noexcept { return size_; }
  /// 1-based block access.
  const DenseMatrix& block(std::size_t i, std::size_t j) const;
  /// alpha^(k)_{N-k,N-k}, the block inverted to reach the next level.
  const DenseMatrix& pivot() const { return block(size_, size_); }
  const std::vector<DenseMatrix>& blocks() const noexcept { return blocks_; }

  BlockMatrix as_block_matrix() const;

 private:
  std::size_t level_;
  std::size_t size_;
  std::vector<DenseMatrix> blocks_;
};

/// Result of the block determinant. factors[k-1] = det(alpha^(N-k)_{kk}) for
/// k = 1..N; their product is `value`. condition[k-1] is the 1-norm condition
/// number of the same block.
struct DetReport {
  ScaledDet value;
  std::vector<ScaledDet> factors;
  std::vector<double> condition;
};

/// Runs the recursion
///
///   alpha^(k+1)_ij = alpha^(k)_ij - alpha^(k)_{i,N-k} (alpha^(k)_{N-k,N-k})^-1 alpha^(k)_{N-k,j}
///
/// from alpha^(0) = S down to the single block alpha^(N-1), consuming the
/// highest-index diagonal block at each level. All levels are returned.
/// Throws SingularPivotBlock naming the first pivot that cannot be inverted.
std::vector<AlphaTable> alpha_recursion(const BlockMatrix& bm, const EngineOptions& opts = {});

/// alpha^(k)_ij evaluated without the recursion:
///
///   S_ij - sigma^T_{i,N-k+1} * (S~_k)^-1 * s_{N-k+1,j}
///
/// where S~_k is the trailing k x k block matrix, applied as one (k*n)
/// dimensional solve. k = 0 returns S_ij. Requires i, j <= N - k.
DenseMatrix alpha_direct(const BlockMatrix& bm, std::size_t k, std::size_t i, std::size_t j,
                         const Tolerances& tol = kDefaultTolerances);

/// det(S) = prod_{k=1..N} det(alpha^(N-k)_kk).
DetReport block_det(const BlockMatrix& bm, const EngineOptions& opts = {});

/// det(S11 - S12 S22^-1 S21) * det(S22) for N = 2.
ScaledDet det_2x2_closed(const BlockMatrix& bm, const Tolerances& tol = kDefaultTolerances);

enum class OffDiagonal { S12, S21 };

/// det(S22 S11 - S12 S21) when S12 commutes with S22, or
/// det(S11 S22 - S12 S21) when S21 does. The commutation is checked first.
/// Throws CommutatorViolation when the chosen block does not commute with S22.
ScaledDet det_2x2_commuting(const BlockMatrix& bm, OffDiagonal which,
                            const Tolerances& tol = kDefaultTolerances);

/// Same reduction for a block that anti-commutes with S22; the sign of the
/// product term flips: det(S22 S11 + S12 S21) or det(S11 S22 + S12 S21).
ScaledDet det_2x2_anticommuting(const BlockMatrix& bm, OffDiagonal which,
                                const Tolerances& tol = kDefaultTolerances);

/// Three-factor closed form for N = 3, built from Schur complements against
/// S33 without touching the recursion:
///
///   det([S11 - S13 S33^-1 S31] - [S12 - S13 S33^-1 S32] P^-1 [S21 - S23 S33^-1 S31])
///     * det(P) * det(S33),   P = S22 - S23 S33^-1 S32.
ScaledDet det_3x3_closed(const BlockMatrix& bm, const Tolerances& tol = kDefaultTolerances);

}  // namespace blockdet
