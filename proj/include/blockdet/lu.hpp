#pragma once

#include <cstddef>
#include <vector>

#include "blockdet/dense_matrix.hpp"
#include "blockdet/scaled_det.hpp"
#include "blockdet/tolerances.hpp"

namespace blockdet {

/// PA = LU with unit-diagonal L stored below the diagonal of `lu` and U on
/// and above it. `perm[i]` is the input row that ended up in row i.
struct LuFactors {
  DenseMatrix lu;
  std::vector<std::size_t> perm;
  int parity = 1;
  bool singular = false;

  std::size_t dim() const noexcept { return lu.rows(); }
  DenseMatrix lower() const;
  DenseMatrix upper() const;
  /// Rows of `m` reordered by `perm`.
  DenseMatrix permute_rows(const DenseMatrix& m) const;
};

/// Partial pivoting: each column takes the largest-magnitude remaining entry.
/// Singularity is flagged, never thrown.
LuFactors lu_decompose(const DenseMatrix& m, const Tolerances& tol = kDefaultTolerances);

/// parity * prod(U_ii), accumulated in scaled form; exactly zero when the
/// factorization is flagged singular.
ScaledDet det_dense(const DenseMatrix& m, const Tolerances& tol = kDefaultTolerances);
ScaledDet det_from_factors(const LuFactors& f);

/// Throws SingularMatrix when the factorization is flagged singular.
DenseMatrix solve(const LuFactors& f, const DenseMatrix& rhs);
DenseMatrix solve(const DenseMatrix& m, const DenseMatrix& rhs,
                  const Tolerances& tol = kDefaultTolerances);
DenseMatrix invert(const DenseMatrix& m, const Tolerances& tol = kDefaultTolerances);

/// ||m||_1 * ||m^-1||_1, or +inf when m is flagged singular.
double condition_estimate(const DenseMatrix& m, const Tolerances& tol = kDefaultTolerances);

}  // namespace blockdet
