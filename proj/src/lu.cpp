#include "blockdet/lu.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "blockdet/errors.hpp"

namespace blockdet {

namespace {

void require_square(const DenseMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw DimensionMismatch(std::string(op) + ": matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected square");
  }
}

double norm1(const DenseMatrix& m) {
  double best = 0.0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    double col = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) col += std::abs(m(r, c));
    best = std::max(best, col);
  }
  return best;
}

}  // namespace

DenseMatrix LuFactors::lower() const {
  const std::size_t n = dim();
  DenseMatrix l = DenseMatrix::identity(n);
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c) l(r, c) = lu(r, c);
  return l;
}

DenseMatrix LuFactors::upper() const {
  const std::size_t n = dim();
  DenseMatrix u(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) u(r, c) = lu(r, c);
  return u;
}

DenseMatrix LuFactors::permute_rows(const DenseMatrix& m) const {
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < perm.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(perm[r], c);
  return out;
}

LuFactors lu_decompose(const DenseMatrix& m, const Tolerances& tol) {
  require_square(m, "lu_decompose");
  const std::size_t n = m.rows();
  LuFactors f{m, std::vector<std::size_t>(n), 1, false};
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  DenseMatrix& a = f.lu;

  const double threshold = tol.pivot_rel * m.max_abs() * static_cast<double>(n);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      const double v = std::abs(a(r, k));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
      std::swap(f.perm[k], f.perm[piv]);
      f.parity = -f.parity;
    }
    if (best < threshold || best == 0.0) f.singular = true;
    // An exactly zero column needs no elimination.
    if (best == 0.0) continue;

    const cplx pivot = a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const cplx l = a(r, k) / pivot;
      a(r, k) = l;
      if (l == cplx{}) continue;
      for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= l * a(k, c);
    }
  }
  return f;
}

ScaledDet det_from_factors(const LuFactors& f) {
  if (f.singular) return ScaledDet::zero();
  ScaledDet det(static_cast<double>(f.parity));
  for (std::size_t i = 0; i < f.dim(); ++i) det *= f.lu(i, i);
  return det;
}

ScaledDet det_dense(const DenseMatrix& m, const Tolerances& tol) {
  return det_from_factors(lu_decompose(m, tol));
}

DenseMatrix solve(const LuFactors& f, const DenseMatrix& rhs) {
  const std::size_t n = f.dim();
  if (rhs.rows() != n) {
    throw DimensionMismatch("solve: rhs has " + std::to_string(rhs.rows()) +
                            " rows, system has dimension " + std::to_string(n));
  }
  if (f.singular) throw SingularMatrix("solve: matrix is singular to working tolerance");

  DenseMatrix x = f.permute_rows(rhs);
  const std::size_t m = rhs.cols();
  // Forward substitution with unit-diagonal L.
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t k = 0; k < r; ++k) {
      const cplx l = f.lu(r, k);
      if (l == cplx{}) continue;
      for (std::size_t c = 0; c < m; ++c) x(r, c) -= l * x(k, c);
    }
  // Back substitution with U.
  for (std::size_t r = n; r-- > 0;) {
    for (std::size_t k = r + 1; k < n; ++k) {
      const cplx u = f.lu(r, k);
      if (u == cplx{}) continue;
      for (std::size_t c = 0; c < m; ++c) x(r, c) -= u * x(k, c);
    }
    const cplx d = f.lu(r, r);
    for (std::size_t c = 0; c < m; ++c) x(r, c) /= d;
  }
  return x;
}

DenseMatrix solve(const DenseMatrix& m, const DenseMatrix& rhs, const Tolerances& tol) {
  require_square(m, "solve");
  if (rhs.rows() != m.rows()) {
    throw DimensionMismatch("solve: rhs has " + std::to_string(rhs.rows()) +
                            " rows, system has dimension " + std::to_string(m.rows()));
  }
  return solve(lu_decompose(m, tol), rhs);
}

DenseMatrix invert(const DenseMatrix& m, const Tolerances& tol) {
  require_square(m, "invert");
  return solve(lu_decompose(m, tol), DenseMatrix::identity(m.rows()));
}

double condition_estimate(const DenseMatrix& m, const Tolerances& tol) {
  require_square(m, "condition_estimate");
  const LuFactors f = lu_decompose(m, tol);
  if (f.singular) return std::numeric_limits<double>::infinity();
  return norm1(m) * norm1(solve(f, DenseMatrix::identity(m.rows())));
}

}  // namespace blockdet
