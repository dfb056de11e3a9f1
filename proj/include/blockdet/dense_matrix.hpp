#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace blockdet {

using cplx = std::complex<double>;

/// Rectangular complex matrix in row-major storage. Entries are finite on
/// construction; arithmetic results are not re-checked.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  /// rows x cols of zeros.
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  /// Row-wise literal, e.g. {{1, 2}, {3, 4}}.
  DenseMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const cplx> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  cplx operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const cplx> entries() const noexcept { return data_; }
  std::span<const cplx> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Copy of the nr x nc window starting at (r0, c0).
  DenseMatrix slice(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Overwrite the window starting at (r0, c0) with `src`.
  void paste(std::size_t r0, std::size_t c0, const DenseMatrix& src);

  double max_abs() const noexcept;
  bool is_zero() const noexcept;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix matadd(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix matsub(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scalar_mul(cplx s, const DenseMatrix& a);
DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// a*b - b*a
DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b);
/// a*b + b*a
DenseMatrix anticommutator(const DenseMatrix& a, const DenseMatrix& b);

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

inline DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) { return matmul(a, b); }
inline DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) { return matadd(a, b); }
inline DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) { return matsub(a, b); }
inline DenseMatrix operator*(cplx s, const DenseMatrix& a) { return scalar_mul(s, a); }
inline DenseMatrix operator-(const DenseMatrix& a) { return scalar_mul(-1.0, a); }

}  // namespace blockdet
