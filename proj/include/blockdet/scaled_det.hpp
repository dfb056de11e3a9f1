#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace blockdet {

/// A complex value stored as mantissa * 10^exponent with 1 <= |mantissa| < 10
/// (or mantissa == 0, exponent == 0). Products of many determinant factors
/// stay representable long after a plain double would overflow.
class ScaledDet {
 public:
  ScaledDet() = default;
  explicit ScaledDet(std::complex<double> value) : ScaledDet(value, 0) {}
  /// Normalizes mantissa * 10^exponent.
  ScaledDet(std::complex<double> mantissa, std::int64_t exponent);

  static ScaledDet zero() { return ScaledDet{}; }
  static ScaledDet one() { return ScaledDet{1.0}; }

  std::complex<double> mantissa() const noexcept { return mantissa_; }
  std::int64_t exponent() const noexcept { return exponent_; }
  bool is_zero() const noexcept { return mantissa_ == std::complex<double>{}; }

  /// log10 |value|; -inf for zero.
  double log10_abs() const noexcept;
  /// The plain complex value. Overflows to inf / underflows to 0 outside the
  /// double range.
  std::complex<double> to_complex() const noexcept;

  ScaledDet& operator*=(const ScaledDet& rhs);
  ScaledDet& operator/=(const ScaledDet& rhs);
  ScaledDet& operator*=(std::complex<double> rhs) { return *this *= ScaledDet(rhs); }

  friend ScaledDet operator*(ScaledDet a, const ScaledDet& b) { return a *= b; }
  friend ScaledDet operator/(ScaledDet a, const ScaledDet& b) { return a /= b; }
  friend ScaledDet operator+(const ScaledDet& a, const ScaledDet& b);
  friend ScaledDet operator-(const ScaledDet& a, const ScaledDet& b);
  friend ScaledDet operator-(const ScaledDet& a) { return {-a.mantissa_, a.exponent_}; }

  friend bool operator==(const ScaledDet&, const ScaledDet&) = default;

 private:
  std::complex<double> mantissa_{};
  std::int64_t exponent_ = 0;
};

ScaledDet pow(const ScaledDet& base, unsigned power);

/// |a - b| / |b|, evaluated without leaving scaled form. Zero when both are
/// zero, +inf when only b is.
double relative_error(const ScaledDet& a, const ScaledDet& b);

/// |a| / |b| as a double (may saturate to 0 or inf).
double magnitude_ratio(const ScaledDet& a, const ScaledDet& b);

/// Fixed text form "r.rrrrrrrrrrrr+i.iiiiiiiiiiiiE+xxx": real and imaginary
/// mantissa parts with 12 digits after the point, then a signed decimal
/// exponent of at least three digits. Locale independent.
std::string format_scaled(const ScaledDet& d);

/// Inverse of format_scaled. Throws ParseError on malformed input.
ScaledDet parse_scaled(std::string_view text);

}  // namespace blockdet
