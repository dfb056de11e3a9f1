#include "blockdet/scaled_det.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "blockdet/errors.hpp"

namespace blockdet {

namespace {

// Multiply by 10^e in chunks so intermediate powers never overflow.
std::complex<double> shift10(std::complex<double> z, std::int64_t e) {
  while (e > 300) {
    z *= 1e300;
    e -= 300;
  }
  while (e < -300) {
    z *= 1e-300;
    e += 300;
  }
  return z * std::pow(10.0, static_cast<double>(e));
}

}  // namespace

ScaledDet::ScaledDet(std::complex<double> mantissa, std::int64_t exponent) {
  const double mag = std::abs(mantissa);
  if (mag == 0.0 || !std::isfinite(mag)) {
    if (!std::isfinite(mag)) {
      mantissa_ = {std::numeric_limits<double>::quiet_NaN(), 0.0};
      exponent_ = 0;
    }
    return;
  }
  auto shift = static_cast<std::int64_t>(std::floor(std::log10(mag)));
  std::complex<double> m = shift10(mantissa, -shift);
  // log10 rounding can leave the magnitude just outside [1, 10).
  while (std::abs(m) >= 10.0) {
    m /= 10.0;
    ++shift;
  }
  while (std::abs(m) < 1.0) {
    m *= 10.0;
    --shift;
  }
  mantissa_ = m;
  exponent_ = exponent + shift;
}

double ScaledDet::log10_abs() const noexcept {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  return std::log10(std::abs(mantissa_)) + static_cast<double>(exponent_);
}

std::complex<double> ScaledDet::to_complex() const noexcept {
  if (is_zero()) return {};
  return shift10(mantissa_, exponent_);
}

ScaledDet& ScaledDet::operator*=(const ScaledDet& rhs) {
  if (is_zero() || rhs.is_zero()) {
    *this = ScaledDet{};
    return *this;
  }
  *this = ScaledDet(mantissa_ * rhs.mantissa_, exponent_ + rhs.exponent_);
  return *this;
}

ScaledDet& ScaledDet::operator/=(const ScaledDet& rhs) {
  if (rhs.is_zero()) {
    *this = ScaledDet(std::complex<double>{std::numeric_limits<double>::infinity(), 0.0});
    return *this;
  }
  if (is_zero()) return *this;
  *this = ScaledDet(mantissa_ / rhs.mantissa_, exponent_ - rhs.exponent_);
  return *this;
}

ScaledDet operator+(const ScaledDet& a, const ScaledDet& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::int64_t e = std::max(a.exponent_, b.exponent_);
  // Mantissas differing by more than ~20 decades cannot affect each other.
  const auto aligned = [e](const ScaledDet& d) {
    const std::int64_t gap = e - d.exponent_;
    return gap > 20 ? std::complex<double>{} : shift10(d.mantissa_, -gap);
  };
  return ScaledDet(aligned(a) + aligned(b), e);
}

ScaledDet operator-(const ScaledDet& a, const ScaledDet& b) { return a + (-b); }

ScaledDet pow(const ScaledDet& base, unsigned power) {
  ScaledDet result = ScaledDet::one();
  ScaledDet factor = base;
  while (power != 0) {
    if (power & 1u) result *= factor;
    factor *= factor;
    power >>= 1u;
  }
  return result;
}

double magnitude_ratio(const ScaledDet& a, const ScaledDet& b) {
  if (a.is_zero()) return b.is_zero() ? std::numeric_limits<double>::quiet_NaN() : 0.0;
  if (b.is_zero()) return std::numeric_limits<double>::infinity();
  const double log_ratio = a.log10_abs() - b.log10_abs();
  return std::pow(10.0, log_ratio);
}

double relative_error(const ScaledDet& a, const ScaledDet& b) {
  if (b.is_zero()) return a.is_zero() ? 0.0 : std::numeric_limits<double>::infinity();
  const ScaledDet diff = a - b;
  if (diff.is_zero()) return 0.0;
  return magnitude_ratio(diff, b);
}

std::string format_scaled(const ScaledDet& d) {
  std::complex<double> m = d.mantissa();
  std::int64_t e = d.exponent();
  // A mantissa such as 9.9999999999999 would print as "10.000...".
  const double limit = 10.0 - 0.5e-12;
  if (std::abs(m.real()) >= limit || std::abs(m.imag()) >= limit) {
    m /= 10.0;
    ++e;
  }

  std::string out;
  char buf[64];
  const auto put_fixed = [&](double x, bool force_sign) {
    if (x == 0.0) x = 0.0;  // drop negative zero
    if (force_sign && !std::signbit(x)) out.push_back('+');
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 12);
    out.append(buf, res.ptr);
  };
  put_fixed(m.real(), false);
  put_fixed(m.imag(), true);
  out.push_back('E');
  out.push_back(e < 0 ? '-' : '+');
  std::string digits = std::to_string(e < 0 ? -e : e);
  if (digits.size() < 3) digits.insert(0, 3 - digits.size(), '0');
  out += digits;
  return out;
}

ScaledDet parse_scaled(std::string_view text) {
  const auto fail = [&]() -> ParseError {
    return ParseError("malformed determinant literal '" + std::string(text) + "'");
  };
  const char* p = text.data();
  const char* end = text.data() + text.size();

  double re = 0.0;
  double im = 0.0;
  auto r1 = std::from_chars(p, end, re, std::chars_format::fixed);
  if (r1.ec != std::errc{} || r1.ptr == end) throw fail();
  p = r1.ptr;
  if (*p != '+' && *p != '-') throw fail();
  const bool neg_im = *p == '-';
  ++p;
  auto r2 = std::from_chars(p, end, im, std::chars_format::fixed);
  if (r2.ec != std::errc{} || r2.ptr == end || *r2.ptr != 'E') throw fail();
  p = r2.ptr;
  ++p;
  if (p == end || (*p != '+' && *p != '-')) throw fail();
  const bool neg_e = *p == '-';
  ++p;
  std::int64_t e = 0;
  auto r3 = std::from_chars(p, end, e);
  if (r3.ec != std::errc{} || r3.ptr != end || r3.ptr - p < 3) throw fail();
  if (neg_im) im = -im;
  if (neg_e) e = -e;
  return ScaledDet({re, im}, e);
}

}  // namespace blockdet
