#include <doctest.h>

#include <cmath>
#include <random>

#include "blockdet/dense_matrix.hpp"
#include "blockdet/errors.hpp"
#include "blockdet/scaled_det.hpp"

using namespace blockdet;

TEST_CASE("normalization keeps the mantissa in [1, 10)") {
  const ScaledDet a(cplx(12345.0, 0.0));
  CHECK(a.exponent() == 4);
  CHECK(std::abs(a.mantissa() - cplx(1.2345, 0.0)) < 1e-15);

  const ScaledDet b(cplx(0.0, -0.002));
  CHECK(b.exponent() == -3);
  CHECK(std::abs(b.mantissa() - cplx(0.0, -2.0)) < 1e-15);

  const ScaledDet z(cplx{});
  CHECK(z.is_zero());
  CHECK(z.exponent() == 0);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-300.0, 300.0);
  for (int i = 0; i < 1000; ++i) {
    const double mag = std::pow(10.0, u(rng));
    const ScaledDet d(std::polar(mag, u(rng)));
    CHECK(std::abs(d.mantissa()) >= 1.0);
    CHECK(std::abs(d.mantissa()) < 10.0);
  }
}

TEST_CASE("arithmetic far outside the double range") {
  ScaledDet big = pow(ScaledDet(cplx(1e200)), 5);
  CHECK(big.exponent() == 1000);
  CHECK(std::isinf(big.to_complex().real()));
  const ScaledDet back = big / pow(ScaledDet(cplx(1e200)), 5);
  CHECK(relative_error(back, ScaledDet::one()) < 1e-12);
  CHECK(relative_error(big + big, big * ScaledDet(cplx(2.0))) < 1e-15);
  CHECK((big - big).is_zero());
  CHECK(relative_error(ScaledDet::zero(), ScaledDet::zero()) == 0.0);
  CHECK(std::isinf(relative_error(ScaledDet::one(), ScaledDet::zero())));
}

TEST_CASE("format_scaled matches the fixed layout") {
  CHECK(format_scaled(ScaledDet::one()) == "1.000000000000+0.000000000000E+000");
  CHECK(format_scaled(ScaledDet(cplx(10.0))) == "1.000000000000+0.000000000000E+001");
  CHECK(format_scaled(ScaledDet(cplx(-2.5, -0.5), -7)) == "-2.500000000000-0.500000000000E-007");
  CHECK(format_scaled(ScaledDet::zero()) == "0.000000000000+0.000000000000E+000");
  CHECK(format_scaled(ScaledDet(cplx(3.0), 1234)) == "3.000000000000+0.000000000000E+1234");
  // Rounding up to ten moves into the exponent instead of printing "10.".
  CHECK(format_scaled(ScaledDet(cplx(9.99999999999999))) == "1.000000000000+0.000000000000E+001");
}

TEST_CASE("parse_scaled inverts format_scaled") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> e(-2000, 2000);
  for (int i = 0; i < 500; ++i) {
    const ScaledDet d(cplx(u(rng), u(rng)), e(rng));
    const std::string text = format_scaled(d);
    const ScaledDet back = parse_scaled(text);
    CHECK(format_scaled(back) == text);
    CHECK(relative_error(back, d) < 1e-11);
  }
  CHECK_THROWS_AS(parse_scaled("1.0+2.0"), ParseError);
  CHECK_THROWS_AS(parse_scaled("1.0+2.0E+1"), ParseError);
  CHECK_THROWS_AS(parse_scaled("abc"), ParseError);
  CHECK_THROWS_AS(parse_scaled("1.000000000000+0.000000000000E+000x"), ParseError);
}
