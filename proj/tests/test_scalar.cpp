#include <doctest.h>

#include "qfinetti/scalar.hpp"

using qfinetti::Mode;
using qfinetti::ModeMismatch;
using qfinetti::Scalar;

TEST_CASE("exact arithmetic is closed and reduced") {
  const auto a = Scalar::parse("2/6", Mode::exact);
  const auto b = Scalar::parse("1/4", Mode::exact);
  CHECK(a.to_string() == "1/3");
  CHECK((a + b).to_string() == "7/12");
  CHECK((a - b).to_string() == "1/12");
  CHECK((a * b).to_string() == "1/12");
  CHECK((a / b).to_string() == "4/3");
  CHECK((-a).to_string() == "-1/3");
  CHECK(Scalar::from_int(3, Mode::exact).to_string() == "3");
}

TEST_CASE("integer powers, including negative exponents") {
  const auto half = Scalar::fraction(1, 2, Mode::exact);
  CHECK(half.pow(3).to_string() == "1/8");
  CHECK(half.pow(-3).to_string() == "8");
  CHECK(half.pow(0).to_string() == "1");
  CHECK_THROWS_AS(Scalar::zero(Mode::exact).pow(-1), std::domain_error);
  CHECK(Scalar(0.5).pow(-2).to_double() == doctest::Approx(4.0));
}

TEST_CASE("mixed-mode arithmetic is rejected") {
  const auto exact = Scalar::one(Mode::exact);
  const auto floating = Scalar::one(Mode::floating);
  CHECK_THROWS_AS(exact + floating, ModeMismatch);
  CHECK_THROWS_AS(exact * floating, ModeMismatch);
  CHECK_THROWS_AS((void)(exact == floating), ModeMismatch);
  CHECK_THROWS_AS((void)(exact < floating), ModeMismatch);
  CHECK_THROWS_AS((void)floating.rational(), ModeMismatch);
}

TEST_CASE("parsing") {
  CHECK(Scalar::parse("35/16", Mode::exact).to_string() == "35/16");
  CHECK(Scalar::parse("-4/8", Mode::exact).to_string() == "-1/2");
  CHECK_THROWS_AS(Scalar::parse("0.5", Mode::exact), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("1/0", Mode::exact), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("1/", Mode::exact), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse(" 1", Mode::exact), std::invalid_argument);
  CHECK(Scalar::parse("0.25", Mode::floating).to_double() == 0.25);
  CHECK(Scalar::parse("1/4", Mode::floating).to_double() == 0.25);
  CHECK_THROWS_AS(Scalar::parse("abc", Mode::floating), std::invalid_argument);
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Scalar::one(Mode::exact) / Scalar::zero(Mode::exact), std::domain_error);
}

TEST_CASE("floating rendering uses 17 significant digits") {
  CHECK(Scalar(0.1).to_string() == "0.10000000000000001");
}

TEST_CASE("ordering and sign") {
  const auto a = Scalar::fraction(1, 3, Mode::exact);
  const auto b = Scalar::fraction(1, 2, Mode::exact);
  CHECK(a < b);
  CHECK(b > a);
  CHECK(a <= a);
  CHECK((a - b).sign() == -1);
  CHECK((a - b).abs() == Scalar::fraction(1, 6, Mode::exact));
  CHECK(Scalar::zero(Mode::exact).is_zero());
}
