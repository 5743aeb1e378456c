#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace qfinetti {

/// Arithmetic mode of a computation. Exact mode uses reduced GMP rationals;
/// floating mode uses IEEE doubles and exists for large-n sweeps.
enum class Mode { exact, floating };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// Raised when two scalars of different modes meet in one operation.
class ModeMismatch : public std::logic_error {
 public:
  ModeMismatch() : std::logic_error("mixed exact/floating scalar arithmetic") {}
};

/// A probability-valued number: either an exact rational or a double.
///
/// Every binary operation requires both operands to share a mode; there is
/// no implicit coercion in either direction.
class Scalar {
 public:
  using Rational = mpq_class;

  Scalar() : value_(Rational(0)) {}
  explicit Scalar(Rational r) : value_(std::move(r)) { canonical(); }
  explicit Scalar(double d) : value_(d) {}

  static Scalar zero(Mode mode);
  static Scalar one(Mode mode);
  static Scalar from_int(long value, Mode mode);
  /// Exact p/r, or its nearest double in floating mode.
  static Scalar fraction(long num, long den, Mode mode);

  /// Parses "p", "p/r" (exact) or a decimal literal (floating only).
  static Scalar parse(std::string_view text, Mode mode);

  Mode mode() const { return std::holds_alternative<Rational>(value_) ? Mode::exact : Mode::floating; }
  bool is_exact() const { return mode() == Mode::exact; }

  const Rational& rational() const;
  double to_double() const;

  bool is_zero() const;
  int sign() const;

  Scalar abs() const;
  /// Integer power; negative exponents require a nonzero base.
  Scalar pow(long exponent) const;

  /// "p/r" (or "p" when the denominator is 1) in exact mode, 17 significant
  /// digits in floating mode.
  std::string to_string() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend std::partial_ordering operator<=>(const Scalar& lhs, const Scalar& rhs);

 private:
  void canonical();
  void require_same_mode(const Scalar& rhs) const;

  std::variant<Rational, double> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Relative closeness used wherever floating mode replaces an exact identity.
/// In exact mode this is plain equality.
bool approx_equal(const Scalar& a, const Scalar& b, double rel_tol = 1e-9);

}  // namespace qfinetti
