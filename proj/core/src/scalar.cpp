#include "qfinetti/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace qfinetti {

std::string_view to_string(Mode mode) { return mode == Mode::exact ? "exact" : "float"; }

Mode parse_mode(std::string_view text) {
  if (text == "exact") return Mode::exact;
  if (text == "float" || text == "floating") return Mode::floating;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected exact|float)");
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

bool is_rational_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return all_digits(s);
  return all_digits(s.substr(0, slash)) && all_digits(s.substr(slash + 1));
}

mpq_class parse_rational(std::string_view s) {
  mpq_class r;
  if (r.set_str(std::string(s), 10) != 0) {
    throw std::invalid_argument("invalid rational '" + std::string(s) + "'");
  }
  if (r.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
  }
  r.canonicalize();
  return r;
}

}  // namespace

Scalar Scalar::zero(Mode mode) { return from_int(0, mode); }
Scalar Scalar::one(Mode mode) { return from_int(1, mode); }

Scalar Scalar::from_int(long value, Mode mode) {
  if (mode == Mode::exact) return Scalar(Rational(value));
  return Scalar(static_cast<double>(value));
}

Scalar Scalar::fraction(long num, long den, Mode mode) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  if (mode == Mode::exact) return Scalar(std::move(r));
  return Scalar(r.get_d());
}

Scalar Scalar::parse(std::string_view text, Mode mode) {
  if (is_rational_literal(text)) {
    Rational r = parse_rational(text);
    if (mode == Mode::exact) return Scalar(std::move(r));
    return Scalar(r.get_d());
  }
  if (mode == Mode::exact) {
    throw std::invalid_argument("'" + std::string(text) +
                                "' is not an exact fraction p/r (decimals are rejected in exact mode)");
  }
  double d = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, d);
  if (ec != std::errc() || ptr != last || !std::isfinite(d)) {
    throw std::invalid_argument("invalid number '" + std::string(text) + "'");
  }
  return Scalar(d);
}

const Scalar::Rational& Scalar::rational() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw ModeMismatch();
}

double Scalar::to_double() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->get_d();
  return std::get<double>(value_);
}

bool Scalar::is_zero() const { return sign() == 0; }

int Scalar::sign() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return sgn(*r);
  const double d = std::get<double>(value_);
  return (d > 0.0) - (d < 0.0);
}

Scalar Scalar::abs() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return Scalar(Rational(::abs(*r)));
  return Scalar(std::fabs(std::get<double>(value_)));
}

Scalar Scalar::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw std::domain_error("negative power of zero");
    return one(mode()) / pow(-exponent);
  }
  if (auto const* r = std::get_if<Rational>(&value_)) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), r->get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(out.get_den_mpz_t(), r->get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Scalar(std::move(out));
  }
  return Scalar(std::pow(std::get<double>(value_), static_cast<double>(exponent)));
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->get_str(10);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(value_));
  return buf;
}

void Scalar::canonical() {
  if (auto* r = std::get_if<Rational>(&value_)) {
    if (r->get_den() == 0) throw std::invalid_argument("zero denominator");
    r->canonicalize();
  }
}

void Scalar::require_same_mode(const Scalar& rhs) const {
  if (value_.index() != rhs.value_.index()) throw ModeMismatch();
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_mode(rhs);
  if (auto* r = std::get_if<Rational>(&value_)) {
    *r += std::get<Rational>(rhs.value_);
  } else {
    std::get<double>(value_) += std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_mode(rhs);
  if (auto* r = std::get_if<Rational>(&value_)) {
    *r -= std::get<Rational>(rhs.value_);
  } else {
    std::get<double>(value_) -= std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_mode(rhs);
  if (auto* r = std::get_if<Rational>(&value_)) {
    *r *= std::get<Rational>(rhs.value_);
  } else {
    std::get<double>(value_) *= std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_mode(rhs);
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  if (auto* r = std::get_if<Rational>(&value_)) {
    *r /= std::get<Rational>(rhs.value_);
  } else {
    std::get<double>(value_) /= std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return Scalar(Rational(-*r));
  return Scalar(-std::get<double>(value_));
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  lhs.require_same_mode(rhs);
  if (const auto* r = std::get_if<Scalar::Rational>(&lhs.value_)) {
    return *r == std::get<Scalar::Rational>(rhs.value_);
  }
  return std::get<double>(lhs.value_) == std::get<double>(rhs.value_);
}

std::partial_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
  lhs.require_same_mode(rhs);
  if (const auto* r = std::get_if<Scalar::Rational>(&lhs.value_)) {
    const int c = cmp(*r, std::get<Scalar::Rational>(rhs.value_));
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  return std::get<double>(lhs.value_) <=> std::get<double>(rhs.value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

bool approx_equal(const Scalar& a, const Scalar& b, double rel_tol) {
  if (a.mode() != b.mode()) throw ModeMismatch();
  if (a.is_exact()) return a == b;
  const double x = a.to_double();
  const double y = b.to_double();
  const double scale = std::max(std::fabs(x), std::fabs(y));
  return std::fabs(x - y) <= rel_tol * scale;
}

}  // namespace qfinetti
