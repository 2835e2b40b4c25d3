#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace tropical {

using Rational = boost::multiprecision::mpq_rational;

/// An element of the finite max-plus semiring FT: an exact rational number.
///
/// The default value is 0, the multiplicative unit of FT.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(Rational value) : value_(std::move(value)) {}

  /// Parses an integer ("-3"), a decimal ("-1.5") or a fraction ("-3/2").
  /// Throws ParseError on anything else.
  static Scalar parse(std::string_view text);

  const Rational& value() const noexcept { return value_; }

  bool is_zero() const { return value_.is_zero(); }
  int sign() const { return value_.sign(); }

  /// Canonical text: "p/q", or "p" when integral.
  std::string str() const;
  /// Display only; never used for decisions.
  std::string decimal_str(int digits = 6) const;
  double to_double() const { return value_.convert_to<double>(); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(Rational(a.value_ + b.value_)); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(Rational(a.value_ - b.value_)); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar(Rational(a.value_ * b.value_)); }
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a) { return Scalar(Rational(-a.value_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  Rational value_{0};
};

/// An element of the extended semiring T = FT ∪ {−∞}.
///
/// Default-constructs to −∞ (the neutral element of ⊕).
class ExtScalar {
 public:
  ExtScalar() = default;
  ExtScalar(Scalar value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  ExtScalar(long value) : value_(Scalar(value)) {}       // NOLINT(google-explicit-constructor)

  static ExtScalar bottom() { return ExtScalar(); }
  /// As Scalar::parse, additionally accepting "-inf".
  static ExtScalar parse(std::string_view text);

  bool is_bottom() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }
  /// Throws PreconditionError for −∞.
  const Scalar& finite() const;

  std::string str() const { return is_bottom() ? "-inf" : value_->str(); }
  std::string decimal_str(int digits = 6) const { return is_bottom() ? "-inf" : value_->decimal_str(digits); }

  friend bool operator==(const ExtScalar& a, const ExtScalar& b) = default;
  friend std::strong_ordering operator<=>(const ExtScalar& a, const ExtScalar& b) {
    if (a.is_bottom() || b.is_bottom()) return b.is_bottom() <=> a.is_bottom();
    return *a.value_ <=> *b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtScalar& s) { return os << s.str(); }

 private:
  std::optional<Scalar> value_;
};

// Semiring operations. On FT these are max and +; on T, −∞ is neutral for ⊕
// and absorbing for ⊗.
inline Scalar trop_add(const Scalar& a, const Scalar& b) { return a < b ? b : a; }
inline Scalar trop_mul(const Scalar& a, const Scalar& b) { return a + b; }
ExtScalar trop_add(const ExtScalar& a, const ExtScalar& b);
ExtScalar trop_mul(const ExtScalar& a, const ExtScalar& b);

}  // namespace tropical
