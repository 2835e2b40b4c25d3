#include "tropical/scalar.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

#include "tropical/error.hpp"

namespace tropical {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational big(std::string_view digits) {
  return Rational(boost::multiprecision::mpz_int(std::string(digits)));
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() -> Scalar { throw ParseError("invalid number '" + original + "'"); };

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    const Rational d = big(den);
    if (d.is_zero()) throw ParseError("zero denominator in '" + original + "'");
    value = big(num) / d;
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if (!whole.empty() && !all_digits(whole)) return fail();
    if (!frac.empty() && !all_digits(frac)) return fail();
    value = whole.empty() ? Rational(0) : big(whole);
    if (!frac.empty()) {
      Rational scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      value += big(frac) / scale;
    }
  } else {
    if (!all_digits(text)) return fail();
    value = big(text);
  }
  return Scalar(negative ? Rational(-value) : value);
}

std::string Scalar::str() const {
  if (denominator(value_) == 1) return numerator(value_).str();
  return numerator(value_).str() + "/" + denominator(value_).str();
}

std::string Scalar::decimal_str(int digits) const {
  if (denominator(value_) == 1) return numerator(value_).str();
  std::ostringstream os;
  os << std::setprecision(digits) << to_double();
  return os.str();
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw PreconditionError("division by zero");
  return Scalar(Rational(a.value_ / b.value_));
}

ExtScalar ExtScalar::parse(std::string_view text) {
  if (text == "-inf") return bottom();
  return ExtScalar(Scalar::parse(text));
}

const Scalar& ExtScalar::finite() const {
  if (is_bottom()) throw PreconditionError("expected a finite entry, found -inf");
  return *value_;
}

ExtScalar trop_add(const ExtScalar& a, const ExtScalar& b) { return a < b ? b : a; }

ExtScalar trop_mul(const ExtScalar& a, const ExtScalar& b) {
  if (a.is_bottom() || b.is_bottom()) return ExtScalar::bottom();
  return ExtScalar(a.finite() + b.finite());
}

}  // namespace tropical
