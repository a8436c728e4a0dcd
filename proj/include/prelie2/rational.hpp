#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace prelie2 {

// Malformed text where a rational was expected (also used for schema errors).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact rational number, always kept in lowest terms with a positive
// denominator, so equal values have equal representations.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I n) : value_(static_cast<long>(n)) {}  // NOLINT: implicit by design
  Rational(long numerator, long denominator);

  // Accepts "p" or "p/q" with an optional leading minus on p; q must be
  // a positive integer. Non-reduced input is reduced.
  static Rational parse(std::string_view text);

  // "p/q", or "p" when q = 1.
  std::string str() const;
  std::string numerator() const;
  std::string denominator() const;

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  Rational operator-() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

}  // namespace prelie2
