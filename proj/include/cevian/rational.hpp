#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cevian {

using BigInt = mpz_class;

/// Exact rational number backed by GMP.
///
/// Always held in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) = 1, so structural equality is value
/// equality. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when `den` is zero.
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "n", "-n" or "n/d" (optional surrounding whitespace).
  /// Throws ValidationError on anything else.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// "n/d", or "n" when the denominator is 1.
  std::string to_string() const;
  /// Decimal rendering rounded half away from zero to `places` digits.
  std::string to_fixed(int places) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::string to_string(const BigInt& value);

}  // namespace cevian
