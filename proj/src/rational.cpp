#include "cevian/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "cevian/errors.hpp"

namespace cevian {

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

namespace {

bool parse_integer(std::string_view digits, bool allow_sign, BigInt& out) {
  if (digits.empty()) return false;
  std::size_t start = 0;
  if (allow_sign && (digits[0] == '-' || digits[0] == '+')) start = 1;
  if (start == digits.size()) return false;
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) return false;
  }
  std::string text(digits.substr(digits[0] == '+' ? 1 : 0));
  return out.set_str(text, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view body = trim(text);
  const auto slash = body.find('/');
  BigInt num;
  BigInt den = 1;
  bool ok;
  if (slash == std::string_view::npos) {
    ok = parse_integer(body, true, num);
  } else {
    ok = parse_integer(body.substr(0, slash), true, num) &&
         parse_integer(body.substr(slash + 1), false, den);
  }
  if (!ok) throw ValidationError("not a fraction: \"" + std::string(text) + "\"");
  if (den == 0) throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_fixed(int places) const {
  if (places < 0) throw std::invalid_argument("negative precision");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  BigInt magnitude = abs(value_.get_num()) * scale;
  const BigInt& den = value_.get_den();
  BigInt scaled = magnitude / den;
  if (2 * (magnitude - scaled * den) >= den) scaled += 1;

  std::string digits = scaled.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (sign() < 0 && scaled != 0) digits.insert(0, "-");
  return digits;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace cevian
