#include "multifix/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "multifix/errors.hpp"

namespace multifix {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Parses an optionally signed run of digits.
BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw SyntaxError("bad rational literal '" + std::string(whole) + "'");
  }
  BigInt value{std::string(s)};
  if (negative) value = -value;
  return value;
}

BigInt pow10(std::size_t k) {
  BigInt v = 1;
  for (std::size_t i = 0; i < k; ++i) v *= 10;
  return v;
}

}  // namespace

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw SyntaxError("empty rational literal");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den.is_zero()) {
      throw SyntaxError("zero denominator in rational literal '" + std::string(text) + "'");
    }
    return Rational(std::move(num), std::move(den));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    if (!all_digits(frac)) {
      throw SyntaxError("bad rational literal '" + std::string(text) + "'");
    }
    BigInt whole = parse_integer(text.substr(0, dot), text);
    bool negative = !text.empty() && text.front() == '-';
    BigInt scale = pow10(frac.size());
    BigInt frac_value{std::string(frac)};
    if (negative) frac_value = -frac_value;
    return Rational(whole * scale + frac_value, std::move(scale));
  }
  return Rational(parse_integer(text, text), 1);
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::pow(std::size_t exponent) const {
  if (exponent == 0) return Rational(1);
  // num and den are coprime, so their powers are too; no re-normalization needed.
  Rational out;
  out.num_ = boost::multiprecision::pow(num_, static_cast<unsigned>(exponent));
  out.den_ = boost::multiprecision::pow(den_, static_cast<unsigned>(exponent));
  if (out.den_ < 0) {  // unreachable, den_ > 0
    out.num_ = -out.num_;
    out.den_ = -out.den_;
  }
  return out;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& r) {
  return r.sign() < 0 ? -r : r;
}

}  // namespace multifix
