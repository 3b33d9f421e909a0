#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace multifix {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction over arbitrary-precision integers, the only scalar type in
// the library. Invariants: lowest terms, denominator > 0. Every operation is
// exact; nothing in the system ever rounds.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit for literals
  Rational(BigInt numerator, BigInt denominator);

  // Accepts "p", "p/q", and finite decimals like "-3.25". Throws SyntaxError.
  static Rational parse(std::string_view text);

  // "p/q" in lowest terms, or just "p" when the denominator is 1.
  std::string str() const;

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rational pow(std::size_t exponent) const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // Canonical form makes field equality coincide with value equality.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  BigInt num_;
  BigInt den_;

  void normalize();
};

Rational abs(const Rational& r);

}  // namespace multifix
