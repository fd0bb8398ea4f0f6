#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace stackgame {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always kept canonical: the denominator is
/// positive and coprime with the numerator. All game quantities are
/// carried by this type; floating point only ever appears in rendering.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(int n) : value_(n) {}                // NOLINT: implicit by design
  Rational(long long n) : value_(n) {}          // NOLINT
  Rational(const BigInt& n) : value_(n) {}      // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "p/q", an integer, or a decimal string ("0.5" -> 1/2).
  /// Throws ParseError on anything else (including zero denominators).
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  int sign() const { return value_ > 0 ? 1 : (value_ < 0 ? -1 : 0); }
  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  Rational abs() const { return value_ < 0 ? Rational(-value_) : *this; }

  double to_double() const { return value_.convert_to<double>(); }

  /// Canonical string: "p" when the denominator is 1, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const { return Rational(-value_); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

 private:
  using Backend = boost::multiprecision::cpp_rational;
  explicit Rational(Backend v) : value_(std::move(v)) {}

  Backend value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace stackgame
