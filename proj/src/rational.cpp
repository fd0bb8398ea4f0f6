#include "stackgame/rational.hpp"

#include <cctype>
#include <ostream>

#include "stackgame/errors.hpp"

namespace stackgame {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Consumes an optional sign, returns -1 or +1.
int take_sign(std::string_view& s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    int sign = s.front() == '-' ? -1 : 1;
    s.remove_prefix(1);
    return sign;
  }
  return 1;
}

BigInt parse_unsigned(std::string_view s, std::string_view whole) {
  if (!all_digits(s)) {
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  return BigInt(std::string(s));
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  // the backend reduces the gcd but insists on a positive denominator
  value_ = den < 0 ? Backend(-num, -den) : Backend(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) {
    throw std::domain_error("rational division by zero");
  }
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) {
    throw ParseError("empty rational");
  }

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num_part = s.substr(0, slash);
    std::string_view den_part = s.substr(slash + 1);
    int num_sign = take_sign(num_part);
    int den_sign = take_sign(den_part);
    BigInt num = parse_unsigned(num_part, text);
    BigInt den = parse_unsigned(den_part, text);
    if (den == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num_sign * num, den_sign * den);
  }

  int sign = take_sign(s);
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
  }
  if (!int_part.empty() && !all_digits(int_part)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  if (!frac_part.empty() && !all_digits(frac_part)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  if (int_part.empty() && frac_part.empty()) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }

  BigInt scale = 1;
  BigInt value = int_part.empty() ? BigInt(0) : BigInt(std::string(int_part));
  for (char c : frac_part) {
    value = value * 10 + (c - '0');
    scale *= 10;
  }
  return Rational(sign * value, scale);
}

std::string Rational::str() const {
  std::string out = numerator().str();
  if (BigInt den = denominator(); den != 1) {
    out += '/';
    out += den.str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace stackgame
