#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "campana/arith/bigint.hpp"

namespace campana {

/// Exact rational in lowest terms with positive denominator. Zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (sgn(den_) == 0) throw InvalidArgument("zero denominator");
    normalize();
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return sgn(num_) == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  Rational operator-() const { return Rational(BigInt(-num_), den_, Normalized{}); }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw InvalidArgument("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(BigInt(a.num_ * b.den_), BigInt(b.num_ * a.den_));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p/q", or "p" when q = 1.
  std::string str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
  }

  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(text));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_bigint(text.substr(0, slash)), std::move(den));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  struct Normalized {};
  Rational(BigInt num, BigInt den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (sgn(den_) < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = gcd_of(num_, den_);
    if (g != 1) {
      mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }

  BigInt num_;
  BigInt den_;
};

inline Rational pow(const Rational& base, long exponent) {
  if (exponent >= 0)
    return Rational(pow(base.numerator(), static_cast<unsigned long>(exponent)),
                    pow(base.denominator(), static_cast<unsigned long>(exponent)));
  if (base.is_zero()) throw InvalidArgument("zero to a negative power");
  const auto e = static_cast<unsigned long>(-exponent);
  return Rational(pow(base.denominator(), e), pow(base.numerator(), e));
}

}  // namespace campana
