// Exact rational arithmetic on int64 numerator/denominator.
//
// Every value in the linear-programming verifier is a small multiple of 1/27
// or a solution of a 4x4 system with such coefficients, so int64 with __int128
// intermediates is ample headroom. Any overflow throws ArithmeticOverflow
// instead of wrapping; nothing here ever touches floating point.
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "inforest/errors.hpp"

namespace inforest {

class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "5/27", "-3", "0". Denominator 1 prints without the slash.
  std::string str() const;
  static Rational parse(const std::string& text);

 private:
  void normalize();

  std::int64_t num_;
  std::int64_t den_;  // > 0 always
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace inforest
