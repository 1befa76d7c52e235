#include "inforest/rational.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace inforest {

namespace {

std::int64_t checked_cast(__int128 v, const char* op) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw ArithmeticOverflow(std::string("rational ") + op);
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
  if (d == 0) throw ArithmeticOverflow("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    if (num_ == INT64_MIN || den_ == INT64_MIN) {
      throw ArithmeticOverflow("rational normalize");
    }
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  std::int64_t g = std::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::operator-() const {
  if (num_ == INT64_MIN) throw ArithmeticOverflow("rational negate");
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  __int128 n = static_cast<__int128>(num_) * o.den_ +
               static_cast<__int128>(o.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  // Reduce in 128 bits before the range check so near-limit values survive.
  __int128 a = n < 0 ? -n : n;
  __int128 b = d;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1 && n != 0) {
    n /= a;
    d /= a;
  }
  num_ = checked_cast(n, "add");
  den_ = checked_cast(d, "add");
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  // Cross-reduce first to keep intermediates small.
  std::int64_t g1 = std::gcd(num_, o.den_);
  std::int64_t g2 = std::gcd(o.num_, den_);
  __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
  __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
  num_ = checked_cast(n, "mul");
  den_ = checked_cast(d, "mul");
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw ArithmeticOverflow("rational division by zero");
  return *this *= Rational(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::ostringstream os;
  os << num_;
  if (den_ != 1) os << '/' << den_;
  return os.str();
}

Rational Rational::parse(const std::string& text) {
  std::istringstream is(text);
  std::int64_t n = 0, d = 1;
  char slash = 0;
  if (!(is >> n)) throw InvalidInput("cannot parse rational '" + text + "'");
  if (is >> slash) {
    if (slash != '/' || !(is >> d)) {
      throw InvalidInput("cannot parse rational '" + text + "'");
    }
  }
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace inforest
