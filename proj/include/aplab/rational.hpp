#pragma once

#include <numeric>
#include <ostream>

#include "aplab/common.hpp"

namespace aplab {

// Exact rational on int64 numerator/denominator, always reduced, den > 0.
// Comparisons cross-multiply in 128 bits and are therefore exact for any
// representable pair.  Multiplication reduces before the product and throws
// on overflow instead of degrading silently.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(i64 num, i64 den) : num_(num), den_(den) {
    require(den_ != 0, "Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    reduce();
  }
  static Rational integer(i64 n) { return Rational(n, 1); }

  i64 num() const { return num_; }
  i64 den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    i64 g = std::gcd(a.den_, b.den_);
    __int128 n = static_cast<__int128>(a.num_) * (b.den_ / g) +
                 static_cast<__int128>(b.num_) * (a.den_ / g);
    __int128 d = static_cast<__int128>(a.den_ / g) * b.den_;
    return from_wide(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(-b.num_, b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    i64 g1 = std::gcd(std::abs(a.num_), b.den_);
    i64 g2 = std::gcd(std::abs(b.num_), a.den_);
    __int128 n = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
    __int128 d = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
    return from_wide(n, d);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    require(b.num_ != 0, "Rational: division by zero");
    return a * Rational(b.den_, b.num_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.num_ << "/" << r.den_;
  }

 private:
  void reduce() {
    i64 g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }
  static Rational from_wide(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 an = n < 0 ? -n : n;
    __int128 g = gcd128(an, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
    kernel_check(n <= lim && -n <= lim && d <= lim, "Rational: overflow after reduction");
    Rational r;
    r.num_ = static_cast<i64>(n);
    r.den_ = static_cast<i64>(d);
    if (r.num_ == 0) r.den_ = 1;
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  i64 num_;
  i64 den_;
};

}  // namespace aplab
