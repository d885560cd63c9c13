#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "sysfill/errors.hpp"

namespace sysfill {

// Exact rational with 64-bit numerator/denominator, always in canonical form
// (gcd = 1, positive denominator).  Products and sums pass through __int128
// before reducing, so anything that fits back into 64 bits is computed
// exactly; overflow on narrowing throws instead of wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(long long num) : num_(num), den_(1) {}  // NOLINT: implicit by design
  Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    canonicalize_small();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  long long as_integer() const {
    if (den_ != 1) throw DomainError("rational " + str() + " is not an integer");
    return num_;
  }

  double as_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return make(i128(x.num_) * y.den_ + i128(y.num_) * x.den_, i128(x.den_) * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return make(i128(x.num_) * y.den_ - i128(y.num_) * x.den_, i128(x.den_) * y.den_);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return make(i128(x.num_) * y.num_, i128(x.den_) * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw DomainError("rational division by zero");
    return make(i128(x.num_) * y.den_, i128(x.den_) * y.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend bool operator<(const Rational& x, const Rational& y) {
    return i128(x.num_) * y.den_ < i128(y.num_) * x.den_;
  }
  friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

 private:
  using i128 = __int128;

  static Rational make(i128 num, i128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
    if (num < lo || num > hi || den > hi) throw NumericError("rational overflow");
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void canonicalize_small() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace sysfill
