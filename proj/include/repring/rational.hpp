#pragma once

#include <compare>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>

#include "repring/errors.hpp"

namespace repring {

using Int = long long;

// Exact rational arithmetic on 64-bit numerator/denominator. The denominator
// stays positive and fractions reduced, so value equality is field equality.
// Intermediates go through 128-bit; the data handled here (torus exponents,
// Cartan inverses, Freudenthal sums) never comes close to the 64-bit range,
// but the reduction asserts it anyway.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(Int n) : num_(n) {}
  Rational(Int n, Int d) { assign(n, d); }

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_,
                Wide(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_,
                Wide(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("division by zero rational");
    return make(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Wide lhs = Wide(a.num_) * b.den_;
    Wide rhs = Wide(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Representative of the class mod Z lying in [0, 1).
  Rational mod1() const {
    Int n = num_ % den_;
    if (n < 0) n += den_;
    Rational r;
    r.num_ = n;
    r.den_ = den_;
    return r;  // already reduced: gcd(n, den) == gcd(num, den) == 1
  }

  Int floor() const {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  using Wide = __int128;

  static Rational make(Wide n, Wide d) {
    Rational r;
    r.assign_wide(n, d);
    return r;
  }

  void assign(Int n, Int d) { assign_wide(n, d); }

  void assign_wide(Wide n, Wide d) {
    if (d == 0) throw DomainError("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Wide g = wide_gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr Wide kMax = 0x7fffffffffffffffLL;
    if (n > kMax || n < -kMax || d > kMax)
      throw InternalError("rational out of 64-bit range");
    num_ = static_cast<Int>(n);
    den_ = static_cast<Int>(d);
  }

  static Wide wide_gcd(Wide a, Wide b) {
    while (b != 0) {
      Wide t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  Int num_ = 0;
  Int den_ = 1;
};

// "p/q" or "p". Used by the CLI for torus exponents.
Rational parse_rational(const std::string& text);

struct RationalHash {
  std::size_t operator()(const Rational& r) const {
    std::size_t h = std::hash<Int>()(r.num());
    h ^= std::hash<Int>()(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace repring
