#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "mtc/errors.hpp"
#include "mtc/integer.hpp"

namespace mtc {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(Integer n) : num_(std::move(n)) {}  // NOLINT(implicit)
  template <std::integral T>
  Rational(T n) : num_(n) {}  // NOLINT(implicit)
  Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw DivisionByZero("rational with zero denominator");
    normalize();
  }

  /// Parses "p" or "p/q" (optional sign on p, q > 0).
  static Rational from_string(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Integer::from_string(text));
    return Rational(Integer::from_string(text.substr(0, slash)),
                    Integer::from_string(text.substr(slash + 1)));
  }

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_.is_one(); }
  int sign() const noexcept { return num_.sign(); }

  Rational inverse() const {
    if (num_.is_zero()) throw DivisionByZero("inverse of zero rational");
    return Rational(den_, num_);
  }

  long double to_long_double() const { return num_.to_long_double() / den_.to_long_double(); }

  std::string to_string() const {
    return den_.is_one() ? num_.to_string() : num_.to_string() + "/" + den_.to_string();
  }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

 private:
  void normalize() {
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (den_.is_one()) return;
    Integer g = gcd(num_, den_);
    if (!g.is_one() && !g.is_zero()) {
      num_ = divexact(num_, g);
      den_ = divexact(den_, g);
    }
    if (num_.is_zero()) den_ = Integer(1);
  }

  Integer num_{0};
  Integer den_{1};
};

}  // namespace mtc
