#pragma once

// Arbitrary-precision integer with an inline int64 fast path.
//
// Values that fit in int64 are stored inline; arithmetic on two inline values
// uses checked builtins and only promotes to GMP on overflow. Big values are
// demoted again as soon as they fit, so the inline path covers the common
// case of small cyclotomic coefficients.

#include <gmpxx.h>

#include <climits>
#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mtc/errors.hpp"

namespace mtc {

static_assert(sizeof(long) == 8, "Integer assumes an LP64 platform");

class Integer {
 public:
  Integer() noexcept = default;

  template <std::signed_integral T>
  Integer(T v) noexcept : small_(static_cast<std::int64_t>(v)) {}  // NOLINT(implicit)

  template <std::unsigned_integral T>
  Integer(T v) {  // NOLINT(implicit)
    if (static_cast<std::uint64_t>(v) <= static_cast<std::uint64_t>(INT64_MAX)) {
      small_ = static_cast<std::int64_t>(v);
    } else {
      big_ = std::make_unique<mpz_class>();
      mpz_set_ui(big_->get_mpz_t(), static_cast<unsigned long>(v));
    }
  }

  explicit Integer(const mpz_class& z) { assign(z); }

  Integer(const Integer& o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
  }
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& o) {
    if (this != &o) {
      small_ = o.small_;
      if (o.big_) {
        if (big_) *big_ = *o.big_;
        else big_ = std::make_unique<mpz_class>(*o.big_);
      } else {
        big_.reset();
      }
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;
  ~Integer() = default;

  static Integer from_string(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("integer literal has no digits");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + s);
    if (s[0] == '+') s.erase(0, 1);
    return Integer(mpz_class(s, 10));
  }

  bool is_small() const noexcept { return !big_; }
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }
  int sign() const noexcept {
    if (big_) return mpz_sgn(big_->get_mpz_t());
    return (small_ > 0) - (small_ < 0);
  }

  std::int64_t to_int64() const {
    if (big_) throw std::overflow_error("Integer does not fit in int64");
    return small_;
  }
  mpz_class to_mpz() const {
    if (big_) return *big_;
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), small_);
    return z;
  }
  long double to_long_double() const {
    if (!big_) return static_cast<long double>(small_);
    // mpz_get_d truncates to double precision; fine for display and checks.
    return static_cast<long double>(mpz_get_d(big_->get_mpz_t()));
  }
  std::string to_string() const { return big_ ? big_->get_str(10) : std::to_string(small_); }

  Integer operator-() const {
    if (!big_ && small_ != INT64_MIN) return Integer(-small_);
    return Integer(mpz_class(-to_mpz()));
  }

  Integer& operator+=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    mpz_class z = to_mpz();
    add_into(z, o);
    assign(z);
    return *this;
  }
  Integer& operator-=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    mpz_class z = to_mpz();
    if (o.big_) z -= *o.big_;
    else sub_si(z, o.small_);
    assign(z);
    return *this;
  }
  Integer& operator*=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    mpz_class z = to_mpz() * o.to_mpz();
    assign(z);
    return *this;
  }

  /// *this += a * b
  void addmul(const Integer& a, const Integer& b) {
    std::int64_t p, r;
    if (!big_ && !a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &p) &&
        !__builtin_add_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
    mpz_class z = to_mpz();
    mpz_addmul(z.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    assign(z);
  }
  /// *this -= a * b
  void submul(const Integer& a, const Integer& b) {
    std::int64_t p, r;
    if (!big_ && !a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &p) &&
        !__builtin_sub_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
    mpz_class z = to_mpz();
    mpz_submul(z.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    assign(z);
  }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  /// Truncating quotient.
  friend Integer operator/(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw DivisionByZero("integer division by zero");
    if (!a.big_ && !b.big_ && !(a.small_ == INT64_MIN && b.small_ == -1))
      return Integer(a.small_ / b.small_);
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
  }
  /// Truncating remainder (sign follows the dividend).
  friend Integer operator%(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw DivisionByZero("integer division by zero");
    if (!a.big_ && !b.big_) {
      if (b.small_ == -1) return Integer(0);
      return Integer(a.small_ % b.small_);
    }
    mpz_class r;
    mpz_tdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(r);
  }

  /// Exact division; b must divide a.
  friend Integer divexact(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_ && b.small_ != 0 && !(a.small_ == INT64_MIN && b.small_ == -1))
      return Integer(a.small_ / b.small_);
    if (b.is_zero()) throw DivisionByZero("integer division by zero");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
  }

  friend Integer gcd(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_ && a.small_ != INT64_MIN && b.small_ != INT64_MIN)
      return Integer(std::gcd(a.small_, b.small_));
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(g);
  }
  friend Integer lcm(const Integer& a, const Integer& b) {
    if (a.is_zero() || b.is_zero()) return Integer(0);
    Integer g = gcd(a, b);
    return abs(divexact(a, g) * b);
  }
  friend Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

  friend bool operator==(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // normalized: a big value never fits in int64
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    int c = mpz_cmp(a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

 private:
  void assign(const mpz_class& z) {
    if (mpz_fits_slong_p(z.get_mpz_t())) {
      small_ = mpz_get_si(z.get_mpz_t());
      big_.reset();
    } else if (big_) {
      *big_ = z;
    } else {
      big_ = std::make_unique<mpz_class>(z);
    }
  }
  static void add_into(mpz_class& z, const Integer& o) {
    if (o.big_) {
      z += *o.big_;
    } else if (o.small_ >= 0) {
      mpz_add_ui(z.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(o.small_));
    } else {
      sub_si(z, -(o.small_ + 1));
      mpz_sub_ui(z.get_mpz_t(), z.get_mpz_t(), 1);
    }
  }
  static void sub_si(mpz_class& z, std::int64_t v) {
    if (v >= 0) {
      mpz_sub_ui(z.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(v));
    } else {
      // -(v+1) is representable for every negative v
      mpz_add_ui(z.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(-(v + 1)));
      mpz_add_ui(z.get_mpz_t(), z.get_mpz_t(), 1);
    }
  }

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

}  // namespace mtc
