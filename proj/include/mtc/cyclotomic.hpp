#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mtc/cyclotomic_field.hpp"
#include "mtc/errors.hpp"
#include "mtc/integer.hpp"
#include "mtc/rational.hpp"

namespace mtc {

namespace detail {
__extension__ using wide_int = __int128;
}  // namespace detail

/// Exact element of a cyclotomic field ℚ(ζ_n).
///
/// Stored on the power basis 1, ζ_n, …, ζ_n^{φ(n)−1} reduced modulo Φ_n, as
/// integer numerators over one positive common denominator in lowest terms.
/// The order n is the field the value is currently represented in, not
/// necessarily its conductor; binary operations embed both operands into
/// ℚ(ζ_lcm). Equality is value equality across orders.
class Cyclotomic {
 public:
  Cyclotomic() : num_(1) {}
  Cyclotomic(const Rational& q) : den_(q.den()), num_{q.num()} {}  // NOLINT(implicit)
  template <std::integral T>
  Cyclotomic(T v) : num_{Integer(v)} {}  // NOLINT(implicit)

  /// ζ_q^k. q = 0 is a domain error.
  static Cyclotomic root_of_unity(std::int64_t q, std::int64_t k) {
    if (q <= 0) throw DomainError("root_of_unity: order must be positive");
    const std::uint32_t n = checked_order(static_cast<std::uint64_t>(q));
    const auto& f = detail::field(n);
    std::vector<Integer> p(static_cast<std::size_t>(floor_mod(k, n)) + 1);
    p.back() = Integer(1);
    if (p.size() < f.degree) p.resize(f.degree);
    detail::reduce_mod_phi(p, f);
    return Cyclotomic(n, Integer(1), std::move(p));
  }

  /// Value with the given power-basis coefficients (exactly φ(order) of them).
  static Cyclotomic from_coefficients(std::uint32_t order, std::span<const Rational> coeffs) {
    const auto& f = detail::field(order);
    if (coeffs.size() != f.degree)
      throw DomainError("coefficient count must equal φ(" + std::to_string(order) + ")");
    Integer den(1);
    for (const auto& c : coeffs) den = lcm(den, c.den());
    std::vector<Integer> num(f.degree);
    for (std::size_t i = 0; i < coeffs.size(); ++i) num[i] = coeffs[i].num() * divexact(den, coeffs[i].den());
    return Cyclotomic(order, std::move(den), std::move(num));
  }

  /// Σ c·ζ_order^k over arbitrary integer exponents k.
  static Cyclotomic from_terms(std::uint32_t order, std::span<const std::pair<std::int64_t, Rational>> terms) {
    const auto& f = detail::field(checked_order(order));
    Integer den(1);
    for (const auto& [k, c] : terms) den = lcm(den, c.den());
    std::vector<Integer> p(std::max<std::size_t>(order, f.degree));
    for (const auto& [k, c] : terms)
      p[static_cast<std::size_t>(floor_mod(k, order))] += c.num() * divexact(den, c.den());
    detail::reduce_mod_phi(p, f);
    return Cyclotomic(order, std::move(den), std::move(p));
  }

  std::uint32_t order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return num_.size(); }
  const Integer& denominator() const noexcept { return den_; }
  const std::vector<Integer>& numerators() const noexcept { return num_; }
  Rational coefficient(std::size_t i) const { return Rational(num_.at(i), den_); }
  std::vector<Rational> coefficients() const {
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (const auto& c : num_) out.emplace_back(c, den_);
    return out;
  }

  bool is_zero() const noexcept {
    for (const auto& c : num_)
      if (!c.is_zero()) return false;
    return true;
  }
  bool is_rational() const noexcept {
    for (std::size_t i = 1; i < num_.size(); ++i)
      if (!num_[i].is_zero()) return false;
    return true;
  }
  std::optional<Rational> to_rational() const {
    if (!is_rational()) return std::nullopt;
    return Rational(num_[0], den_);
  }
  bool is_integer() const noexcept { return is_rational() && den_.is_one(); }

  std::complex<long double> to_complex() const {
    const long double d = den_.to_long_double();
    std::complex<long double> z = 0;
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (num_[i].is_zero()) continue;
      const long double ang = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(i) / order_;
      z += num_[i].to_long_double() / d * std::complex<long double>(std::cos(ang), std::sin(ang));
    }
    return z;
  }

  /// Same value represented in ℚ(ζ_N); N must be a multiple of order().
  Cyclotomic embed(std::uint32_t big) const {
    if (big == order_) return *this;
    if (big % order_ != 0) throw DomainError("embed: target order must be a multiple of the current order");
    const auto& f = detail::field(big);
    const std::uint32_t stride = big / order_;
    std::vector<Integer> p(std::max<std::size_t>((num_.size() - 1) * stride + 1, f.degree));
    for (std::size_t i = 0; i < num_.size(); ++i) p[i * stride] = num_[i];
    detail::reduce_mod_phi(p, f);
    return Cyclotomic(big, den_, std::move(p));
  }

  /// Galois automorphism ζ_n ↦ ζ_n^k of the field the value is stored in.
  Cyclotomic galois(std::int64_t k) const {
    const std::int64_t kk = floor_mod(k, order_);
    if (std::gcd(static_cast<std::uint64_t>(kk), static_cast<std::uint64_t>(order_)) != 1 && order_ != 1)
      throw DomainError("galois: exponent not coprime to the order");
    if (order_ <= 2) return *this;
    const auto& f = detail::field(order_);
    std::vector<Integer> p(order_);
    for (std::size_t i = 0; i < num_.size(); ++i)
      if (!num_[i].is_zero()) p[static_cast<std::size_t>((static_cast<std::int64_t>(i) * kk) % order_)] = num_[i];
    detail::reduce_mod_phi(p, f);
    return Cyclotomic(order_, den_, std::move(p));
  }

  /// Complex conjugate (the automorphism k = −1).
  Cyclotomic conj() const { return galois(-1); }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) { return combine(a, b, false); }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return combine(a, b, true); }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_zero() || b.is_zero()) return Cyclotomic();
    if (a.num_.size() == 1) return Cyclotomic(b.order_, a.den_ * b.den_, scaled(b.num_, a.num_[0]));
    if (b.num_.size() == 1) return Cyclotomic(a.order_, a.den_ * b.den_, scaled(a.num_, b.num_[0]));
    if (a.order_ != b.order_) {
      const auto n = checked_order(checked_lcm(a.order_, b.order_));
      return a.embed(n) * b.embed(n);
    }
    const auto& f = detail::field(a.order_);
    std::vector<Integer> p(a.num_.size() + b.num_.size() - 1);
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
      if (a.num_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.num_.size(); ++j)
        if (!b.num_[j].is_zero()) p[i + j].addmul(a.num_[i], b.num_[j]);
    }
    detail::reduce_mod_phi(p, f);
    return Cyclotomic(a.order_, a.den_ * b.den_, std::move(p));
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

  /// Product of the nontrivial Galois conjugates divided by the field norm,
  /// computed in the conductor field of the value.
  Cyclotomic inverse() const;

  Cyclotomic pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result(1), base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.den_ == b.den_ && a.num_ == b.num_;
    if (a.den_ != b.den_) return false;  // both normalized: equal values share the denominator
    const auto n = checked_order(checked_lcm(a.order_, b.order_));
    const Cyclotomic ea = a.embed(n), eb = b.embed(n);
    return ea.num_ == eb.num_;
  }

  /// Internal constructor from integer numerators; normalizes.
  Cyclotomic(std::uint32_t order, Integer den, std::vector<Integer> num)
      : order_(order), den_(std::move(den)), num_(std::move(num)) {
    normalize();
  }

 private:
  static std::vector<Integer> scaled(const std::vector<Integer>& v, const Integer& s) {
    std::vector<Integer> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) out[i] = v[i] * s;
    return out;
  }

  static Cyclotomic combine(const Cyclotomic& a, const Cyclotomic& b, bool subtract) {
    if (a.order_ != b.order_) {
      if (b.is_zero()) return a;
      if (a.is_zero()) return subtract ? -b : b;
      if (b.num_.size() == 1 || a.num_.size() == 1) {
        // a rational operand embeds for free: it only touches the constant term
        const bool a_rat = a.num_.size() == 1;
        const Cyclotomic& big = a_rat ? b : a;
        Cyclotomic small(big.order_, a_rat ? a.den_ : b.den_,
                         padded(a_rat ? a.num_ : b.num_, big.num_.size()));
        return a_rat ? combine(small, big, subtract) : combine(big, small, subtract);
      }
      const auto n = checked_order(checked_lcm(a.order_, b.order_));
      return combine(a.embed(n), b.embed(n), subtract);
    }
    std::vector<Integer> num(a.num_.size());
    if (a.den_ == b.den_) {
      for (std::size_t i = 0; i < num.size(); ++i) num[i] = subtract ? a.num_[i] - b.num_[i] : a.num_[i] + b.num_[i];
      return Cyclotomic(a.order_, a.den_, std::move(num));
    }
    const Integer l = lcm(a.den_, b.den_);
    const Integer sa = divexact(l, a.den_), sb = divexact(l, b.den_);
    for (std::size_t i = 0; i < num.size(); ++i) {
      num[i] = a.num_[i] * sa;
      if (subtract) num[i].submul(b.num_[i], sb);
      else num[i].addmul(b.num_[i], sb);
    }
    return Cyclotomic(a.order_, l, std::move(num));
  }

  static std::vector<Integer> padded(const std::vector<Integer>& v, std::size_t n) {
    std::vector<Integer> out(n);
    out[0] = v[0];
    return out;
  }

  void normalize() {
    if (order_ == 0) throw DomainError("cyclotomic order must be positive");
    bool zero = true;
    Integer g = den_;
    for (const auto& c : num_) {
      if (c.is_zero()) continue;
      zero = false;
      if (!g.is_one()) g = gcd(g, c);
    }
    if (zero) {
      den_ = Integer(1);
      return;
    }
    if (den_.sign() < 0) g = -g;
    if (!g.is_one()) {
      den_ = divexact(den_, g);
      for (auto& c : num_)
        if (!c.is_zero()) c = divexact(c, g);
    }
  }

  std::uint32_t order_ = 1;
  Integer den_{1};
  std::vector<Integer> num_;
};

// ---------------------------------------------------------------------------
// descent and conductor

/// The value represented in ℚ(ζ_m) if it lies there. m need not divide the
/// current order; both are embedded into ℚ(ζ_lcm) first.
inline std::optional<Cyclotomic> try_descend(const Cyclotomic& x, std::uint32_t m) {
  checked_order(m);
  if (x.order() == m) return x;
  if (x.is_rational()) return Cyclotomic(*x.to_rational());
  Cyclotomic src = x;
  if (src.order() % m != 0) src = src.embed(checked_order(checked_lcm(src.order(), m)));
  const auto& map = detail::DescentRegistry::instance().get(src.order(), m);
  const auto& fs = detail::field(m);
  std::vector<Integer> y(fs.degree);
  if (map.monomial) {
    const auto& nums = src.numerators();
    for (std::size_t i = 0; i < nums.size(); ++i) {
      if (nums[i].is_zero()) continue;
      if (i % map.stride != 0) return std::nullopt;
      y[i / map.stride] = nums[i];
    }
    return Cyclotomic(m, src.denominator(), std::move(y));
  }
  const auto& nums = src.numerators();
  std::vector<Rational> coeffs(fs.degree);
  for (std::size_t c = 0; c < fs.degree; ++c) {
    Rational acc;
    for (std::size_t r = 0; r < fs.degree; ++r) {
      const auto& v = nums[map.pivots[r]];
      if (!v.is_zero() && !map.inverse[c][r].is_zero()) acc += map.inverse[c][r] * Rational(v);
    }
    coeffs[c] = acc / Rational(src.denominator());
  }
  Cyclotomic cand = Cyclotomic::from_coefficients(m, coeffs);
  if (!(cand.embed(src.order()) == src)) return std::nullopt;
  return cand;
}

/// Same as try_descend but raises DescentError naming a witness coefficient.
inline Cyclotomic descend(const Cyclotomic& x, std::uint32_t m) {
  if (auto y = try_descend(x, m)) return *y;
  std::size_t witness = 0;
  const auto& nums = x.numerators();
  for (std::size_t i = 1; i < nums.size(); ++i)
    if (!nums[i].is_zero()) {
      witness = i;
      break;
    }
  throw DescentError("value of order " + std::to_string(x.order()) + " does not lie in Q(zeta_" +
                     std::to_string(m) + "); witness coefficient of zeta^" + std::to_string(witness) + " is " +
                     x.coefficient(witness).to_string());
}

/// Smallest m (never ≡ 2 mod 4) with x ∈ ℚ(ζ_m).
inline std::uint32_t conductor(const Cyclotomic& x) {
  if (x.is_rational()) return 1;
  std::uint32_t n = x.order();
  Cyclotomic cur = x;
  bool changed = true;
  while (changed && n > 1) {
    changed = false;
    for (auto p : prime_factors(n)) {
      if (auto y = try_descend(cur, n / p)) {
        cur = std::move(*y);
        n /= p;
        changed = true;
        break;
      }
    }
  }
  return n;
}

/// x represented at its conductor.
inline Cyclotomic minimal_form(const Cyclotomic& x) {
  const auto m = conductor(x);
  return m == x.order() ? x : *try_descend(x, m);
}

inline Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic");
  if (is_rational()) return Cyclotomic(to_rational()->inverse());
  const Cyclotomic x = minimal_form(*this);
  const auto& f = detail::field(x.order());
  Cyclotomic prod(1);
  for (auto k : f.units)
    if (k != 1) prod = prod * x.galois(k);
  const Cyclotomic norm = x * prod;
  const auto q = norm.to_rational();
  if (!q) throw ConsistencyError("field norm is not rational");
  return prod * Cyclotomic(q->inverse());
}

/// α_{k,m}(x): the automorphism ζ_m ↦ ζ_m^k applied to x ∈ ℚ(ζ_m).
inline Cyclotomic galois_apply(const Cyclotomic& x, std::int64_t k, std::uint32_t m) {
  if (m == 0) throw DomainError("galois_apply: m must be positive");
  if (std::gcd(static_cast<std::uint64_t>(floor_mod(k, m)), static_cast<std::uint64_t>(m)) != 1 && m != 1)
    throw DomainError("galois_apply: gcd(k, m) must be 1");
  return descend(x, m).galois(k);
}

// ---------------------------------------------------------------------------
// roots of unity

/// exp(2πi·exponent/order) with gcd(exponent, order) = 1 (or 1 = ζ_1^0).
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(std::int64_t order, std::int64_t exponent) {
    if (order <= 0) throw DomainError("root of unity order must be positive");
    std::int64_t e = floor_mod(exponent, order);
    std::int64_t g = std::gcd(e, order);
    if (e == 0) g = order;
    order_ = order / g;
    exponent_ = e / g;
  }

  std::int64_t order() const noexcept { return order_; }
  std::int64_t exponent() const noexcept { return exponent_; }
  bool is_one() const noexcept { return order_ == 1; }

  /// Fraction of a full turn, in [0, 1).
  Rational turns() const { return Rational(Integer(exponent_), Integer(order_)); }

  Cyclotomic value() const { return Cyclotomic::root_of_unity(order_, exponent_); }
  std::complex<long double> to_complex() const {
    const long double ang = 2.0L * std::numbers::pi_v<long double> * exponent_ / order_;
    return {std::cos(ang), std::sin(ang)};
  }

  RootOfUnity inverse() const { return RootOfUnity(order_, -exponent_); }
  RootOfUnity pow(std::int64_t e) const {
    // exponent_ * e may be large; reduce through 128-bit arithmetic
    const detail::wide_int v = static_cast<detail::wide_int>(exponent_) * e % order_;
    return RootOfUnity(order_, static_cast<std::int64_t>(v));
  }
  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    const auto l = static_cast<std::int64_t>(checked_lcm(static_cast<std::uint64_t>(a.order_),
                                                         static_cast<std::uint64_t>(b.order_)));
    return RootOfUnity(l, a.exponent_ * (l / a.order_) + b.exponent_ * (l / b.order_));
  }
  friend RootOfUnity operator/(const RootOfUnity& a, const RootOfUnity& b) { return a * b.inverse(); }

  /// The n-th root with argument in (−π/n, π/n], i.e. half-open principal branch.
  RootOfUnity principal_root(std::int64_t n) const {
    if (n <= 0) throw DomainError("principal_root: n must be positive");
    std::int64_t e = exponent_;
    if (2 * e > order_) e -= order_;  // argument in (−π, π]
    return RootOfUnity(order_ * n, e);
  }

  /// All n-th roots of this value: principal·ζ_n^j for j = 1, …, n.
  std::vector<RootOfUnity> nth_roots(std::int64_t n) const {
    const RootOfUnity base = principal_root(n);
    std::vector<RootOfUnity> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t j = 1; j <= n; ++j) out.push_back(base * RootOfUnity(n, j));
    return out;
  }

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend bool operator<(const RootOfUnity& a, const RootOfUnity& b) {
    return static_cast<detail::wide_int>(a.exponent_) * b.order_ < static_cast<detail::wide_int>(b.exponent_) * a.order_;
  }

 private:
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 0;
};

// ---------------------------------------------------------------------------
// recognition

struct Recognition {
  enum class Kind { zero, integer, rational, root_multiple, other };
  Kind kind = Kind::other;
  /// Exact value when rational.
  std::optional<Rational> rational;
  /// x = factor · root with factor > 0, when x is a nonzero rational multiple
  /// of a root of unity (rationals included, with root ±1).
  std::optional<Rational> factor;
  std::optional<RootOfUnity> root;
  std::complex<long double> approx;

  bool is_root_of_unity() const { return root.has_value() && factor == Rational(1); }
};

/// Classifies x. Roots of unity in ℚ(ζ_n) are ±ζ_n^k, so x is a rational
/// multiple of one iff x·ζ_L^{−j} is a positive rational for some j, L = lcm(2, n).
inline Recognition recognize(const Cyclotomic& x) {
  Recognition r;
  r.approx = x.to_complex();
  if (x.is_zero()) {
    r.kind = Recognition::Kind::zero;
    r.rational = Rational(0);
    return r;
  }
  if (auto q = x.to_rational()) {
    r.kind = q->is_integer() ? Recognition::Kind::integer : Recognition::Kind::rational;
    r.rational = q;
    r.factor = q->sign() > 0 ? *q : -*q;
    r.root = q->sign() > 0 ? RootOfUnity() : RootOfUnity(2, 1);
    return r;
  }
  const Cyclotomic m = minimal_form(x);
  const std::uint32_t n = m.order();
  const std::int64_t L = (n % 2 == 0) ? n : 2 * static_cast<std::int64_t>(n);
  const Cyclotomic lifted = m.embed(static_cast<std::uint32_t>(L));
  auto try_exponent = [&](std::int64_t j) {
    const Cyclotomic y = lifted * Cyclotomic::root_of_unity(L, -j);
    if (auto q = y.to_rational(); q && q->sign() > 0) {
      r.kind = Recognition::Kind::root_multiple;
      r.factor = *q;
      r.root = RootOfUnity(L, j);
      return true;
    }
    return false;
  };
  // the float argument pins the candidate; the exhaustive scan is a fallback
  // for values whose float evaluation is badly conditioned
  const long double turns = std::arg(r.approx) / (2.0L * std::numbers::pi_v<long double>);
  const auto guess = static_cast<std::int64_t>(std::llround(turns * L));
  for (std::int64_t d : {0, 1, -1})
    if (try_exponent(floor_mod(guess + d, L))) return r;
  for (std::int64_t j = 0; j < L; ++j)
    if (try_exponent(j)) return r;
  r.kind = Recognition::Kind::other;
  return r;
}

inline std::optional<RootOfUnity> as_root_of_unity(const Cyclotomic& x) {
  auto r = recognize(x);
  if (r.is_root_of_unity()) return r.root;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// canonical text: sums of q*E(n)^k at the conductor

inline std::string to_string(const Cyclotomic& x) {
  const Cyclotomic m = minimal_form(x);
  std::string out;
  const auto coeffs = m.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rational& c = coeffs[k];
    if (c.is_zero()) continue;
    std::string term;
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (k == 0) {
      term = mag.to_string();
    } else {
      std::string root = "E(" + std::to_string(m.order()) + ")";
      if (k > 1) root += "^" + std::to_string(k);
      term = mag == Rational(1) ? root : mag.to_string() + "*" + root;
    }
    if (out.empty()) out = neg ? "-" + term : term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

/// E(q)^k form of a root of unity ("1" for the identity).
inline std::string to_string(const RootOfUnity& z) {
  if (z.is_one()) return "1";
  std::string s = "E(" + std::to_string(z.order()) + ")";
  if (z.exponent() != 1) s += "^" + std::to_string(z.exponent());
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << to_string(x); }
inline std::ostream& operator<<(std::ostream& os, const RootOfUnity& z) { return os << to_string(z); }

}  // namespace mtc
