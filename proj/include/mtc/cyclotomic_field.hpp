#pragma once

// Per-order field data for ℚ(ζ_n): the cyclotomic polynomial Φ_n, reduction
// of integer polynomials modulo Φ_n, and cached descent maps ℚ(ζ_N) → ℚ(ζ_m).
// All tables are memoized process-wide behind a shared mutex and never freed,
// so references handed out stay valid.

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "mtc/errors.hpp"
#include "mtc/integer.hpp"
#include "mtc/rational.hpp"

namespace mtc {

inline constexpr std::uint32_t kDefaultOrderCap = 10000;

namespace detail {
inline std::atomic<std::uint32_t>& order_cap_storage() {
  static std::atomic<std::uint32_t> cap = [] {
    if (const char* env = std::getenv("MTC_ORDER_CAP")) {
      char* end = nullptr;
      unsigned long v = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && v > 0 && v <= 1000000) return static_cast<std::uint32_t>(v);
    }
    return kDefaultOrderCap;
  }();
  return cap;
}
}  // namespace detail

/// Largest cyclotomic order the library will construct. Defaults to 10000 and
/// may be overridden with the MTC_ORDER_CAP environment variable.
inline std::uint32_t order_cap() { return detail::order_cap_storage().load(std::memory_order_relaxed); }
inline void set_order_cap(std::uint32_t cap) { detail::order_cap_storage().store(cap); }

// ---------------------------------------------------------------------------
// elementary number theory on machine integers

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = std::gcd(a, b);
  std::uint64_t r;
  if (__builtin_mul_overflow(a / g, b, &r)) throw OrderCapExceeded("order lcm overflows");
  return r;
}

inline std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> ps;
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t r = n;
  for (auto p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

inline int mobius(std::uint32_t n) {
  int mu = 1;
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

/// Checks an order against the cap and narrows it.
inline std::uint32_t checked_order(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclotomic order must be positive");
  if (n > order_cap())
    throw OrderCapExceeded("cyclotomic order " + std::to_string(n) + " exceeds cap " +
                           std::to_string(order_cap()));
  return static_cast<std::uint32_t>(n);
}

namespace detail {

struct FieldInfo {
  std::uint32_t order = 1;
  std::uint32_t degree = 1;
  std::vector<std::int64_t> phi;                               // Φ_n, low degree first, monic
  std::vector<std::pair<std::uint32_t, std::int64_t>> tail;    // nonzero Φ_n[j], j < degree
  std::vector<std::uint32_t> units;                            // (ℤ/n)^×, ascending
};

/// Φ_n = Π_{d | n} (x^d − 1)^{μ(n/d)}: multiply the μ = +1 factors first,
/// then divide out the μ = −1 factors exactly.
inline std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n) {
  std::vector<std::int64_t> p{1};
  std::vector<std::uint32_t> divide;
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = mobius(n / d);
    if (mu == 1) {
      std::vector<std::int64_t> q(p.size() + d, 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (__builtin_add_overflow(q[i + d], p[i], &q[i + d]) ||
            __builtin_sub_overflow(q[i], p[i], &q[i]))
          throw OrderCapExceeded("cyclotomic polynomial coefficients overflow");
      }
      p = std::move(q);
    } else if (mu == -1) {
      divide.push_back(d);
    }
  }
  for (auto d : divide) {
    // p = (x^d - 1) q  =>  q[i] = q[i+d] - p[i+d]... solved from the top down
    std::size_t deg = p.size() - 1;
    std::vector<std::int64_t> q(deg - d + 1, 0);
    std::vector<std::int64_t> rem = p;
    for (std::size_t i = deg; i + 1 > d; --i) {
      std::int64_t c = rem[i];
      q[i - d] = c;
      rem[i] -= c;
      rem[i - d] += c;
      if (i == d) break;
    }
    p = std::move(q);
  }
  // with an even number of (x^d - 1) factors removed the sign may be -1
  if (p.back() < 0)
    for (auto& c : p) c = -c;
  return p;
}

class FieldRegistry {
 public:
  static FieldRegistry& instance() {
    static FieldRegistry reg;
    return reg;
  }

  const FieldInfo& get(std::uint32_t n) {
    {
      std::shared_lock lock(mutex_);
      auto it = fields_.find(n);
      if (it != fields_.end()) return *it->second;
    }
    auto info = std::make_unique<FieldInfo>();
    info->order = n;
    info->phi = cyclotomic_polynomial(n);
    info->degree = static_cast<std::uint32_t>(info->phi.size() - 1);
    for (std::uint32_t j = 0; j < info->degree; ++j)
      if (info->phi[j] != 0) info->tail.emplace_back(j, info->phi[j]);
    for (std::uint32_t k = 0; k < n; ++k)
      if (std::gcd(k, n) == 1) info->units.push_back(k);
    if (n == 1) info->units = {0};
    std::unique_lock lock(mutex_);
    auto [it, inserted] = fields_.emplace(n, std::move(info));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::uint32_t, std::unique_ptr<FieldInfo>> fields_;
};

inline const FieldInfo& field(std::uint32_t n) { return FieldRegistry::instance().get(checked_order(n)); }

/// Reduces an integer polynomial (low degree first) modulo Φ_n in place and
/// truncates it to φ(n) coefficients.
inline void reduce_mod_phi(std::vector<Integer>& poly, const FieldInfo& f) {
  const std::size_t deg = f.degree;
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (poly[i].is_zero()) continue;
    const Integer c = poly[i];
    for (const auto& [j, a] : f.tail) poly[i - deg + j].submul(c, Integer(a));
  }
  poly.resize(deg);
}

/// Cached data for recovering y ∈ ℚ(ζ_m) from its image in ℚ(ζ_N).
struct DescentMap {
  std::uint32_t from = 1;   // N
  std::uint32_t to = 1;     // m
  std::uint32_t stride = 1; // N / m
  bool monomial = false;    // embedding sends the power basis to basis monomials
  std::vector<std::uint32_t> pivots;           // rows of the embedding used to solve
  std::vector<std::vector<Rational>> inverse;  // (E restricted to pivots)^{-1}
};

class DescentRegistry {
 public:
  static DescentRegistry& instance() {
    static DescentRegistry reg;
    return reg;
  }

  const DescentMap& get(std::uint32_t big, std::uint32_t small) {
    const auto key = std::make_pair(big, small);
    {
      std::shared_lock lock(mutex_);
      auto it = maps_.find(key);
      if (it != maps_.end()) return *it->second;
    }
    auto map = build(big, small);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = maps_.emplace(key, std::move(map));
    return *it->second;
  }

 private:
  static std::unique_ptr<DescentMap> build(std::uint32_t big, std::uint32_t small) {
    auto map = std::make_unique<DescentMap>();
    map->from = big;
    map->to = small;
    map->stride = big / small;
    const FieldInfo& fb = field(big);
    const FieldInfo& fs = field(small);
    if (fb.degree == map->stride * fs.degree) {
      // rad(N/m) | m: ζ_m^j = ζ_N^{j·stride} with j·stride < φ(N)
      map->monomial = true;
      return map;
    }
    // column j of E is ζ_N^{j·stride} reduced modulo Φ_N
    const std::size_t rows = fb.degree, cols = fs.degree;
    std::vector<std::vector<Rational>> e(rows, std::vector<Rational>(cols));
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<Integer> p(j * map->stride + 1);
      p.back() = Integer(1);
      reduce_mod_phi(p, fb);
      for (std::size_t i = 0; i < rows; ++i) e[i][j] = Rational(p[i]);
    }
    // pick independent rows greedily by elimination on a working copy
    std::vector<std::vector<Rational>> work;
    for (std::size_t i = 0; i < rows && map->pivots.size() < cols; ++i) {
      std::vector<Rational> v = e[i];
      for (const auto& w : work) {
        std::size_t lead = 0;
        while (w[lead].is_zero()) ++lead;
        if (!v[lead].is_zero()) {
          Rational f = v[lead] / w[lead];
          for (std::size_t c = 0; c < cols; ++c) v[c] -= f * w[c];
        }
      }
      bool nonzero = false;
      for (const auto& c : v) nonzero = nonzero || !c.is_zero();
      if (nonzero) {
        work.push_back(std::move(v));
        map->pivots.push_back(static_cast<std::uint32_t>(i));
      }
    }
    if (map->pivots.size() != cols) throw ConsistencyError("embedding matrix is rank deficient");
    // invert E_P by Gauss–Jordan
    std::vector<std::vector<Rational>> a(cols), inv(cols, std::vector<Rational>(cols));
    for (std::size_t r = 0; r < cols; ++r) {
      a[r] = e[map->pivots[r]];
      inv[r][r] = Rational(1);
    }
    for (std::size_t c = 0; c < cols; ++c) {
      std::size_t piv = c;
      while (a[piv][c].is_zero()) ++piv;
      std::swap(a[piv], a[c]);
      std::swap(inv[piv], inv[c]);
      Rational s = a[c][c].inverse();
      for (std::size_t k = 0; k < cols; ++k) {
        a[c][k] *= s;
        inv[c][k] *= s;
      }
      for (std::size_t r = 0; r < cols; ++r) {
        if (r == c || a[r][c].is_zero()) continue;
        Rational f = a[r][c];
        for (std::size_t k = 0; k < cols; ++k) {
          a[r][k] -= f * a[c][k];
          inv[r][k] -= f * inv[c][k];
        }
      }
    }
    map->inverse = std::move(inv);
    return map;
  }

  std::shared_mutex mutex_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<DescentMap>> maps_;
};

}  // namespace detail
}  // namespace mtc
