#pragma once

// Generalized Frobenius–Schur indicators ν^b_{m,l}(a) of a center Z = C ⊠ C̃,
// via the SL₂(ℤ) action 𝒱_{m,l} = π(g)A and via Galois automorphisms.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "mtc/center.hpp"
#include "mtc/cyclotomic.hpp"
#include "mtc/errors.hpp"
#include "mtc/fusion_ring.hpp"
#include "mtc/matrix.hpp"
#include "mtc/modular_data.hpp"

namespace mtc {

using Mat2 = std::array<std::array<std::int64_t, 2>, 2>;

inline Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
  Mat2 z{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return z;
}

/// Word in 𝔰 ('s'), 𝔱 ('t') and 𝔱⁻¹ ('u').
struct Sl2Word {
  std::string tokens;
  std::int64_t m = 1, l = 0;

  static Mat2 generator(char c) {
    switch (c) {
      case 's': return {{{0, -1}, {1, 0}}};
      case 't': return {{{1, 1}, {0, 1}}};
      case 'u': return {{{1, -1}, {0, 1}}};
      default: throw DomainError(std::string("unknown SL2 token '") + c + "'");
    }
  }

  /// g as a product of integer matrices, left to right.
  Mat2 matrix() const {
    Mat2 g{{{1, 0}, {0, 1}}};
    for (char c : tokens) g = mat2_mul(g, generator(c));
    return g;
  }

  /// (1,0)·g⁻¹ = (m,l) and det g = 1.
  bool verify() const {
    const Mat2 g = matrix();
    if (g[0][0] * g[1][1] - g[0][1] * g[1][0] != 1) return false;
    // (m,l)·g = (1,0) is equivalent and avoids the inverse
    return m * g[0][0] + l * g[1][0] == 1 && m * g[0][1] + l * g[1][1] == 0;
  }
};

/// A word g with (1,0)·g⁻¹ = (m,l), built by Euclid: (m,l) is driven to (1,0)
/// by right multiplication, (x,y)·𝔰 = (y,−x) and (x,y)·𝔱^k = (x,y+kx).
inline Sl2Word sl2_word(std::int64_t m, std::int64_t l) {
  if (std::gcd(m, l) != 1) throw DomainError("sl2_word: gcd(m, l) must be 1");
  Sl2Word w;
  w.m = m;
  w.l = l;
  std::int64_t x = m, y = l;
  while (!(x == 1 && y == 0)) {
    if (x == 0 || (y == 0 && x == -1)) {
      w.tokens += 's';
      const std::int64_t nx = y, ny = -x;
      x = nx;
      y = ny;
    } else if (y != 0 && std::abs(y) >= std::abs(x)) {
      const std::int64_t k = -(y / x);
      w.tokens.append(static_cast<std::size_t>(std::abs(k)), k > 0 ? 't' : 'u');
      y += k * x;
    } else if (y == 0) {
      break;  // x = ±1 handled above; unreachable for gcd 1
    } else {
      w.tokens += 's';
      const std::int64_t nx = y, ny = -x;
      x = nx;
      y = ny;
    }
  }
  if (!w.verify()) throw ConsistencyError("sl2_word produced a word that fails verification");
  return w;
}

struct IndicatorTable {
  std::int64_t m = 1, l = 0;
  CycloMatrix values;  // [(c,b)][a] = ν^{c⊠b̃}_{m,l}(a)
};

namespace detail {

inline CycloMatrix forgetful_matrix(const CenterData& cd) {
  CycloMatrix a(cd.rank(), cd.base_rank());
  for (std::size_t i = 0; i < cd.rank(); ++i)
    for (std::size_t c = 0; c < cd.base_rank(); ++c) a(i, c) = Cyclotomic(cd.A[i][c]);
  return a;
}

}  // namespace detail

/// 𝒱_{m,l} = π(g)·A with π(𝔰) = S_Z, π(𝔱) = T_Z, π(𝔱⁻¹) = conj(T_Z).
inline IndicatorTable gfs_matrix(const CenterData& cd, std::int64_t m, std::int64_t l) {
  const auto xi = as_root_of_unity(central_charge_value(cd.md));
  if (!xi || !xi->is_one())
    throw UnsupportedInput("indicator matrices need a center with central charge 1");
  const Sl2Word w = sl2_word(m, l);
  CycloMatrix x = detail::forgetful_matrix(cd);
  const auto t = cd.md.theta_values();
  std::vector<Cyclotomic> tinv;
  for (const auto& z : cd.md.theta()) tinv.push_back(z.inverse().value());
  for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
    switch (*it) {
      case 's': x = apply_center_S(cd, x); break;
      case 't': x = x.scale_rows(t); break;
      case 'u': x = x.scale_rows(tinv); break;
      default: break;
    }
  }
  return IndicatorTable{m, l, std::move(x)};
}

/// ν^{c⊠b̃}_{2,1}(a) = Σ_{d,e} (θ_d/θ_e)² S_{c,d} S_{b̄,e} N^a_{d,e}.
inline Cyclotomic nu2_direct(const ModularData& md, const FusionRing& fr, std::size_t c, std::size_t b,
                             std::size_t a) {
  Cyclotomic acc;
  const std::size_t bd = md.dual(b);
  for (std::size_t d = 0; d < md.rank(); ++d)
    for (std::size_t e = 0; e < md.rank(); ++e) {
      const auto n = fr.N(a, d, e);
      if (n == 0) continue;
      acc += Cyclotomic(n) * (md.theta(d) / md.theta(e)).pow(2).value() * md.S(c, d) * md.S(bd, e);
    }
  return acc;
}

/// All ν^{c⊠b̃}_{2,1}(a) for fixed a, as the matrix [c][b] = (S·W_a·S̃ᵀ)[c][b]
/// with W_a[d][e] = (θ_d/θ_e)² N^a_{d,e}.
inline CycloMatrix nu2_matrix(const ModularData& md, const FusionRing& fr, std::size_t a) {
  const std::size_t r = md.rank();
  CycloMatrix w(r, r);
  for (std::size_t d = 0; d < r; ++d)
    for (std::size_t e = 0; e < r; ++e) {
      const auto n = fr.N(a, d, e);
      if (n != 0) w(d, e) = Cyclotomic(n) * (md.theta(d) / md.theta(e)).pow(2).value();
    }
  CycloMatrix sr(r, r);
  for (std::size_t b = 0; b < r; ++b)
    for (std::size_t e = 0; e < r; ++e) sr(b, e) = md.S(md.dual(b), e);
  return md.S() * w * sr.transpose();
}

/// Evaluates ν^b_{n,k}(a) on a center Z through the Galois route
///   ν^b_{n,k}(a) = θ_b^{−k/n} α_{k/g,n/g}(θ_b^{g/n} ν^b_{n/g,1}(a^g)),  g = gcd(k,n),
/// with θ_b^{1/n} := ζ_{M'n}^{t + shift·M'} for θ_b = ζ_{M'}^t in lowest terms.
/// ν^b_{n,0}(a) is dim Hom(b, a^{⊗n}) computed through A. Tables 𝒱_{n',1} are
/// built on first use and cached; the cache is guarded for concurrent callers.
class IndicatorEngine {
 public:
  explicit IndicatorEngine(const CenterData& cd, std::int64_t root_shift = 0) : cd_(&cd), shift_(root_shift) {}

  const CenterData& center() const noexcept { return *cd_; }
  std::int64_t root_shift() const noexcept { return shift_; }

  const IndicatorTable& table(std::int64_t m, std::int64_t l) {
    const auto key = std::make_pair(m, l);
    {
      std::lock_guard lock(mutex_);
      auto it = tables_.find(key);
      if (it != tables_.end()) return it->second;
    }
    IndicatorTable t = gfs_matrix(*cd_, m, l);
    std::lock_guard lock(mutex_);
    return tables_.emplace(key, std::move(t)).first->second;
  }

  /// θ_b^{1/n} under the engine's root convention.
  RootOfUnity theta_root(std::size_t b, std::int64_t n) const {
    const RootOfUnity& t = cd_->md.theta(b);
    return RootOfUnity(t.order() * n, t.exponent() + shift_ * t.order());
  }

  /// dim Hom(b, a^{⊗n}) for a center simple b and a base multiset a.
  std::int64_t hom(std::size_t b, const ObjectMultiset& a, std::int64_t n) const {
    const auto p = power_decompose(cd_->base_fusion, a, n);
    std::int64_t s = 0;
    for (const auto& [x, k] : p.terms()) s += k * cd_->A[b][x];
    return s;
  }

  /// ν^b_{m,1}(x) for a base multiset x, by additivity over table rows.
  Cyclotomic nu_primitive(std::size_t b, std::int64_t m, const ObjectMultiset& x) {
    const auto& t = table(m, 1);
    Cyclotomic acc;
    for (const auto& [i, k] : x.terms()) acc += Cyclotomic(k) * t.values(b, i);
    return acc;
  }

  Cyclotomic nu(std::size_t b, std::int64_t n, std::int64_t k, const ObjectMultiset& a) {
    if (n <= 0) throw DomainError("indicator degree n must be positive");
    if (k == 0) return Cyclotomic(hom(b, a, n));
    const std::int64_t g = std::gcd(k, n);
    const std::int64_t ng = n / g, kg = k / g;
    const ObjectMultiset ag = power_decompose(cd_->base_fusion, a, g);
    const RootOfUnity root = theta_root(b, n);
    const Cyclotomic inner = root.pow(g).value() * nu_primitive(b, ng, ag);
    const Cyclotomic moved = galois_apply(inner, kg, static_cast<std::uint32_t>(ng));
    return root.pow(-k).value() * moved;
  }

 private:
  const CenterData* cd_;
  std::int64_t shift_;
  std::mutex mutex_;
  std::map<std::pair<std::int64_t, std::int64_t>, IndicatorTable> tables_;
};

/// Single-shot ν^b_{n,k}(a); see IndicatorEngine.
inline Cyclotomic nu_general(const CenterData& cd, std::size_t b, std::int64_t n, std::int64_t k,
                             const ObjectMultiset& a, std::int64_t root_shift = 0) {
  IndicatorEngine engine(cd, root_shift);
  return engine.nu(b, n, k, a);
}

}  // namespace mtc
