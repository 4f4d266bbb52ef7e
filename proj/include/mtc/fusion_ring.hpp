#pragma once

// Fusion rules from the Verlinde formula, tensor powers and hom dimensions.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mtc/cyclotomic.hpp"
#include "mtc/errors.hpp"
#include "mtc/matrix.hpp"
#include "mtc/modular_data.hpp"

namespace mtc {

/// Semisimple object ⊕ m_i x_i, stored densely over the simples.
class ObjectMultiset {
 public:
  ObjectMultiset() = default;
  explicit ObjectMultiset(std::size_t rank) : mult_(rank, 0) {}
  ObjectMultiset(std::size_t rank, std::size_t simple) : mult_(rank, 0) { mult_.at(simple) = 1; }
  explicit ObjectMultiset(std::vector<std::int64_t> mult) : mult_(std::move(mult)) {
    for (auto m : mult_)
      if (m < 0) throw DomainError("multiplicities must be non-negative");
  }

  std::size_t rank() const noexcept { return mult_.size(); }
  std::int64_t operator[](std::size_t i) const { return mult_.at(i); }
  std::int64_t& operator[](std::size_t i) { return mult_.at(i); }
  const std::vector<std::int64_t>& multiplicities() const noexcept { return mult_; }

  /// Nonzero (simple, multiplicity) pairs in index order.
  std::vector<std::pair<std::size_t, std::int64_t>> terms() const {
    std::vector<std::pair<std::size_t, std::int64_t>> out;
    for (std::size_t i = 0; i < mult_.size(); ++i)
      if (mult_[i] != 0) out.emplace_back(i, mult_[i]);
    return out;
  }

  std::int64_t total() const {
    std::int64_t t = 0;
    for (auto m : mult_) t += m;
    return t;
  }

  bool empty() const {
    for (auto m : mult_)
      if (m != 0) return false;
    return true;
  }

  friend ObjectMultiset operator+(ObjectMultiset a, const ObjectMultiset& b) {
    if (a.rank() != b.rank()) throw DimensionError("multiset ranks differ");
    for (std::size_t i = 0; i < a.rank(); ++i) a.mult_[i] += b.mult_[i];
    return a;
  }

  friend bool operator==(const ObjectMultiset&, const ObjectMultiset&) = default;

 private:
  std::vector<std::int64_t> mult_;
};

/// Renders "x1 ⊕ 2x2 ⊕ ..." using the given labels.
inline std::string to_string(const ObjectMultiset& m, const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& [i, k] : m.terms()) {
    if (!out.empty()) out += " ⊕ ";
    if (k != 1) out += std::to_string(k);
    out += labels.at(i);
  }
  return out.empty() ? "0" : out;
}

class FusionRing {
 public:
  FusionRing() = default;
  FusionRing(std::size_t rank, std::size_t unit, std::vector<std::size_t> dual, std::vector<std::int64_t> n)
      : rank_(rank), unit_(unit), dual_(std::move(dual)), n_(std::move(n)) {
    if (n_.size() != rank_ * rank_ * rank_) throw DimensionError("fusion tensor has the wrong size");
  }

  std::size_t rank() const noexcept { return rank_; }
  std::size_t unit() const noexcept { return unit_; }
  std::size_t dual(std::size_t a) const { return dual_.at(a); }
  const std::vector<std::size_t>& duals() const noexcept { return dual_; }

  /// N^c_{a,b}.
  std::int64_t N(std::size_t c, std::size_t a, std::size_t b) const { return n_[(c * rank_ + a) * rank_ + b]; }

  /// a ⊗ b.
  ObjectMultiset fuse(std::size_t a, std::size_t b) const {
    ObjectMultiset out(rank_);
    for (std::size_t c = 0; c < rank_; ++c) out[c] = N(c, a, b);
    return out;
  }

  /// x ⊗ b for a semisimple x.
  ObjectMultiset fuse(const ObjectMultiset& x, std::size_t b) const {
    ObjectMultiset out(rank_);
    for (const auto& [a, k] : x.terms())
      for (std::size_t c = 0; c < rank_; ++c) out[c] += k * N(c, a, b);
    return out;
  }

  /// x ⊗ y for semisimple x and y.
  ObjectMultiset fuse(const ObjectMultiset& x, const ObjectMultiset& y) const {
    ObjectMultiset out(rank_);
    for (const auto& [b, k] : y.terms()) {
      const auto part = fuse(x, b);
      for (std::size_t c = 0; c < rank_; ++c) out[c] += k * part[c];
    }
    return out;
  }

  /// Descriptions of every violated ring axiom; empty when all hold.
  std::vector<std::string> invariant_failures() const {
    std::vector<std::string> bad;
    const auto r = rank_;
    auto name = [](std::size_t i) { return std::to_string(i + 1); };
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        for (std::size_t c = 0; c < r; ++c) {
          if (N(c, a, b) < 0) bad.push_back("negative N^" + name(c) + "_{" + name(a) + "," + name(b) + "}");
          if (N(c, a, b) != N(dual(c), dual(b), dual(a)))
            bad.push_back("duality symmetry fails at (" + name(c) + "," + name(a) + "," + name(b) + ")");
        }
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t c = 0; c < r; ++c) {
        const std::int64_t delta = a == c;
        if (N(c, a, unit_) != delta || N(c, unit_, a) != delta)
          bad.push_back("unit law fails at (" + name(c) + "," + name(a) + ")");
        if (N(unit_, a, c) != (c == dual(a) ? 1 : 0)) bad.push_back("dual pairing fails at (" + name(a) + "," + name(c) + ")");
      }
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        for (std::size_t c = 0; c < r; ++c)
          for (std::size_t d = 0; d < r; ++d) {
            std::int64_t lhs = 0, rhs = 0;
            for (std::size_t e = 0; e < r; ++e) {
              lhs += N(d, a, e) * N(e, b, c);
              rhs += N(e, a, b) * N(d, e, c);
            }
            if (lhs != rhs) {
              bad.push_back("associativity fails at (" + name(a) + "," + name(b) + "," + name(c) + "," + name(d) + ")");
              return bad;
            }
          }
    return bad;
  }

 private:
  std::size_t rank_ = 0;
  std::size_t unit_ = 0;
  std::vector<std::size_t> dual_;
  std::vector<std::int64_t> n_;
};

/// N^a_{c,d} = Σ_e S_{c,e} S_{d,e} conj(S_{a,e}) / S_{unit,e}; every entry must
/// be a non-negative integer.
inline FusionRing verlinde(const ModularData& md) {
  const std::size_t r = md.rank();
  const auto u = md.unit();
  const std::uint32_t order = md.s_order();
  // W[a][e] = conj(S_{a,e}) / S_{u,e}
  std::vector<Cyclotomic> w(r * r);
  for (std::size_t e = 0; e < r; ++e) {
    if (md.S(u, e).is_zero()) throw IntegralityError("Verlinde formula: S(unit, " + md.label(e) + ") is zero");
    const Cyclotomic inv = md.S(u, e).inverse();
    for (std::size_t a = 0; a < r; ++a) {
      Cyclotomic v = md.S(a, e).conj() * inv;
      if (!v.is_rational() && v.order() != order) v = v.embed(checked_order(checked_lcm(order, v.order())));
      w[a * r + e] = std::move(v);
    }
  }
  const std::uint32_t worder = checked_order(checked_lcm(order, common_order(w)));
  for (auto& v : w)
    if (!v.is_rational() && v.order() != worder) v = v.embed(worder);
  std::vector<Cyclotomic> scd(r);
  std::vector<std::int64_t> n(r * r * r);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t d = c; d < r; ++d) {
      for (std::size_t e = 0; e < r; ++e) {
        Cyclotomic p = md.S(c, e) * md.S(d, e);
        if (!p.is_rational() && p.order() != worder) p = p.embed(worder);
        scd[e] = std::move(p);
      }
      for (std::size_t a = 0; a < r; ++a) {
        DotAccumulator acc(worder);
        for (std::size_t e = 0; e < r; ++e) acc.add_product(scd[e], w[a * r + e]);
        const Cyclotomic v = acc.result();
        const auto q = v.to_rational();
        if (!q || !q->is_integer() || q->sign() < 0)
          throw IntegralityError("Verlinde coefficient N^" + md.label(a) + "_{" + md.label(c) + "," + md.label(d) +
                                 "} = " + to_string(v) + " is not a non-negative integer");
        const auto k = q->num().to_int64();
        n[(a * r + c) * r + d] = k;
        n[(a * r + d) * r + c] = k;
      }
    }
  return FusionRing(r, u, md.dual(), std::move(n));
}

/// a^{⊗n} as a multiset; n = 0 gives the unit.
inline ObjectMultiset power_decompose(const FusionRing& fr, const ObjectMultiset& a, std::int64_t n) {
  if (n < 0) throw DomainError("tensor power must be non-negative");
  ObjectMultiset out(fr.rank(), fr.unit());
  for (std::int64_t i = 0; i < n; ++i) out = fr.fuse(out, a);
  return out;
}

inline ObjectMultiset power_decompose(const FusionRing& fr, std::size_t a, std::int64_t n) {
  return power_decompose(fr, ObjectMultiset(fr.rank(), a), n);
}

/// dim Hom(b, a^{⊗n}).
inline std::int64_t hom_dim(const FusionRing& fr, std::size_t b, const ObjectMultiset& a, std::int64_t n) {
  return power_decompose(fr, a, n)[b];
}

inline std::int64_t hom_dim(const FusionRing& fr, std::size_t b, std::size_t a, std::int64_t n) {
  return power_decompose(fr, a, n)[b];
}

}  // namespace mtc
