#pragma once

// Modular data (S, T) of a modular category: construction with unit and dual
// detection, validation of the modular relations, derived invariants, and the
// reversed category.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtc/cyclotomic.hpp"
#include "mtc/errors.hpp"
#include "mtc/matrix.hpp"

namespace mtc {

class ModularData {
 public:
  ModularData() = default;

  /// Builds modular data from the normalized S matrix and the twists. The unit
  /// is the unique index with θ = 1 whose S row is real and positive, unless
  /// `unit` forces one. Duals are read off S²; when S² is not a permutation
  /// matrix they fall back to matching conj(S) columns so that validate() can
  /// still report what is wrong.
  static ModularData construct(std::vector<std::string> labels, CycloMatrix s, const std::vector<Cyclotomic>& theta,
                               std::optional<std::size_t> unit = std::nullopt) {
    const std::size_t r = labels.size();
    if (r == 0) throw DimensionError("rank must be positive");
    if (s.rows() != r || s.cols() != r)
      throw DimensionError("S must be " + std::to_string(r) + "x" + std::to_string(r));
    if (theta.size() != r) throw DimensionError("T must have " + std::to_string(r) + " entries");
    std::vector<RootOfUnity> twists;
    twists.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
      auto z = as_root_of_unity(theta[i]);
      if (!z) throw ConstructionError("twist of " + labels[i] + " is not a root of unity: " + to_string(theta[i]));
      twists.push_back(*z);
    }
    return from_parts(std::move(labels), std::move(s), std::move(twists), unit, std::nullopt);
  }

  /// Lower-level constructor used when the dual permutation is already known.
  static ModularData from_parts(std::vector<std::string> labels, CycloMatrix s, std::vector<RootOfUnity> theta,
                                std::optional<std::size_t> unit, std::optional<std::vector<std::size_t>> dual) {
    ModularData md;
    const std::size_t r = labels.size();
    if (s.rows() != r || s.cols() != r || theta.size() != r) throw DimensionError("inconsistent modular data shape");
    md.labels_ = std::move(labels);
    md.theta_ = std::move(theta);
    md.order_ = s.common_order();
    md.s_ = s.embedded(md.order_);
    md.unit_ = unit ? *unit : md.detect_unit();
    if (md.unit_ >= r) throw ConstructionError("unit index out of range");
    md.dual_ = dual ? std::move(*dual) : md.detect_dual();
    return md;
  }

  std::size_t rank() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const CycloMatrix& S() const noexcept { return s_; }
  const Cyclotomic& S(std::size_t i, std::size_t j) const { return s_(i, j); }
  const std::vector<RootOfUnity>& theta() const noexcept { return theta_; }
  const RootOfUnity& theta(std::size_t i) const { return theta_.at(i); }
  std::size_t unit() const noexcept { return unit_; }
  const std::vector<std::size_t>& dual() const noexcept { return dual_; }
  std::size_t dual(std::size_t i) const { return dual_.at(i); }
  /// Order of the field holding every S entry.
  std::uint32_t s_order() const noexcept { return order_; }

  std::vector<Cyclotomic> theta_values() const {
    std::vector<Cyclotomic> out;
    out.reserve(theta_.size());
    for (const auto& t : theta_) out.push_back(t.value());
    return out;
  }

  /// Resolves a label, or a 1-based index written in decimal.
  std::size_t index_of(const std::string& key) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == key) return i;
    if (!key.empty() && key.find_first_not_of("0123456789") == std::string::npos) {
      const auto v = std::stoull(key);
      if (v >= 1 && v <= labels_.size()) return static_cast<std::size_t>(v - 1);
    }
    throw DomainError("unknown object '" + key + "'");
  }

  friend bool operator==(const ModularData& a, const ModularData& b) {
    return a.labels_ == b.labels_ && a.theta_ == b.theta_ && a.unit_ == b.unit_ && a.dual_ == b.dual_ &&
           a.s_ == b.s_;
  }

 private:
  static bool real_positive(const Cyclotomic& x) {
    if (x.is_zero() || !(x == x.conj())) return false;
    return x.to_complex().real() > 0;
  }

  std::size_t detect_unit() const {
    std::vector<std::size_t> found;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (!theta_[i].is_one()) continue;
      bool ok = true;
      for (std::size_t j = 0; j < rank() && ok; ++j) ok = real_positive(s_(i, j));
      if (ok) found.push_back(i);
    }
    if (found.empty()) throw ConstructionError("no unit candidate: no object has twist 1 and a positive real S row");
    if (found.size() > 1)
      throw ConstructionError("multiple unit candidates (" + labels_[found[0]] + ", " + labels_[found[1]] +
                              "); pass the unit explicitly");
    return found[0];
  }

  std::vector<std::size_t> detect_dual() const {
    const std::size_t r = rank();
    const CycloMatrix s2 = s_ * s_;
    std::vector<std::size_t> dual(r, r);
    bool permutation = true;
    for (std::size_t i = 0; i < r && permutation; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        const auto& x = s2(i, j);
        if (x.is_zero()) continue;
        if (x == Cyclotomic(1) && dual[i] == r) dual[i] = j;
        else permutation = false;
      }
      permutation = permutation && dual[i] != r;
    }
    if (permutation) return dual;
    // S_{ā,b} = conj(S_{a,b})
    for (std::size_t i = 0; i < r; ++i) {
      dual[i] = i;
      for (std::size_t k = 0; k < r; ++k) {
        bool match = true;
        for (std::size_t j = 0; j < r && match; ++j) match = s_(k, j) == s_(i, j).conj();
        if (match) {
          dual[i] = k;
          break;
        }
      }
    }
    return dual;
  }

  std::vector<std::string> labels_;
  CycloMatrix s_;
  std::vector<RootOfUnity> theta_;
  std::size_t unit_ = 0;
  std::vector<std::size_t> dual_;
  std::uint32_t order_ = 1;
};

struct DerivedInvariants {
  std::vector<Cyclotomic> dims;
  Cyclotomic global_dim;
  std::uint32_t conductor = 1;
  RootOfUnity central_charge;
};

/// Σ_a θ_a S_{u,a}² / S_{u,u}, which is the central charge ξ.
inline Cyclotomic central_charge_value(const ModularData& md) {
  const auto u = md.unit();
  Cyclotomic acc;
  for (std::size_t a = 0; a < md.rank(); ++a) acc += md.theta(a).value() * md.S(u, a) * md.S(u, a);
  return acc / md.S(u, u);
}

inline DerivedInvariants derive_invariants(const ModularData& md) {
  DerivedInvariants inv;
  const auto u = md.unit();
  const Cyclotomic s00_inv = md.S(u, u).inverse();
  for (std::size_t a = 0; a < md.rank(); ++a) {
    inv.dims.push_back(md.S(u, a) * s00_inv);
    inv.global_dim += inv.dims.back() * inv.dims.back();
  }
  std::uint64_t m = 1;
  for (const auto& t : md.theta()) m = checked_lcm(m, static_cast<std::uint64_t>(t.order()));
  inv.conductor = checked_order(m);
  const Cyclotomic xi = central_charge_value(md);
  auto z = as_root_of_unity(xi);
  if (!z) throw ConsistencyError("central charge is not a root of unity: " + to_string(xi));
  inv.central_charge = *z;
  return inv;
}

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {
inline std::string cell(const ModularData& md, std::pair<std::size_t, std::size_t> ij) {
  return "(" + md.label(ij.first) + ", " + md.label(ij.second) + ")";
}

inline CycloMatrix permutation_matrix(const std::vector<std::size_t>& p) {
  CycloMatrix c(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c(i, p[i]) = Cyclotomic(1);
  return c;
}
}  // namespace detail

/// Checks the defining relations exactly. Failures are report entries.
inline ValidationReport validate(const ModularData& md) {
  ValidationReport rep;
  auto add = [&](std::string name, std::optional<std::pair<std::size_t, std::size_t>> diff) {
    CheckResult c{std::move(name), !diff.has_value(), ""};
    if (diff) c.detail = "first mismatch at " + detail::cell(md, *diff);
    rep.checks.push_back(std::move(c));
  };
  const std::size_t r = md.rank();
  const CycloMatrix& S = md.S();
  const CycloMatrix id = CycloMatrix::identity(r);
  const CycloMatrix C = detail::permutation_matrix(md.dual());
  const auto T = md.theta_values();

  add("S symmetric", S.first_difference(S.transpose()));
  add("S unitary", (S * S.adjoint()).first_difference(id));
  const CycloMatrix s2 = S * S;
  add("S^2 = C", s2.first_difference(C));
  add("C^2 = I", (C * C).first_difference(id));
  add("CS = SC", (C * S).first_difference(S * C));
  add("CT = TC", C.scale_columns(T).first_difference(C.scale_rows(T)));

  {
    CheckResult c{"unit twist is 1", md.theta(md.unit()).is_one(), ""};
    rep.checks.push_back(c);
  }
  {
    CheckResult c{"unit row real positive", true, ""};
    for (std::size_t j = 0; j < r && c.passed; ++j) {
      const auto& x = md.S(md.unit(), j);
      if (x.is_zero() || !(x == x.conj()) || x.to_complex().real() <= 0) {
        c.passed = false;
        c.detail = "entry " + detail::cell(md, {md.unit(), j});
      }
    }
    rep.checks.push_back(c);
  }
  {
    // reversed S via duals must match conj(S)
    std::optional<std::pair<std::size_t, std::size_t>> diff;
    for (std::size_t a = 0; a < r && !diff; ++a)
      for (std::size_t b = 0; b < r && !diff; ++b)
        if (!(md.S(md.dual(a), b) == md.S(a, b).conj())) diff = std::make_pair(a, b);
    add("S(dual a, b) = conj S(a, b)", diff);
  }
  {
    CheckResult c{"(ST)^3 = xi S^2", false, ""};
    const Cyclotomic xi = central_charge_value(md);
    const auto z = as_root_of_unity(xi);
    if (!z) {
      c.detail = "central charge is not a root of unity";
    } else {
      const CycloMatrix st = S.scale_columns(T);
      const auto diff = (st * st * st).first_difference(xi * s2);
      c.passed = !diff.has_value();
      c.detail = "xi = " + to_string(*z);
      if (diff) c.detail += "; first mismatch at " + detail::cell(md, *diff);
    }
    rep.checks.push_back(c);
  }
  return rep;
}

/// The reversed category: S̃_{a,b} = S_{ā,b}, θ̃_a = θ_a^{-1}.
inline ModularData reverse(const ModularData& md) {
  const std::size_t r = md.rank();
  CycloMatrix s(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) s(a, b) = md.S(md.dual(a), b);
  std::vector<RootOfUnity> theta;
  for (const auto& t : md.theta()) theta.push_back(t.inverse());
  return ModularData::from_parts(md.labels(), std::move(s), std::move(theta), md.unit(), md.dual());
}

}  // namespace mtc
