#pragma once

// Eigenvalues with multiplicities of rotation operators on Hom(b, a^{⊗n}) in
// the center and of Jucys–Murphy braids acting on Hom(b, a^{⊗n}) in C.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtc/center.hpp"
#include "mtc/cyclotomic.hpp"
#include "mtc/errors.hpp"
#include "mtc/fusion_ring.hpp"
#include "mtc/indicators.hpp"
#include "mtc/modular_data.hpp"

namespace mtc {

struct SpectrumEntry {
  RootOfUnity eigenvalue;
  std::int64_t multiplicity = 0;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct SpectrumRow {
  std::size_t object = 0;  // 0-based
  std::string label;
  std::int64_t hom_dim = 0;
  std::vector<SpectrumEntry> entries;  // every candidate, zero multiplicities included
  friend bool operator==(const SpectrumRow&, const SpectrumRow&) = default;

  std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& e : entries) t += e.multiplicity;
    return t;
  }
};

struct SpectrumContext {
  std::string kind;      // rotation | braid | sigma | sigma3
  std::string category;  // free-form name of the input
  std::string object;    // label of a
  std::int64_t n = 0, l = 0, m = 0;
  std::string crossing = "over";  // over | under
  friend bool operator==(const SpectrumContext&, const SpectrumContext&) = default;
};

struct SpectrumReport {
  SpectrumContext context;
  std::vector<SpectrumRow> rows;
  friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

/// P^b_{n,a}(x) = Σ_{k=0}^{n−1} (ν^b_{n,k}(a)/n) x^k.
struct MultiplicityPolynomial {
  std::int64_t n = 1;
  std::vector<Cyclotomic> coefficients;

  Cyclotomic evaluate(const Cyclotomic& x) const {
    Cyclotomic acc, p(1);
    for (const auto& c : coefficients) {
      acc += c * p;
      p *= x;
    }
    return acc;
  }
};

inline MultiplicityPolynomial multiplicity_polynomial(IndicatorEngine& engine, std::size_t b, const ObjectMultiset& a,
                                                      std::int64_t n) {
  MultiplicityPolynomial p;
  p.n = n;
  const Cyclotomic inv_n(Rational(Integer(1), Integer(n)));
  for (std::int64_t k = 0; k < n; ++k) p.coefficients.push_back(engine.nu(b, n, k, a) * inv_n);
  return p;
}

namespace detail {

inline std::int64_t to_multiplicity(const Cyclotomic& v, const std::string& where) {
  const auto q = v.to_rational();
  if (!q || !q->is_integer() || q->sign() < 0)
    throw IntegralityError("multiplicity " + to_string(v) + " is not a non-negative integer (" + where + ")");
  return q->num().to_int64();
}

}  // namespace detail

/// Spectrum of ρ^b_{n,a} on Hom(b, a^{⊗n}) for a center simple b: every λ with
/// λⁿ = θ_b^{−1}, with multiplicity P^b_{n,a}(λ^{−1}).
inline SpectrumRow rotation_spectrum(IndicatorEngine& engine, std::size_t b, const ObjectMultiset& a,
                                     std::int64_t n) {
  if (n < 1) throw DomainError("rotation_spectrum: n must be at least 1");
  const auto& cd = engine.center();
  const auto p = multiplicity_polynomial(engine, b, a, n);
  SpectrumRow row;
  row.object = b;
  row.label = cd.md.label(b);
  row.hom_dim = engine.hom(b, a, n);
  for (const auto& lambda : cd.md.theta(b).inverse().nth_roots(n)) {
    const auto mult = detail::to_multiplicity(p.evaluate(lambda.inverse().value()),
                                              "rotation on " + row.label + ", n = " + std::to_string(n));
    row.entries.push_back({lambda, mult});
  }
  return row;
}

inline SpectrumRow rotation_spectrum(const CenterData& cd, std::size_t b, const ObjectMultiset& a, std::int64_t n) {
  IndicatorEngine engine(cd);
  return rotation_spectrum(engine, b, a, n);
}

/// K^b_{n,a}(ω) = Σ_c δ(ωⁿ, θ_c^{−1}) dim Hom(c, b) P^c_{n,a}(ω^{−1}) for a
/// center multiset b.
inline std::int64_t semisimple_K(IndicatorEngine& engine, const ObjectMultiset& b, const ObjectMultiset& a,
                                 std::int64_t n, const RootOfUnity& omega) {
  const auto& cd = engine.center();
  const RootOfUnity wn = omega.pow(n);
  Cyclotomic acc;
  for (const auto& [c, k] : b.terms()) {
    if (!(wn == cd.md.theta(c).inverse())) continue;
    acc += Cyclotomic(k) * multiplicity_polynomial(engine, c, a, n).evaluate(omega.inverse().value());
  }
  return detail::to_multiplicity(acc, "K at omega = " + to_string(omega));
}

enum class Crossing { over, under };

/// Candidate ω in order of first appearance, with the center simples they gate.
namespace detail {
inline void add_candidates(std::vector<RootOfUnity>& out, const RootOfUnity& target, std::int64_t n) {
  for (const auto& w : target.nth_roots(n)) {
    bool seen = false;
    for (const auto& v : out) seen = seen || v == w;
    if (!seen) out.push_back(w);
  }
}
}  // namespace detail

/// Spectrum of the Jucys–Murphy braid A^n_{l,m} acting on Hom(b, a^{⊗n}) for
/// every simple b of C. The eigenvalue θ_a^{−1}ω has multiplicity
/// K^{ā^{⊗(l+m)}⊠b̃}_{n−(l+m),a}(ω). Under-crossings use the reversed category.
/// `engine` must be built on the center of C (or of reverse(C) for under).
inline SpectrumReport braid_jm_spectrum(IndicatorEngine& engine, std::size_t a, std::int64_t n, std::int64_t l,
                                        std::int64_t m, Crossing crossing = Crossing::over) {
  if (l < 0 || m < 0 || l + m >= n) throw DomainError("braid_jm_spectrum needs l, m >= 0 and l + m < n");
  const auto& cd = engine.center();
  const ModularData& md = cd.base;
  const FusionRing& fr = cd.base_fusion;
  const std::int64_t strands = n - (l + m);
  const ObjectMultiset abar_pow = power_decompose(fr, md.dual(a), l + m);
  const ObjectMultiset a_obj(md.rank(), a);
  const RootOfUnity theta_a_inv = md.theta(a).inverse();
  SpectrumReport rep;
  rep.context = {"braid", "", md.label(a), n, l, m, crossing == Crossing::over ? "over" : "under"};
  for (std::size_t b = 0; b < md.rank(); ++b) {
    ObjectMultiset zb(cd.rank());
    std::vector<RootOfUnity> omegas;
    for (const auto& [c, k] : abar_pow.terms()) {
      zb[cd.index(c, b)] += k;
      detail::add_candidates(omegas, cd.md.theta(cd.index(c, b)).inverse(), strands);
    }
    SpectrumRow row;
    row.object = b;
    row.label = md.label(b);
    row.hom_dim = hom_dim(fr, b, a_obj, n);
    for (const auto& w : omegas) row.entries.push_back({theta_a_inv * w, semisimple_K(engine, zb, a_obj, strands, w)});
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

/// Owns the center (of C, or of C̃ for under-crossings) needed by braid spectra.
inline SpectrumReport braid_jm_spectrum(const ModularData& md, std::size_t a, std::int64_t n, std::int64_t l,
                                        std::int64_t m, Crossing crossing = Crossing::over) {
  const ModularData base = crossing == Crossing::over ? md : reverse(md);
  const FusionRing fr = verlinde(base);
  const CenterData cd = deligne_square(base, fr);
  IndicatorEngine engine(cd);
  return braid_jm_spectrum(engine, a, n, l, m, crossing);
}

enum class SigmaVariant { sigma, sigma3 };

/// N^b_{x,a,a} = Σ_e N^e_{x,a} N^b_{e,a}.
inline std::int64_t triple_multiplicity(const FusionRing& fr, std::size_t b, std::size_t x, std::size_t a) {
  std::int64_t s = 0;
  for (std::size_t e = 0; e < fr.rank(); ++e) s += fr.N(e, x, a) * fr.N(b, e, a);
  return s;
}

/// n = 2 braid spectra straight from S, T and N: on Hom(b, ...), ω with
/// ω² = θ_b/θ_c has multiplicity ½(ω^{−1} ν^{c⊠b̃}_{2,1}(a) + N^b_{c̄,a,a}),
/// reported as the eigenvalue θ_a^{−1}ω. c = 𝟙 gives σᵢ on Hom(b, a⊗a);
/// c = ā gives σᵢσᵢ₊₁σᵢ on Hom(b, a^{⊗3}).
inline SpectrumReport sigma_spectrum_n2(const ModularData& md, const FusionRing& fr, std::size_t a,
                                        SigmaVariant variant = SigmaVariant::sigma) {
  const std::size_t c = variant == SigmaVariant::sigma ? md.unit() : md.dual(a);
  const std::size_t cbar = md.dual(c);
  const CycloMatrix nu = nu2_matrix(md, fr, a);
  const RootOfUnity theta_a_inv = md.theta(a).inverse();
  const Cyclotomic half(Rational(1, 2));
  SpectrumReport rep;
  rep.context = variant == SigmaVariant::sigma ? SpectrumContext{"sigma", "", md.label(a), 2, 0, 0, "over"}
                                               : SpectrumContext{"sigma3", "", md.label(a), 3, 1, 0, "over"};
  for (std::size_t b = 0; b < md.rank(); ++b) {
    SpectrumRow row;
    row.object = b;
    row.label = md.label(b);
    const std::int64_t nb = triple_multiplicity(fr, b, cbar, a);
    row.hom_dim = variant == SigmaVariant::sigma ? fr.N(b, a, a) : triple_multiplicity(fr, b, a, a);
    const auto omegas = (md.theta(b) / md.theta(c)).nth_roots(2);
    if (omegas.empty() && row.hom_dim > 0) throw ConsistencyError("no eigenvalue candidates for a nonzero hom space");
    for (const auto& w : omegas) {
      const Cyclotomic k = half * (w.inverse().value() * nu(c, b) + Cyclotomic(nb));
      row.entries.push_back({theta_a_inv * w, detail::to_multiplicity(k, "braid on " + row.label)});
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// rendering

/// ±e^{pπi/q} with p/q in [0, 1); "1" and "-1" for real values.
inline std::string render_exp(const RootOfUnity& z) {
  // z = e^{2πi t}, t = e/o in [0,1)
  std::int64_t num = 2 * z.exponent(), den = z.order();
  bool neg = false;
  if (num >= den) {
    num -= den;
    neg = true;
  }
  const std::int64_t g = std::gcd(num, den);
  if (num == 0) return neg ? "-1" : "1";
  num /= g;
  den /= g;
  std::string s = neg ? "-e^{" : "e^{";
  if (num != 1) s += std::to_string(num);
  s += "πi/" + std::to_string(den) + "}";
  return s;
}

/// Plain-text table: object | possible eigenvalues | multiplicities.
inline std::string render_table(const SpectrumReport& rep) {
  std::string out = "# " + rep.context.kind + " spectrum of " + rep.context.object;
  out += " (n=" + std::to_string(rep.context.n) + ", l=" + std::to_string(rep.context.l) +
         ", m=" + std::to_string(rep.context.m) + ", " + rep.context.crossing + ")\n";
  out += "object | possible eigenvalues | multiplicities\n";
  for (const auto& row : rep.rows) {
    std::string ev, mu;
    for (std::size_t i = 0; i < row.entries.size(); ++i) {
      if (i) {
        ev += ", ";
        mu += ",";
      }
      ev += render_exp(row.entries[i].eigenvalue);
      mu += std::to_string(row.entries[i].multiplicity);
    }
    out += std::to_string(row.object + 1) + " | (" + ev + ") | (" + mu + ")\n";
  }
  return out;
}

}  // namespace mtc
