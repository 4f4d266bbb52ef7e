#pragma once

// Built-in modular data: vec, semion, toric-code, fibonacci, haagerup-center.

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "mtc/cyclotomic.hpp"
#include "mtc/errors.hpp"
#include "mtc/fusion_ring.hpp"
#include "mtc/matrix.hpp"
#include "mtc/modular_data.hpp"

namespace mtc {

/// Σ_{k=1}^{p−1} (k|p) ζ_p^k for an odd prime p, equal to √p when p ≡ 1 mod 4.
inline Cyclotomic quadratic_gauss_sum(std::uint32_t p) {
  std::vector<bool> square(p, false);
  for (std::uint64_t k = 1; k < p; ++k) square[(k * k) % p] = true;
  std::vector<std::pair<std::int64_t, Rational>> terms;
  for (std::uint32_t k = 1; k < p; ++k) terms.emplace_back(k, Rational(square[k] ? 1 : -1));
  return Cyclotomic::from_terms(p, terms);
}

/// Exponents of the Haagerup-center twists, in units of πi.
inline const std::vector<Rational>& haagerup_twist_turns() {
  static const std::vector<Rational> t = {Rational(0),       Rational(0),      Rational(0),      Rational(0),
                                          Rational(2, 3),    Rational(-2, 3),  Rational(12, 13), Rational(-4, 13),
                                          Rational(4, 13),   Rational(10, 13), Rational(-12, 13), Rational(-10, 13)};
  return t;
}

/// Column pattern c(C[i][j]) of the lower-right 6×6 block of the Haagerup S.
inline const std::vector<std::vector<int>>& haagerup_c_pattern() {
  static const std::vector<std::vector<int>> c = {{1, 2, 3, 4, 5, 6}, {2, 4, 6, 5, 3, 1}, {3, 6, 4, 1, 2, 5},
                                                  {4, 5, 1, 3, 6, 2}, {5, 3, 2, 6, 1, 4}, {6, 1, 5, 2, 4, 3}};
  return c;
}

namespace fixtures {

inline ModularData vec() { return ModularData::construct({"1"}, CycloMatrix(1, 1, {Cyclotomic(1)}), {Cyclotomic(1)}); }

inline ModularData semion() {
  const Cyclotomic h = Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, 7);  // √2
  const Cyclotomic s = h * Cyclotomic(Rational(1, 2));                                    // 1/√2
  return ModularData::construct({"1", "s"}, CycloMatrix(2, 2, {s, s, s, -s}),
                                {Cyclotomic(1), Cyclotomic::root_of_unity(4, 1)});
}

inline ModularData toric_code() {
  const Cyclotomic p(Rational(1, 2)), m(Rational(-1, 2));
  return ModularData::construct({"1", "e", "m", "f"},
                                CycloMatrix(4, 4, {p, p, p, p, p, p, m, m, p, m, p, m, p, m, m, p}),
                                {Cyclotomic(1), Cyclotomic(1), Cyclotomic(1), Cyclotomic(-1)});
}

inline ModularData fibonacci() {
  // S = (2/√5) [[sin π/5, sin 2π/5], [sin 2π/5, −sin π/5]], θ_τ = e^{4πi/5}
  const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  auto sin_pi = [&](int k) {  // sin(kπ/5)
    return (Cyclotomic::root_of_unity(10, k) - Cyclotomic::root_of_unity(10, -k)) / (Cyclotomic(2) * i);
  };
  const Cyclotomic scale = Cyclotomic(2) / quadratic_gauss_sum(5);
  const Cyclotomic s1 = scale * sin_pi(1), s2 = scale * sin_pi(2);
  return ModularData::construct({"1", "tau"}, CycloMatrix(2, 2, {s1, s2, s2, -s1}),
                                {Cyclotomic(1), Cyclotomic::root_of_unity(5, 2)});
}

/// Entries of the Haagerup-center S matrix (including the 1/3 prefactor).
inline CycloMatrix haagerup_S() {
  const Cyclotomic r13 = quadratic_gauss_sum(13);
  const Cyclotomic x = Cyclotomic(Rational(1, 2)) - Cyclotomic(Rational(3, 26)) * r13;  // (13 − 3√13)/26
  const Cyclotomic y = Cyclotomic(Rational(3, 13)) * r13;                              // 3/√13
  auto c = [&](int j) { return -y * (Cyclotomic::root_of_unity(13, j) + Cyclotomic::root_of_unity(13, -j)); };
  const Cyclotomic one(1), zero, third(Rational(1, 3));
  CycloMatrix s(12, 12);
  const Cyclotomic top[6][6] = {{x, one - x, one, one, one, one},     {one - x, x, one, one, one, one},
                                {one, one, 2, -1, -1, -1},            {one, one, -1, 2, -1, -1},
                                {one, one, -1, -1, -1, 2},            {one, one, -1, -1, 2, -1}};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) s(i, j) = top[i][j];
  for (int k = 6; k < 12; ++k) {
    s(0, k) = y;
    s(1, k) = -y;
    s(k, 0) = y;
    s(k, 1) = -y;
    for (int i = 2; i < 6; ++i) s(i, k) = s(k, i) = zero;
  }
  const auto& pat = haagerup_c_pattern();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) s(6 + i, 6 + j) = c(pat[i][j]);
  return third * s;
}

inline ModularData haagerup_center() {
  std::vector<std::string> labels;
  std::vector<Cyclotomic> theta;
  for (int i = 1; i <= 12; ++i) labels.push_back("x" + std::to_string(i));
  for (const auto& t : haagerup_twist_turns()) {
    // e^{πi p/q} = ζ_{2q}^p
    theta.push_back(Cyclotomic::root_of_unity(2 * t.den().to_int64(), t.num().to_int64()));
  }
  return ModularData::construct(std::move(labels), haagerup_S(), theta);
}

}  // namespace fixtures

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"vec", "semion", "toric-code", "fibonacci", "haagerup-center"};
  return names;
}

/// Builds the named fixture and checks it passes validate and Verlinde
/// integrality; results are cached for the life of the process.
inline const ModularData& catalog(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, ModularData> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  ModularData md;
  if (name == "vec") md = fixtures::vec();
  else if (name == "semion") md = fixtures::semion();
  else if (name == "toric-code") md = fixtures::toric_code();
  else if (name == "fibonacci") md = fixtures::fibonacci();
  else if (name == "haagerup-center") md = fixtures::haagerup_center();
  else throw UnknownFixture("unknown catalog entry '" + name + "'");
  const auto rep = validate(md);
  if (!rep.ok()) throw ConsistencyError("catalog entry '" + name + "' fails validation");
  const auto fr = verlinde(md);
  if (!fr.invariant_failures().empty()) throw ConsistencyError("catalog entry '" + name + "' has an invalid fusion ring");
  return cache.emplace(name, std::move(md)).first->second;
}

}  // namespace mtc
