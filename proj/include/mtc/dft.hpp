#pragma once

// Exact discrete Fourier transform over ℚ(ζ_N), indexed 1..N as
//   F(x)_k = Σ_{m=1}^{N} x_m ζ_N^{mk},   F^{-1}(X)_k = (1/N) Σ_{m=1}^{N} X_m ζ_N^{-mk}.
// Element i of a vector holds index i + 1.

#include <cstdint>
#include <span>
#include <vector>

#include "mtc/cyclotomic.hpp"

namespace mtc {

namespace detail {
inline std::vector<Cyclotomic> fourier(std::span<const Cyclotomic> x, int sign) {
  const auto n = static_cast<std::int64_t>(x.size());
  if (n == 0) return {};
  std::vector<Cyclotomic> powers(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < n; ++j) powers[static_cast<std::size_t>(j)] = Cyclotomic::root_of_unity(n, j);
  std::vector<Cyclotomic> out(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k <= n; ++k) {
    Cyclotomic acc;
    for (std::int64_t m = 1; m <= n; ++m) {
      const auto& xm = x[static_cast<std::size_t>(m - 1)];
      if (xm.is_zero()) continue;
      acc += xm * powers[static_cast<std::size_t>(floor_mod(sign * m * k, n))];
    }
    out[static_cast<std::size_t>(k - 1)] = std::move(acc);
  }
  return out;
}
}  // namespace detail

inline std::vector<Cyclotomic> dft(std::span<const Cyclotomic> x) { return detail::fourier(x, 1); }

inline std::vector<Cyclotomic> inverse_dft(std::span<const Cyclotomic> spectrum) {
  auto out = detail::fourier(spectrum, -1);
  const Cyclotomic scale(Rational(Integer(1), Integer(static_cast<std::int64_t>(spectrum.size()))));
  for (auto& v : out) v *= scale;
  return out;
}

/// Eigenvalue multiplicities of a diagonalizable operator with N-th-root-of-
/// unity spectrum, from its power traces Tr(L^1), …, Tr(L^N): entry m − 1 is
/// the multiplicity of ζ_N^m.
inline std::vector<Cyclotomic> multiplicities_from_traces(std::span<const Cyclotomic> traces) {
  return inverse_dft(traces);
}

}  // namespace mtc
