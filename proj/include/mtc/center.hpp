#pragma once

// The Drinfel'd center of a modular category as the Deligne square C ⊠ C̃,
// with the forgetful multiplicity matrix A.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mtc/cyclotomic.hpp"
#include "mtc/errors.hpp"
#include "mtc/fusion_ring.hpp"
#include "mtc/matrix.hpp"
#include "mtc/modular_data.hpp"

namespace mtc {

struct CenterData {
  ModularData base;
  ModularData reversed;  // C̃
  FusionRing base_fusion;
  ModularData md;        // Z = C ⊠ C̃, pairs flattened row-major
  std::vector<std::vector<std::int64_t>> A;  // A[(a,b)][c] = N^c_{a,b}

  std::size_t base_rank() const noexcept { return base.rank(); }
  std::size_t rank() const noexcept { return md.rank(); }
  std::size_t index(std::size_t a, std::size_t b) const { return a * base.rank() + b; }
  std::pair<std::size_t, std::size_t> pair_of(std::size_t i) const { return {i / base.rank(), i % base.rank()}; }

  /// Multiplicity vector of Forget(x) for a center multiset x.
  ObjectMultiset forget(const ObjectMultiset& x) const {
    ObjectMultiset out(base.rank());
    for (const auto& [i, k] : x.terms())
      for (std::size_t c = 0; c < base.rank(); ++c) out[c] += k * A[i][c];
    return out;
  }
};

/// Builds Z = C ⊠ C̃. The S matrix is S_{a,c}·S_{b̄,d}, twists θ_a/θ_b, unit
/// (𝟙,𝟙), duals (ā,b̄). Throws ConsistencyError unless ξ_Z = 1.
inline CenterData deligne_square(const ModularData& md, const FusionRing& fr) {
  CenterData cd;
  cd.base = md;
  cd.reversed = reverse(md);
  cd.base_fusion = fr;
  const std::size_t r = md.rank();
  const std::size_t rz = r * r;
  std::vector<std::string> labels;
  std::vector<RootOfUnity> theta;
  std::vector<std::size_t> dual(rz);
  labels.reserve(rz);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      labels.push_back("(" + md.label(a) + "," + md.label(b) + ")");
      theta.push_back(md.theta(a) / md.theta(b));
      dual[a * r + b] = md.dual(a) * r + md.dual(b);
    }
  CycloMatrix s(rz, rz);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c)
        for (std::size_t d = 0; d < r; ++d) s(a * r + b, c * r + d) = md.S(a, c) * cd.reversed.S(b, d);
  const std::size_t unit = md.unit() * r + md.unit();
  cd.md = ModularData::from_parts(std::move(labels), std::move(s), std::move(theta), unit, std::move(dual));
  cd.A.assign(rz, std::vector<std::int64_t>(r, 0));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c) cd.A[a * r + b][c] = fr.N(c, a, b);
  const auto xi = as_root_of_unity(central_charge_value(cd.md));
  if (!xi || !xi->is_one())
    throw ConsistencyError("central charge of the Deligne square is not 1; the input data is inconsistent");
  return cd;
}

namespace detail {

/// Applies a Kronecker product X ↦ (P ⊗ Q)·X, (P ⊗ Q)[(a,b),(c,d)] = P_{a,c} Q_{b,d},
/// to a matrix X with r² rows, one column at a time as P·X_j·Qᵀ.
inline CycloMatrix kron_apply(const CycloMatrix& p, const CycloMatrix& q, const CycloMatrix& x) {
  const std::size_t r = p.rows();
  if (x.rows() != r * r) throw DimensionError("kron_apply: row count must be r^2");
  const CycloMatrix qt = q.transpose();
  CycloMatrix out(x.rows(), x.cols());
  for (std::size_t j = 0; j < x.cols(); ++j) {
    CycloMatrix xj(r, r);
    for (std::size_t c = 0; c < r; ++c)
      for (std::size_t d = 0; d < r; ++d) xj(c, d) = x(c * r + d, j);
    const CycloMatrix y = p * xj * qt;
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) out(a * r + b, j) = y(a, b);
  }
  return out;
}

}  // namespace detail

/// S_Z · X using the tensor structure of the center's S matrix.
inline CycloMatrix apply_center_S(const CenterData& cd, const CycloMatrix& x) {
  return detail::kron_apply(cd.base.S(), cd.reversed.S(), x);
}

}  // namespace mtc
