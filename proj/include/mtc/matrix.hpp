#pragma once

// Dense matrices over cyclotomic fields.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mtc/cyclotomic.hpp"
#include "mtc/errors.hpp"

namespace mtc {

/// Sums products of cyclotomics of one order without reducing or normalizing
/// each term: numerator convolutions collect over a running common
/// denominator, and Φ_N reduction happens once in result().
class DotAccumulator {
 public:
  explicit DotAccumulator(std::uint32_t order) : order_(order) {}

  /// Operands must have order `order` or be rational.
  void add_product(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_zero() || b.is_zero()) return;
    // rationals may be stored at any order; only their constant term matters
    const std::size_t la = a.is_rational() ? 1 : a.degree();
    const std::size_t lb = b.is_rational() ? 1 : b.degree();
    if ((la > 1 && a.order() != order_) || (lb > 1 && b.order() != order_))
      throw DomainError("DotAccumulator: operand order mismatch");
    const auto& na = a.numerators();
    const auto& nb = b.numerators();
    const Integer d = a.denominator() * b.denominator();
    Integer scale(1);
    if (acc_.empty()) {
      den_ = d;
    } else if (d != den_) {
      const Integer l = lcm(den_, d);
      if (l != den_) {
        const Integer up = divexact(l, den_);
        for (auto& c : acc_)
          if (!c.is_zero()) c *= up;
        den_ = l;
      }
      scale = divexact(l, d);
    }
    const std::size_t need = la + lb - 1;
    if (acc_.size() < need) acc_.resize(need);
    for (std::size_t i = 0; i < la; ++i) {
      if (na[i].is_zero()) continue;
      const Integer ai = scale.is_one() ? na[i] : na[i] * scale;
      for (std::size_t j = 0; j < lb; ++j)
        if (!nb[j].is_zero()) acc_[i + j].addmul(ai, nb[j]);
    }
  }

  void add(const Cyclotomic& a) { add_product(a, Cyclotomic(1)); }

  Cyclotomic result() {
    if (acc_.empty()) return Cyclotomic();
    const auto& f = detail::field(order_);
    if (acc_.size() < f.degree) acc_.resize(f.degree);
    detail::reduce_mod_phi(acc_, f);
    Cyclotomic out(order_, std::move(den_), std::move(acc_));
    acc_.clear();
    den_ = Integer(1);
    return out;
  }

 private:
  std::uint32_t order_;
  Integer den_{1};
  std::vector<Integer> acc_;
};

/// Least common order of a set of values (rationals contribute 1).
inline std::uint32_t common_order(std::span<const Cyclotomic> xs) {
  std::uint64_t n = 1;
  for (const auto& x : xs)
    if (!x.is_rational()) n = checked_lcm(n, x.order());
  return checked_order(n);
}

/// Row-major dense matrix of cyclotomics.
class CycloMatrix {
 public:
  CycloMatrix() = default;
  CycloMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  CycloMatrix(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw DimensionError("matrix data size does not match its shape");
  }

  static CycloMatrix identity(std::size_t n) {
    CycloMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic(1);
    return m;
  }

  static CycloMatrix diagonal(std::span<const Cyclotomic> d) {
    CycloMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Cyclotomic& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Cyclotomic> data() const noexcept { return data_; }

  std::uint32_t common_order() const { return mtc::common_order(data_); }

  /// Every non-rational entry re-expressed at order n.
  CycloMatrix embedded(std::uint32_t n) const {
    CycloMatrix out = *this;
    for (auto& x : out.data_)
      if (!x.is_rational() && x.order() != n) x = x.embed(n);
    return out;
  }

  CycloMatrix transpose() const {
    CycloMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  CycloMatrix conj() const {
    CycloMatrix out = *this;
    for (auto& x : out.data_) x = x.conj();
    return out;
  }

  /// Conjugate transpose.
  CycloMatrix adjoint() const { return conj().transpose(); }

  /// this · diag(d).
  CycloMatrix scale_columns(std::span<const Cyclotomic> d) const {
    if (d.size() != cols_) throw DimensionError("scale_columns: length mismatch");
    CycloMatrix out = *this;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) *= d[j];
    return out;
  }

  /// diag(d) · this.
  CycloMatrix scale_rows(std::span<const Cyclotomic> d) const {
    if (d.size() != rows_) throw DimensionError("scale_rows: length mismatch");
    CycloMatrix out = *this;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) *= d[i];
    return out;
  }

  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
    std::uint64_t n = checked_lcm(a.common_order(), b.common_order());
    const auto order = checked_order(n);
    const CycloMatrix ea = a.embedded(order), eb = b.embedded(order);
    CycloMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < b.cols_; ++j) {
        DotAccumulator acc(order);
        for (std::size_t k = 0; k < a.cols_; ++k) acc.add_product(ea(i, k), eb(k, j));
        out(i, j) = acc.result();
      }
    }
    return out;
  }

  friend CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b) {
    a.require_same_shape(b);
    CycloMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }

  friend CycloMatrix operator-(const CycloMatrix& a, const CycloMatrix& b) {
    a.require_same_shape(b);
    CycloMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  friend CycloMatrix operator*(const Cyclotomic& s, const CycloMatrix& m) {
    CycloMatrix out = m;
    for (auto& x : out.data_) x = s * x;
    return out;
  }

  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// First (row, col) where the matrices differ, or nullopt.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const CycloMatrix& o) const {
    require_same_shape(o);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!((*this)(i, j) == o(i, j))) return std::make_pair(i, j);
    return std::nullopt;
  }

 private:
  void require_same_shape(const CycloMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shapes differ");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Cyclotomic> data_;
};

}  // namespace mtc
