#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tfg/error.hpp"

namespace tfg {

/// GF(2) coordinate vector; the empty vector is the zero of the trivial group.
struct Mod2Class {
  std::vector<uint8_t> bits;

  Mod2Class() = default;
  explicit Mod2Class(std::vector<uint8_t> b) : bits(std::move(b)) {}
  static Mod2Class zero(size_t dim) { return Mod2Class(std::vector<uint8_t>(dim, 0)); }

  size_t dim() const { return bits.size(); }
  bool is_zero() const {
    for (uint8_t b : bits)
      if (b) return false;
    return true;
  }

  friend Mod2Class operator+(const Mod2Class& a, const Mod2Class& b) {
    require(a.bits.size() == b.bits.size(), errc::bad_config, "mod-2 dimension mismatch");
    Mod2Class r = a;
    for (size_t i = 0; i < r.bits.size(); ++i) r.bits[i] ^= b.bits[i];
    return r;
  }
  friend bool operator==(const Mod2Class& a, const Mod2Class& b) { return a.bits == b.bits; }
  friend bool operator!=(const Mod2Class& a, const Mod2Class& b) { return !(a == b); }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < bits.size(); ++i) {
      if (i) s += ",";
      s += bits[i] ? '1' : '0';
    }
    return s + ")";
  }
};

/// Dense matrix over GF(2), row-major.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static GF2Matrix eye(size_t n) {
    GF2Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint8_t get(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  void set(size_t i, size_t j, uint8_t v) { a_[i * cols_ + j] = v & 1; }

  friend GF2Matrix operator*(const GF2Matrix& x, const GF2Matrix& y) {
    require(x.cols_ == y.rows_, errc::bad_config, "gf2 matrix shape mismatch");
    GF2Matrix r(x.rows_, y.cols_);
    for (size_t i = 0; i < x.rows_; ++i)
      for (size_t k = 0; k < x.cols_; ++k)
        if (x.get(i, k))
          for (size_t j = 0; j < y.cols_; ++j) r.a_[i * r.cols_ + j] ^= y.get(k, j);
    return r;
  }

  std::vector<uint8_t> apply(const std::vector<uint8_t>& v) const {
    require(v.size() == cols_, errc::bad_config, "gf2 vector length mismatch");
    std::vector<uint8_t> r(rows_, 0);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r[i] ^= get(i, j) & v[j];
    return r;
  }

  friend bool operator==(const GF2Matrix& a, const GF2Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  size_t rank() const {
    GF2Matrix m = *this;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
      size_t p = r;
      while (p < rows_ && !m.get(p, c)) ++p;
      if (p == rows_) continue;
      for (size_t j = 0; j < cols_; ++j) std::swap(m.a_[p * cols_ + j], m.a_[r * cols_ + j]);
      for (size_t i = 0; i < rows_; ++i)
        if (i != r && m.get(i, c))
          for (size_t j = 0; j < cols_; ++j) m.a_[i * cols_ + j] ^= m.a_[r * cols_ + j];
      ++r;
    }
    return r;
  }

  /// Basis of the column space (as column vectors).
  std::vector<std::vector<uint8_t>> column_space_basis() const {
    GF2Matrix m = *this;
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
      size_t p = r;
      while (p < rows_ && !m.get(p, c)) ++p;
      if (p == rows_) continue;
      for (size_t j = 0; j < cols_; ++j) std::swap(m.a_[p * cols_ + j], m.a_[r * cols_ + j]);
      for (size_t i = 0; i < rows_; ++i)
        if (i != r && m.get(i, c))
          for (size_t j = 0; j < cols_; ++j) m.a_[i * cols_ + j] ^= m.a_[r * cols_ + j];
      pivots.push_back(c);
      ++r;
    }
    std::vector<std::vector<uint8_t>> basis;
    for (size_t c : pivots) {
      std::vector<uint8_t> col(rows_);
      for (size_t i = 0; i < rows_; ++i) col[i] = get(i, c);
      basis.push_back(std::move(col));
    }
    return basis;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<uint8_t> a_;
};

/// Solve B x = v where the columns of B are independent; returns coordinates
/// or empty when v is outside the span.
inline std::optional<std::vector<uint8_t>> gf2_coordinates(
    const std::vector<std::vector<uint8_t>>& basis, const std::vector<uint8_t>& v) {
  size_t n = v.size(), k = basis.size();
  // augmented elimination
  std::vector<std::vector<uint8_t>> m(n, std::vector<uint8_t>(k + 1));
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < n; ++i) m[i][j] = basis[j][i];
  for (size_t i = 0; i < n; ++i) m[i][k] = v[i];
  std::vector<long> pivot_of_col(k, -1);
  size_t r = 0;
  for (size_t c = 0; c < k && r < n; ++c) {
    size_t p = r;
    while (p < n && !m[p][c]) ++p;
    if (p == n) continue;
    std::swap(m[p], m[r]);
    for (size_t i = 0; i < n; ++i)
      if (i != r && m[i][c])
        for (size_t j = 0; j <= k; ++j) m[i][j] ^= m[r][j];
    pivot_of_col[c] = (long)r;
    ++r;
  }
  // inconsistent row?
  for (size_t i = r; i < n; ++i)
    if (m[i][k]) return std::nullopt;
  std::vector<uint8_t> x(k, 0);
  for (size_t c = 0; c < k; ++c)
    if (pivot_of_col[c] >= 0) x[c] = m[(size_t)pivot_of_col[c]][k];
  return x;
}

}  // namespace tfg
