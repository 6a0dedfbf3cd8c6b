#pragma once

#include "toricg/numeric.hpp"

#include <span>
#include <utility>
#include <vector>

namespace toricg {

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit RationalMatrix(const std::vector<RationalVector>& rows) : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("RationalMatrix: ragged rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  RationalMatrix transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Clears denominators and divides out the content: the primitive integer
/// vector on the same ray (sign preserved). The zero vector maps to zeros.
inline IntegerVector primitive(std::span<const Rational> v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, Integer(denominator(x)));
  IntegerVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = numerator(v[i]) * (l / denominator(v[i]));
    g = boost::multiprecision::gcd(g, out[i]);
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

/// Rank over Q by fraction-free (Bareiss) elimination on an integer copy.
/// Each row is scaled to integers first, which does not change the rank.
inline std::size_t exact_rank(const RationalMatrix& M) {
  const std::size_t m = M.rows(), n = M.cols();
  std::vector<IntegerVector> a;
  a.reserve(m);
  for (std::size_t r = 0; r < m; ++r) a.push_back(primitive(M.row(r)));
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[rank]);
    const Integer& p = a[rank][col];
    for (std::size_t r = rank + 1; r < m; ++r) {
      const Integer f = a[r][col];
      for (std::size_t c = col + 1; c < n; ++c) a[r][c] = (p * a[r][c] - f * a[rank][c]) / prev;
      a[r][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

inline std::size_t exact_rank(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return 0;
  return exact_rank(RationalMatrix(rows));
}

inline std::size_t kernel_dimension(const RationalMatrix& M) { return M.cols() - exact_rank(M); }

/// Basis of {x : M x = 0} from the reduced row echelon form.
inline std::vector<RationalVector> kernel_basis(const RationalMatrix& M) {
  const std::size_t m = M.rows(), n = M.cols();
  std::vector<RationalVector> a(m, RationalVector(n));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = M(r, c);
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[rank]);
    Rational inv = 1 / a[rank][col];
    for (auto& x : a[rank]) x *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) a[r][c] -= f * a[rank][c];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool in_span(const std::vector<RationalVector>& gens, const RationalVector& v) {
  auto with = gens;
  with.push_back(v);
  return exact_rank(with) == exact_rank(gens);
}

}  // namespace toricg
