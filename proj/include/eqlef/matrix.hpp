#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "eqlef/rational.hpp"

namespace eqlef {

using RatVector = std::vector<Rat>;

// Dense exact-rational matrix. Desk scale: no sparsity, no pivot heuristics
// beyond "first nonzero".
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RatMatrix from_rows(const std::vector<RatVector>& rows) {
    RatMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols()) throw Error("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

  RatMatrix transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  RatMatrix operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product dimension mismatch");
    RatMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if ((*this)(i, k) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          p(i, j) += (*this)(i, k) * o(k, j);
      }
    return p;
  }

  RatVector apply(const RatVector& v) const {
    if (v.size() != cols_) throw Error("matrix-vector dimension mismatch");
    RatVector w(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0) w[i] += (*this)(i, j) * v[j];
    return w;
  }

  RatMatrix operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum dimension mismatch");
    RatMatrix s = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] += o.entries_[i];
    return s;
  }

  RatMatrix operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference dimension mismatch");
    RatMatrix s = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] -= o.entries_[i];
    return s;
  }

  RatMatrix scaled(const Rat& c) const {
    RatMatrix s = *this;
    for (auto& e : s.entries_) e *= c;
    return s;
  }

  RatVector column(std::size_t j) const {
    RatVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> entries_;
};

// Sign of det(M), exact. Denominators are cleared row by row (positive
// scaling, sign-neutral), then fraction-free Bareiss elimination over Int
// with row pivoting. The empty 0x0 determinant is +1 so that restriction
// to a trivial fixed subspace contributes the empty-product sign.
inline int det_sign(const RatMatrix& m) {
  if (!m.square()) throw Error("det_sign: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Int scale = 1;
    for (std::size_t j = 0; j < n; ++j)
      scale = lcm(scale, denominator(m(i, j)));
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = numerator(m(i, j)) * (scale / denominator(m(i, j)));
  }

  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * sign_of(a[n - 1][n - 1]);
}

// Reduced row echelon form in place; returns the pivot column of each
// pivot row in order.
inline std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rat inv = Rat(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Echelonized basis of ker(M): one vector per free column, free variable
// set to 1.
inline std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  RatMatrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Echelonized rational basis of the eigenspace ker(M - I); empty when the
// only fixed vector is 0.
inline std::vector<RatVector> fixed_subspace(const RatMatrix& m) {
  if (!m.square()) throw Error("fixed_subspace: matrix is not square");
  RatMatrix shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= 1;
  return kernel_basis(shifted);
}

// Solve M x = w exactly; nullopt when w is outside the column space.
inline std::optional<RatVector> solve(const RatMatrix& m, const RatVector& w) {
  if (w.size() != m.rows()) throw Error("solve: dimension mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = w[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
  return x;
}

// Matrix of A restricted to span(B): C with A b_j = sum_i C_ij b_i. The
// basis vectors are the columns of the solve system; a column of A B
// outside span(B) means the subspace is not invariant.
inline RatMatrix restrict_operator(const RatMatrix& a,
                                   const std::vector<RatVector>& basis) {
  if (!a.square()) throw Error("restrict_operator: operator is not square");
  const std::size_t n = a.rows();
  const std::size_t k = basis.size();
  for (const auto& b : basis)
    if (b.size() != n) throw Error("restrict_operator: basis dimension mismatch");

  RatMatrix bmat(n, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) bmat(i, j) = basis[j][i];

  RatMatrix c(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    auto img = a.apply(basis[j]);
    auto coeffs = solve(bmat, img);
    if (!coeffs) throw Error("restrict_operator: not invariant");
    for (std::size_t i = 0; i < k; ++i) c(i, j) = (*coeffs)[i];
  }
  return c;
}

}  // namespace eqlef
