#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "curvesig/errors.hpp"
#include "curvesig/rational.hpp"

namespace curvesig {

/// Dense row-major matrix over an exact field (Rational or GaussianRational).
/// Values are immutable in all library operations: every algorithm works on
/// copies and returns fresh matrices.
template <typename K>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<K>> rows);

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const K& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  K& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  Mat transpose() const;

  friend bool operator==(const Mat& a, const Mat& b) = default;

  friend Mat operator+(const Mat& a, const Mat& b) {
    a.require_same_shape(b);
    Mat r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
      r.entries_[k] = a.entries_[k] + b.entries_[k];
    return r;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    a.require_same_shape(b);
    Mat r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
      r.entries_[k] = a.entries_[k] - b.entries_[k];
    return r;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("matrix product shape mismatch");
    Mat r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (aik == K{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          r(i, j) += aik * b(k, j);
      }
    return r;
  }

 private:
  void require_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch("matrix shape mismatch");
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<K> entries_;
};

template <typename K>
Mat<K>::Mat(std::initializer_list<std::initializer_list<K>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_)
      throw DimensionMismatch("ragged initializer for matrix");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

template <typename K>
Mat<K> Mat<K>::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
  return m;
}

template <typename K>
Mat<K> Mat<K>::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

using RationalMatrix = Mat<Rational>;
using GaussianMatrix = Mat<GaussianRational>;
using IntMatrix = Mat<BigInt>;

/// Reduced row echelon form, in place. Pivoting is deterministic: columns are
/// scanned left to right and the pivot row is the first one with a nonzero
/// entry, so kernel bases are reproducible across runs and platforms.
/// Returns the pivot columns in order.
template <typename K>
std::vector<std::size_t> rref_in_place(Mat<K>& m);

/// Basis of { v : Mv = 0 } as column vectors, one per free column of the
/// reduced row echelon form, ordered by free column index.
template <typename K>
std::vector<Mat<K>> kernel_basis(const Mat<K>& m);

/// Exact inverse. Throws Singular when det M = 0.
template <typename K>
Mat<K> invert(const Mat<K>& m);

/// Inertia of a symmetric bilinear form.
struct SignatureTriple {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  friend bool operator==(const SignatureTriple&, const SignatureTriple&) =
      default;
};

/// Signature of a symmetric rational matrix by exact congruence
/// diagonalization. Throws NotSymmetric when S != S^T.
SignatureTriple symmetric_signature(const RationalMatrix& s);

// --- template implementations ---

template <typename K>
std::vector<std::size_t> rref_in_place(Mat<K>& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!(m(i, c) == K{})) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pivot, j));
    K inv_pivot = K(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv_pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == K{}) continue;
      K factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

template <typename K>
std::vector<Mat<K>> kernel_basis(const Mat<K>& m) {
  Mat<K> r = m;
  std::vector<std::size_t> pivots = rref_in_place(r);
  const std::size_t cols = m.cols();
  std::vector<Mat<K>> basis;
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    // Free column c: unit there, minus the echelon column at each pivot row.
    Mat<K> v(cols, 1);
    v(c, 0) = K(1);
    for (std::size_t row = 0; row < pivots.size(); ++row)
      v(pivots[row], 0) = -r(row, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename K>
Mat<K> invert(const Mat<K>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Mat<K> work(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) work(i, j) = m(i, j);
    work(i, n + i) = K(1);
  }
  std::vector<std::size_t> pivots = rref_in_place(work);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw Singular("matrix is singular");
  Mat<K> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = work(i, n + j);
  return inv;
}

}  // namespace curvesig
