#include "curvesig/matrix.hpp"

#include <utility>

namespace curvesig {

namespace {

// Congruence e_i <- e_i + e_j on the Gram matrix: row_i += row_j, col_i += col_j.
void add_basis_vector(RationalMatrix& d, std::size_t i, std::size_t j) {
  const std::size_t n = d.rows();
  for (std::size_t k = 0; k < n; ++k) d(i, k) += d(j, k);
  for (std::size_t k = 0; k < n; ++k) d(k, i) += d(k, j);
}

// Congruence swapping basis vectors i and j.
void swap_basis_vectors(RationalMatrix& d, std::size_t i, std::size_t j) {
  const std::size_t n = d.rows();
  for (std::size_t k = 0; k < n; ++k) std::swap(d(i, k), d(j, k));
  for (std::size_t k = 0; k < n; ++k) std::swap(d(k, i), d(k, j));
}

}  // namespace

SignatureTriple symmetric_signature(const RationalMatrix& s) {
  if (s.rows() != s.cols())
    throw NotSymmetric("signature of non-square matrix");
  const std::size_t n = s.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(s(i, j) == s(j, i)))
        throw NotSymmetric("signature of non-symmetric matrix");

  RationalMatrix d = s;
  SignatureTriple sig;
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i).is_zero()) {
      std::size_t j = i + 1;
      for (; j < n; ++j)
        if (!d(i, j).is_zero()) break;
      if (j == n) {
        // Row and column i vanish on the remaining block.
        ++sig.n_zero;
        continue;
      }
      add_basis_vector(d, i, j);
      // The new pivot is 2*d_ij + d_jj; it can still vanish, but only when
      // d_jj = -2*d_ij != 0, and then swapping in basis vector j works.
      if (d(i, i).is_zero()) swap_basis_vectors(d, i, j);
    }
    const Rational pivot = d(i, i);
    if (pivot.sign() > 0)
      ++sig.n_plus;
    else
      ++sig.n_minus;
    for (std::size_t r = i + 1; r < n; ++r) {
      if (d(r, i).is_zero()) continue;
      Rational factor = d(r, i) / pivot;
      for (std::size_t c = i; c < n; ++c) d(r, c) -= factor * d(i, c);
      for (std::size_t c = i; c < n; ++c) d(c, r) = d(r, c);
    }
  }
  return sig;
}

}  // namespace curvesig
