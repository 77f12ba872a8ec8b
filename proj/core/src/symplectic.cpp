#include "curvesig/symplectic.hpp"

#include <string>
#include <utility>

#include "curvesig/errors.hpp"

namespace curvesig {

IntMatrix symplectic_form(std::size_t genus) {
  IntMatrix j(2 * genus, 2 * genus);
  for (std::size_t i = 0; i < genus; ++i) {
    j(i, genus + i) = 1;
    j(genus + i, i) = -1;
  }
  return j;
}

bool is_symplectic(const IntMatrix& m, std::size_t genus) {
  if (m.rows() != 2 * genus || m.cols() != 2 * genus)
    throw DimensionMismatch("matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected " +
                            std::to_string(2 * genus) + "x" +
                            std::to_string(2 * genus));
  IntMatrix j = symplectic_form(genus);
  return m.transpose() * j * m == j;
}

SymplecticMatrix::SymplecticMatrix(std::size_t genus, IntMatrix entries)
    : genus_(genus), entries_(std::move(entries)) {
  if (genus_ == 0) throw DomainError("genus must be positive");
  if (!is_symplectic(entries_, genus_))
    throw DomainError("matrix does not satisfy M^T J M = J");
}

SymplecticMatrix SymplecticMatrix::identity(std::size_t genus) {
  return {genus, IntMatrix::identity(2 * genus)};
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  IntMatrix j = symplectic_form(genus_);
  IntMatrix minus_j(2 * genus_, 2 * genus_);
  for (std::size_t i = 0; i < 2 * genus_; ++i)
    for (std::size_t k = 0; k < 2 * genus_; ++k) minus_j(i, k) = -j(i, k);
  return {genus_, minus_j * entries_.transpose() * j};
}

SymplecticMatrix operator*(const SymplecticMatrix& a,
                           const SymplecticMatrix& b) {
  if (a.genus_ != b.genus_)
    throw GenusMismatch("product of symplectic matrices of different genus");
  return {a.genus_, a.entries_ * b.entries_};
}

SymplecticMatrix transvection(std::size_t genus,
                              const std::vector<BigInt>& v) {
  if (v.size() != 2 * genus)
    throw DimensionMismatch("transvection vector has wrong length");
  bool all_zero = true;
  for (const BigInt& c : v)
    if (c != 0) {
      all_zero = false;
      break;
    }
  if (all_zero) throw ZeroVector("transvection along the zero vector");

  const std::size_t n = 2 * genus;
  IntMatrix j = symplectic_form(genus);
  // I - v (v^T J)
  std::vector<BigInt> vtj(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t k = 0; k < n; ++k) vtj[c] += v[k] * j(k, c);
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) m(i, c) -= v[i] * vtj[c];
  return {genus, std::move(m)};
}

CocycleValue meyer_cocycle(const SymplecticMatrix& a,
                           const SymplecticMatrix& b) {
  if (a.genus() != b.genus())
    throw GenusMismatch("cocycle arguments have different genus");
  const std::size_t n = 2 * a.genus();

  const IntMatrix a_inv = a.inverse().entries();
  const IntMatrix& b_mat = b.entries();

  // Constraint matrix [A^{-1} - I | B - I] cutting out V_{A,B}.
  RationalMatrix constraint(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) {
      BigInt lhs = a_inv(i, c);
      BigInt rhs = b_mat(i, c);
      if (i == c) {
        lhs -= 1;
        rhs -= 1;
      }
      constraint(i, c) = Rational(std::move(lhs));
      constraint(i, n + c) = Rational(std::move(rhs));
    }
  const std::vector<RationalMatrix> basis = kernel_basis(constraint);
  const std::size_t dim = basis.size();
  if (dim == 0) return {0};

  // Pairing matrix P = J (I - B).
  IntMatrix j = symplectic_form(a.genus());
  RationalMatrix pairing(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        BigInt i_minus_b = (k == c ? 1 : 0) - b_mat(k, c);
        acc += j(i, k) * i_minus_b;
      }
      pairing(i, c) = Rational(std::move(acc));
    }

  // Gram matrix of <(x,y),(x',y')> = (x + y)^T P y' on the kernel basis.
  RationalMatrix gram(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    RationalMatrix py(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      Rational acc;
      for (std::size_t k = 0; k < n; ++k)
        acc += pairing(i, k) * basis[col](n + k, 0);
      py(i, 0) = std::move(acc);
    }
    for (std::size_t row = 0; row < dim; ++row) {
      Rational acc;
      for (std::size_t i = 0; i < n; ++i)
        acc += (basis[row](i, 0) + basis[row](n + i, 0)) * py(i, 0);
      gram(row, col) = std::move(acc);
    }
  }
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = r + 1; c < dim; ++c)
      if (!(gram(r, c) == gram(c, r)))
        throw FormNotSymmetric(
            "restricted pairing is not symmetric; this is a bug");

  const SignatureTriple sig = symmetric_signature(gram);
  return {meyer_sign_convention *
          (static_cast<int>(sig.n_plus) - static_cast<int>(sig.n_minus))};
}

bool check_meyer_axioms(const SymplecticMatrix& a, const SymplecticMatrix& b,
                        const PhiMap& phi) {
  const SymplecticMatrix ab = a * b;
  auto lookup = [&phi](const SymplecticMatrix& m, const char* which) {
    std::optional<Rational> v = phi(m);
    if (!v)
      throw MissingValue(std::string("phi is undefined at ") + which);
    return *v;
  };
  const Rational phi_a = lookup(a, "A");
  const Rational phi_b = lookup(b, "B");
  const Rational phi_ab = lookup(ab, "AB");
  const CocycleValue tau = meyer_cocycle(a, b);
  return phi_ab == phi_a + phi_b - Rational(tau.value);
}

}  // namespace curvesig
