#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "curvesig/matrix.hpp"
#include "curvesig/rational.hpp"

namespace curvesig {

/// The standard symplectic form matrix J = [[0, I_g], [-I_g, 0]] of size 2g.
IntMatrix symplectic_form(std::size_t genus);

/// True iff M^T J M = J exactly. Throws DimensionMismatch when M is not
/// 2g x 2g.
bool is_symplectic(const IntMatrix& m, std::size_t genus);

/// Integer 2g x 2g matrix preserving the standard symplectic form, checked at
/// construction. Immutable.
class SymplecticMatrix {
 public:
  SymplecticMatrix(std::size_t genus, IntMatrix entries);

  static SymplecticMatrix identity(std::size_t genus);

  std::size_t genus() const { return genus_; }
  const IntMatrix& entries() const { return entries_; }

  /// Exact integer inverse, M^{-1} = -J M^T J; no rational arithmetic needed.
  SymplecticMatrix inverse() const;

  friend SymplecticMatrix operator*(const SymplecticMatrix& a,
                                    const SymplecticMatrix& b);
  friend bool operator==(const SymplecticMatrix& a, const SymplecticMatrix& b) =
      default;

 private:
  std::size_t genus_;
  IntMatrix entries_;
};

/// Symplectic transvection along v: x -> x + w(x, v) v with w(x, y) = x^T J y.
/// As a matrix, I - v v^T J. Throws ZeroVector when v = 0.
SymplecticMatrix transvection(std::size_t genus, const std::vector<BigInt>& v);

/// Value of the signature cocycle; bounded by 2g in absolute value.
struct CocycleValue {
  int value = 0;

  friend bool operator==(const CocycleValue&, const CocycleValue&) = default;
};

/// Meyer's signature cocycle on a pair of symplectic matrices of equal genus.
///
/// The value is the signature of the pairing
///   <(x, y), (x', y')> = (x + y)^T J (I - B) y'
/// on V_{A,B} = { (x, y) : (A^{-1} - I) x + (B - I) y = 0 }, negated (the
/// fixed orientation convention; see meyer_sign_convention below). The
/// restricted pairing is symmetric by construction of V_{A,B}; asymmetry is
/// asserted, never repaired, and raises FormNotSymmetric.
CocycleValue meyer_cocycle(const SymplecticMatrix& a, const SymplecticMatrix& b);

/// Global sign applied to the raw signature of the V_{A,B} pairing. All five
/// cocycle axioms hold under either sign; -1 is the unique choice consistent
/// with the degree-d lasso values, pinning tau_1(T, T) = -1 for the positive
/// transvection T = [[1,1],[0,1]].
inline constexpr int meyer_sign_convention = -1;

/// Candidate Meyer-function values, queried at A, B, and AB.
using PhiMap =
    std::function<std::optional<Rational>(const SymplecticMatrix&)>;

/// True iff phi(AB) = phi(A) + phi(B) - tau(A, B) exactly. Throws
/// MissingValue when phi is undefined at A, B, or AB.
bool check_meyer_axioms(const SymplecticMatrix& a, const SymplecticMatrix& b,
                        const PhiMap& phi);

}  // namespace curvesig
