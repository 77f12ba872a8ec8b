#pragma once

#include <array>
#include <string>

#include "curvesig/rational.hpp"

namespace curvesig {

/// Element of the truncated ring Z[xi1, xi2] / (xi1^2, xi2^3), the integral
/// cohomology of P^1 x P^2 with xi_i the hyperplane class pulled back from
/// the i-th factor.
class ChowClass {
 public:
  ChowClass() : coeff_{} {}

  static ChowClass unit(long long c) {
    ChowClass u;
    u.coeff_[0][0] = c;
    return u;
  }
  static ChowClass xi1() {
    ChowClass u;
    u.coeff_[1][0] = 1;
    return u;
  }
  static ChowClass xi2() {
    ChowClass u;
    u.coeff_[0][1] = 1;
    return u;
  }

  /// Coefficient of xi1^i xi2^j, 0 <= i <= 1, 0 <= j <= 2.
  long long coeff(int i, int j) const { return coeff_[i][j]; }
  void set_coeff(int i, int j, long long c) { coeff_[i][j] = c; }

  friend bool operator==(const ChowClass&, const ChowClass&) = default;

  friend ChowClass operator+(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator-(const ChowClass& a, const ChowClass& b);
  /// Product with monomials past the truncation degree dropped.
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(long long s, const ChowClass& a);

  std::string str() const;

 private:
  std::array<std::array<long long, 3>, 2> coeff_;
};

ChowClass multiply(const ChowClass& u, const ChowClass& v);

/// Kronecker pairing with the fundamental class: the coefficient of
/// xi1 xi2^2.
long long degree(const ChowClass& u);

/// Signature from Chern numbers, (c1^2 - 2 c2) / 3, kept as an exact
/// rational. is_integral is false when the inputs cannot be the Chern
/// numbers of a closed complex surface; callers report rather than throw.
struct SignatureResult {
  Rational value;
  bool is_integral = false;
};

SignatureResult hirzebruch_signature(long long c1_squared, long long c2);

/// Chern numbers of a smooth hypersurface of bidegree (a, b) in P^1 x P^2.
struct ChernNumbers {
  long long c1_squared = 0;
  long long c2 = 0;
  Rational signature;
  bool signature_integral = false;
};

/// Adjunction-formula Chern numbers for the bidegree-(a, b) hypersurface:
/// c1(M) = ((2-a) xi1 + (3-b) xi2)|_M restricted from
/// c1(P^1 x P^2) - c1([M]), and c2(M) from c2(P^1 x P^2) - c1(M) c1([M]).
/// Throws ZeroBidegree on (0, 0); components must be non-negative.
ChernNumbers hypersurface_chern(long long a, long long b);

}  // namespace curvesig
