#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "curvesig/rational.hpp"

namespace curvesig {

/// Exponent triple of a monomial x^l y^m z^n.
struct Monomial {
  int x = 0;
  int y = 0;
  int z = 0;

  int total() const { return x + y + z; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical global monomial order: graded lexicographic with x > y > z,
/// higher degree first. Fixed once; every coefficient vector in the library
/// (Veronese images, hyperplane coefficients) uses it.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    if (a.x != b.x) return a.x > b.x;
    if (a.y != b.y) return a.y > b.y;
    return a.z > b.z;
  }
};

/// The degree-d monomials in canonical order; size (d+2)(d+1)/2.
std::vector<Monomial> monomial_basis(int degree);

using CoefficientMap = std::map<Monomial, GaussianRational, MonomialOrder>;

/// Homogeneous polynomial of degree d >= 1 in x, y, z over Q(i); never the
/// zero polynomial. Zero coefficients are not stored.
class HomogPoly {
 public:
  /// Validates that every exponent triple sums to `degree` and that at least
  /// one coefficient is nonzero.
  HomogPoly(int degree, CoefficientMap coefficients);

  /// Parses a polynomial expression in x, y, z with Gaussian-rational
  /// coefficients: sums of terms like `1/2*x^2*y`, `i*z^3`, parenthesized
  /// subexpressions and products such as `y^2*z-x^2*(x+z)`. ASCII `-` and
  /// the unicode minus sign are both accepted. Throws ParseError on
  /// malformed input, inhomogeneous results, constants, and zero.
  static HomogPoly parse(std::string_view text);

  int degree() const { return degree_; }
  const CoefficientMap& coefficients() const { return coeffs_; }

  /// Coefficient of the given monomial; zero when absent.
  GaussianRational coefficient(const Monomial& m) const;

  friend bool operator==(const HomogPoly& a, const HomogPoly& b) = default;

  std::string str() const;

 private:
  int degree_;
  CoefficientMap coeffs_;
};

/// Parses a constant expression over Q(i), e.g. "3/4", "-1+2*i", "i".
/// Same grammar as HomogPoly::parse restricted to degree zero.
GaussianRational parse_gaussian_scalar(std::string_view text);

}  // namespace curvesig
