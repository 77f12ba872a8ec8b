#pragma once

#include <array>
#include <vector>

#include "curvesig/matrix.hpp"
#include "curvesig/poly.hpp"
#include "curvesig/rational.hpp"

namespace curvesig {

/// Point of the projective plane over Q(i), stored as a representative
/// triple; not all coordinates may vanish. Equality is proportionality.
class ProjPoint {
 public:
  ProjPoint(GaussianRational x, GaussianRational y, GaussianRational z);

  const GaussianRational& x() const { return x_; }
  const GaussianRational& y() const { return y_; }
  const GaussianRational& z() const { return z_; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b);

  std::string str() const;

 private:
  GaussianRational x_, y_, z_;
};

enum class SingularityClass { Smooth, Nodal, Degenerate };

const char* to_string(SingularityClass c);

/// F evaluated at the stored representative of p; well defined up to the
/// d-th power of a rescaling of p.
GaussianRational evaluate(const HomogPoly& f, const ProjPoint& p);

/// (F_x, F_y, F_z) at p. Satisfies the Euler identity
/// d F(p) = x F_x + y F_y + z F_z.
std::array<GaussianRational, 3> gradient(const HomogPoly& f,
                                         const ProjPoint& p);

/// True iff the gradient vanishes at p; F(p) = 0 then follows from the
/// Euler identity.
bool is_singular_point(const HomogPoly& f, const ProjPoint& p);

/// Hessian test at a singular point. The point is moved to the affine chart
/// of its largest-modulus coordinate (ties broken z > y > x), and the 2x2
/// Hessian determinant of the dehomogenized polynomial decides: nonzero is
/// Nodal, zero is Degenerate. Throws NotASingularPoint when the gradient
/// does not vanish at p.
SingularityClass classify_double_point(const HomogPoly& f, const ProjPoint& p);

/// All degree-d monomials evaluated at p, in the canonical monomial order;
/// length (d+2)(d+1)/2, never the zero vector.
std::vector<GaussianRational> veronese(const ProjPoint& p, int degree);

/// Coefficient vector of the hyperplane tangent to the discriminant at the
/// family whose curve is singular exactly at p. Componentwise equal to
/// veronese(p, d). The caller asserts that p is the unique nodal singular
/// point of some member family; that hypothesis is not checkable from p
/// alone.
std::vector<GaussianRational> discriminant_tangent_hyperplane(
    const ProjPoint& p, int degree);

/// Linear substitution (A . F)(v) = F(A^{-1} v) for invertible 3x3 A; exact
/// expansion, degree preserved. Throws SingularMatrix when det A = 0.
HomogPoly gl3_act(const GaussianMatrix& a, const HomogPoly& f);

/// Determinant of a 3x3 matrix over Q(i).
GaussianRational det3(const GaussianMatrix& m);

/// Symmetric matrix S of a degree-2 form, F(v) = v^T S v, with off-diagonal
/// coefficients halved. Throws WrongDegree unless deg F = 2.
GaussianMatrix conic_matrix(const HomogPoly& f);

/// True iff det S != 0, i.e. the conic is smooth.
bool conic_is_smooth(const HomogPoly& f);

}  // namespace curvesig
