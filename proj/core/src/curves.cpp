#include "curvesig/curves.hpp"

#include <utility>

#include "curvesig/errors.hpp"

namespace curvesig {

namespace {

GaussianRational power(const GaussianRational& base, int e) {
  GaussianRational acc(1);
  for (int k = 0; k < e; ++k) acc *= base;
  return acc;
}

// Evaluates d^(dx+dy+dz) F / dx^dx dy^dy dz^dz at p, term by term; no
// derivative polynomial is materialized, so vanishing derivatives need no
// special case.
GaussianRational evaluate_partial(const HomogPoly& f, int dx, int dy, int dz,
                                  const ProjPoint& p) {
  auto falling = [](int e, int k) {
    long long acc = 1;
    for (int i = 0; i < k; ++i) acc *= e - i;
    return acc;
  };
  GaussianRational total;
  for (const auto& [m, c] : f.coefficients()) {
    if (m.x < dx || m.y < dy || m.z < dz) continue;
    long long scale = falling(m.x, dx) * falling(m.y, dy) * falling(m.z, dz);
    GaussianRational term = c * GaussianRational(Rational(scale));
    term *= power(p.x(), m.x - dx);
    term *= power(p.y(), m.y - dy);
    term *= power(p.z(), m.z - dz);
    total += term;
  }
  return total;
}

}  // namespace

ProjPoint::ProjPoint(GaussianRational x, GaussianRational y, GaussianRational z)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
  if (x_.is_zero() && y_.is_zero() && z_.is_zero())
    throw DomainError("projective point with all coordinates zero");
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
  return (a.x_ * b.y_ - a.y_ * b.x_).is_zero() &&
         (a.x_ * b.z_ - a.z_ * b.x_).is_zero() &&
         (a.y_ * b.z_ - a.z_ * b.y_).is_zero();
}

std::string ProjPoint::str() const {
  return "[" + x_.str() + ":" + y_.str() + ":" + z_.str() + "]";
}

const char* to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::Smooth:
      return "smooth";
    case SingularityClass::Nodal:
      return "nodal";
    case SingularityClass::Degenerate:
      return "degenerate";
  }
  return "?";
}

GaussianRational evaluate(const HomogPoly& f, const ProjPoint& p) {
  return evaluate_partial(f, 0, 0, 0, p);
}

std::array<GaussianRational, 3> gradient(const HomogPoly& f,
                                         const ProjPoint& p) {
  return {evaluate_partial(f, 1, 0, 0, p), evaluate_partial(f, 0, 1, 0, p),
          evaluate_partial(f, 0, 0, 1, p)};
}

bool is_singular_point(const HomogPoly& f, const ProjPoint& p) {
  auto g = gradient(f, p);
  return g[0].is_zero() && g[1].is_zero() && g[2].is_zero();
}

SingularityClass classify_double_point(const HomogPoly& f, const ProjPoint& p) {
  if (!is_singular_point(f, p))
    throw NotASingularPoint("gradient does not vanish at " + p.str());

  // Chart of the largest-modulus coordinate, ties broken z > y > x.
  const Rational nx = p.x().norm(), ny = p.y().norm(), nz = p.z().norm();
  int chart;  // 0 = x, 1 = y, 2 = z
  if (nz >= ny && nz >= nx)
    chart = 2;
  else if (ny >= nx)
    chart = 1;
  else
    chart = 0;

  const GaussianRational& scale =
      chart == 0 ? p.x() : (chart == 1 ? p.y() : p.z());
  ProjPoint q(p.x() / scale, p.y() / scale, p.z() / scale);

  // 2x2 Hessian of the dehomogenization in the two remaining variables.
  GaussianRational h00, h01, h11;
  switch (chart) {
    case 2:  // variables (x, y)
      h00 = evaluate_partial(f, 2, 0, 0, q);
      h01 = evaluate_partial(f, 1, 1, 0, q);
      h11 = evaluate_partial(f, 0, 2, 0, q);
      break;
    case 1:  // variables (x, z)
      h00 = evaluate_partial(f, 2, 0, 0, q);
      h01 = evaluate_partial(f, 1, 0, 1, q);
      h11 = evaluate_partial(f, 0, 0, 2, q);
      break;
    default:  // variables (y, z)
      h00 = evaluate_partial(f, 0, 2, 0, q);
      h01 = evaluate_partial(f, 0, 1, 1, q);
      h11 = evaluate_partial(f, 0, 0, 2, q);
      break;
  }
  GaussianRational det = h00 * h11 - h01 * h01;
  return det.is_zero() ? SingularityClass::Degenerate : SingularityClass::Nodal;
}

std::vector<GaussianRational> veronese(const ProjPoint& p, int degree) {
  if (degree < 1) throw DegreeTooSmall("veronese needs degree >= 1");
  std::vector<GaussianRational> out;
  for (const Monomial& m : monomial_basis(degree))
    out.push_back(power(p.x(), m.x) * power(p.y(), m.y) * power(p.z(), m.z));
  return out;
}

std::vector<GaussianRational> discriminant_tangent_hyperplane(
    const ProjPoint& p, int degree) {
  if (degree < 2) throw DegreeTooSmall("tangent hyperplane needs degree >= 2");
  return veronese(p, degree);
}

GaussianRational det3(const GaussianMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3)
    throw DimensionMismatch("det3 needs a 3x3 matrix");
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

HomogPoly gl3_act(const GaussianMatrix& a, const HomogPoly& f) {
  if (a.rows() != 3 || a.cols() != 3)
    throw DimensionMismatch("action needs a 3x3 matrix");
  if (det3(a).is_zero()) throw SingularMatrix("action of a singular matrix");
  const GaussianMatrix inv = invert(a);

  // Row i of A^{-1} is the linear form substituted for the i-th variable.
  std::array<CoefficientMap, 3> forms;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (inv(i, j).is_zero()) continue;
      Monomial var{j == 0 ? 1 : 0, j == 1 ? 1 : 0, j == 2 ? 1 : 0};
      forms[i][var] = inv(i, j);
    }
  }

  auto poly_mul = [](const CoefficientMap& u, const CoefficientMap& v) {
    CoefficientMap r;
    for (const auto& [mu, cu] : u)
      for (const auto& [mv, cv] : v) {
        Monomial m{mu.x + mv.x, mu.y + mv.y, mu.z + mv.z};
        GaussianRational s = r[m] + cu * cv;
        if (s.is_zero())
          r.erase(m);
        else
          r[m] = std::move(s);
      }
    return r;
  };

  CoefficientMap result;
  for (const auto& [m, c] : f.coefficients()) {
    CoefficientMap term;
    term[{0, 0, 0}] = c;
    for (int k = 0; k < m.x; ++k) term = poly_mul(term, forms[0]);
    for (int k = 0; k < m.y; ++k) term = poly_mul(term, forms[1]);
    for (int k = 0; k < m.z; ++k) term = poly_mul(term, forms[2]);
    for (auto& [tm, tc] : term) {
      GaussianRational s = result[tm] + tc;
      if (s.is_zero())
        result.erase(tm);
      else
        result[tm] = std::move(s);
    }
  }
  return {f.degree(), std::move(result)};
}

GaussianMatrix conic_matrix(const HomogPoly& f) {
  if (f.degree() != 2)
    throw WrongDegree("conic matrix of a degree-" +
                      std::to_string(f.degree()) + " polynomial");
  const GaussianRational half{Rational{BigInt(1), BigInt(2)}};
  GaussianMatrix s(3, 3);
  s(0, 0) = f.coefficient({2, 0, 0});
  s(1, 1) = f.coefficient({0, 2, 0});
  s(2, 2) = f.coefficient({0, 0, 2});
  s(0, 1) = s(1, 0) = half * f.coefficient({1, 1, 0});
  s(0, 2) = s(2, 0) = half * f.coefficient({1, 0, 1});
  s(1, 2) = s(2, 1) = half * f.coefficient({0, 1, 1});
  return s;
}

bool conic_is_smooth(const HomogPoly& f) {
  return !det3(conic_matrix(f)).is_zero();
}

}  // namespace curvesig
