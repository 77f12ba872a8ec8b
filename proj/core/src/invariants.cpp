#include "curvesig/invariants.hpp"

#include <string>

#include "curvesig/errors.hpp"

namespace curvesig {

namespace {

void require_degree(int d, int minimum) {
  if (d < minimum)
    throw DegreeTooSmall("degree " + std::to_string(d) + " is below " +
                         std::to_string(minimum));
}

}  // namespace

long long genus(int d) {
  require_degree(d, 2);
  return static_cast<long long>(d - 1) * (d - 2) / 2;
}

long long moduli_dim(int d) {
  require_degree(d, 2);
  return static_cast<long long>(d + 2) * (d + 1) / 2 - 1;
}

long long discriminant_degree(int d) {
  require_degree(d, 2);
  return 3LL * (d - 1) * (d - 1);
}

long long h1_pi(int d) {
  require_degree(d, 2);
  long long sq = static_cast<long long>(d - 1) * (d - 1);
  return d % 3 == 0 ? 3 * sq : sq;
}

long long h1_complement(int d) {
  require_degree(d, 2);
  return 3LL * (d - 1) * (d - 1);
}

Rational lasso_value(int d) {
  require_degree(d, 2);
  if (d == 2)
    throw LassoUndefined(
        "lasso value undefined for d = 2: the family group is trivial");
  return {BigInt(-(d + 1)), BigInt(3 * (d - 1))};
}

DegreeProfile degree_profile(int d) {
  DegreeProfile p;
  p.d = d;
  p.genus = genus(d);
  p.ambient_dim_N = moduli_dim(d);
  p.discriminant_degree = discriminant_degree(d);
  p.h1_pi_order = h1_pi(d);
  p.h1_complement_order = h1_complement(d);
  if (d >= 3) p.lasso_value = lasso_value(d);
  return p;
}

}  // namespace curvesig
