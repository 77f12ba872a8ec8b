#pragma once

#include <optional>

#include "curvesig/rational.hpp"

namespace curvesig {

/// Genus of a non-singular plane curve of degree d: (d-1)(d-2)/2.
long long genus(int d);

/// Dimension N of the projective space of degree-d forms: (d+2)(d+1)/2 - 1.
long long moduli_dim(int d);

/// Degree of the discriminant hypersurface: 3(d-1)^2. Equals the number of
/// singular fibers of a generic pencil of degree-d curves.
long long discriminant_degree(int d);

/// Order of the cyclic first homology of the degree-d curve family group:
/// 3(d-1)^2 when d = 0 mod 3, else (d-1)^2.
long long h1_pi(int d);

/// Order of the cyclic first homology of the discriminant complement in the
/// space of degree-d forms: 3(d-1)^2 for every d.
long long h1_complement(int d);

/// Value of the Meyer function on a lasso around the discriminant:
/// -(d+1)/(3(d-1)). Throws LassoUndefined for d = 2, where the family group
/// is trivial and no lasso value exists.
Rational lasso_value(int d);

/// All closed-form invariants of one degree, the serialization unit of the
/// `invariants` CLI command. The h1 field is split in two because the two
/// homology orders differ by the quotient factor 3 when d is not divisible
/// by 3.
struct DegreeProfile {
  int d = 0;
  long long genus = 0;
  long long ambient_dim_N = 0;
  long long discriminant_degree = 0;
  long long h1_pi_order = 0;
  long long h1_complement_order = 0;
  std::optional<Rational> lasso_value;  // empty exactly when d = 2
};

DegreeProfile degree_profile(int d);

}  // namespace curvesig
