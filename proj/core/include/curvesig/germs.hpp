#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "curvesig/rational.hpp"

namespace curvesig {

enum class GermTag { TypeI, Hyperelliptic, TypeII, Custom };

const char* to_string(GermTag t);

/// A fiber-germ type in the genus-3 local-signature calculus: its Euler
/// contribution, local signature, Meyer-function value on the boundary loop,
/// and the signature of the fiber neighborhood. The defining relation
/// loc_sig = phi_value + sign_neighborhood holds for every instance.
class GermType {
 public:
  /// Nodal degeneration: Euler +1, local signature -5/9, neighborhood
  /// signature 0.
  static const GermType& type_i();
  /// Degeneration to a double conic with smooth hyperelliptic resolution:
  /// topologically trivial, Euler 0, local signature 4/9.
  static const GermType& hyperelliptic();
  /// Elliptic curve glued to a cuspidal genus-2 curve: Euler +1, local
  /// signature 1/3, neighborhood signature -1, so phi = 4/3.
  static const GermType& type_ii();

  /// User-defined germ. Throws DomainError unless
  /// loc_sig = phi_value + sign_neighborhood.
  static GermType custom(long long euler_contribution, Rational loc_sig,
                         Rational phi_value, long long sign_neighborhood);

  /// The nodal germ of the degree-d family, with loc_sig = lasso_value(d);
  /// an extension used for cross-degree consistency, the calculus proper is
  /// the d = 4 table above. Throws LassoUndefined for d = 2.
  static GermType type_i_at_degree(int d);

  GermTag tag() const { return tag_; }
  long long euler_contribution() const { return euler_; }
  const Rational& loc_sig() const { return loc_sig_; }
  const Rational& phi_value() const { return phi_; }
  long long sign_neighborhood() const { return sign_nbhd_; }

  friend bool operator==(const GermType&, const GermType&) = default;

 private:
  GermType(GermTag tag, long long euler, Rational loc_sig, Rational phi,
           long long sign_nbhd);

  GermTag tag_;
  long long euler_;
  Rational loc_sig_;
  Rational phi_;
  long long sign_nbhd_;
};

/// The three built-in germ types, in the order type I, hyperelliptic,
/// type II.
const std::array<GermType, 3>& germ_table();

/// A germ type with a multiplicity; count >= 0.
struct GermCount {
  GermType type;
  long long count = 0;
};

/// Multiset of fiber germs of a fibration; empty means no singular fibers.
using GermList = std::vector<GermCount>;

struct TotalSignature {
  Rational value;
  /// Integral totals are required of actual closed fibrations.
  bool is_integral = false;
};

/// Sum of count * loc_sig over the list.
TotalSignature total_signature(const GermList& germs);

/// The local signature each of `unknown_count` identical unaccounted germs
/// must carry for the listed germs plus the unknowns to sum to total_sign.
Rational solve_unknown(const Rational& total_sign, const GermList& known,
                       long long unknown_count);

/// Number of nodal fibers from the Euler count of the total space:
/// c2 - 2(2 - 2 genus) - other_euler. Throws NegativeCount when the
/// arithmetic yields a negative number.
long long typeI_count_from_euler(long long c2, long long genus,
                                 long long other_euler);

/// Meyer-function value recovered from a germ: loc_sig - sign_neighborhood.
Rational phi_from_locsig(const GermType& t);

/// Parses the germ-list JSON: an array of
///   {"type": "type_i" | "hyperelliptic" | "type_ii" | "custom",
///    "count": n, "euler": e?, "loc_sig": "p/q"?, "phi": "p/q"?,
///    "sign_nbhd": s?}
/// with rationals as "p/q" strings. For custom germs, euler and sign_nbhd
/// default to 0 and whichever of loc_sig / phi is absent is derived from the
/// other; giving neither is an error, and giving both inconsistently is too.
/// Throws ParseError on malformed JSON and MissingValue on absent fields.
GermList parse_germ_list(std::string_view json_text);

}  // namespace curvesig
