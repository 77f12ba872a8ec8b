#include "curvesig/germs.hpp"

#include <json.hpp>

#include <utility>

#include "curvesig/errors.hpp"
#include "curvesig/invariants.hpp"

namespace curvesig {

const char* to_string(GermTag t) {
  switch (t) {
    case GermTag::TypeI:
      return "type_i";
    case GermTag::Hyperelliptic:
      return "hyperelliptic";
    case GermTag::TypeII:
      return "type_ii";
    case GermTag::Custom:
      return "custom";
  }
  return "?";
}

GermType::GermType(GermTag tag, long long euler, Rational loc_sig,
                   Rational phi, long long sign_nbhd)
    : tag_(tag),
      euler_(euler),
      loc_sig_(std::move(loc_sig)),
      phi_(std::move(phi)),
      sign_nbhd_(sign_nbhd) {
  if (loc_sig_ != phi_ + Rational(sign_nbhd_))
    throw DomainError(
        "germ violates loc_sig = phi_value + sign_neighborhood");
}

const GermType& GermType::type_i() {
  static const GermType g{GermTag::TypeI, 1,
                          Rational{BigInt(-5), BigInt(9)},
                          Rational{BigInt(-5), BigInt(9)}, 0};
  return g;
}

const GermType& GermType::hyperelliptic() {
  static const GermType g{GermTag::Hyperelliptic, 0,
                          Rational{BigInt(4), BigInt(9)},
                          Rational{BigInt(4), BigInt(9)}, 0};
  return g;
}

const GermType& GermType::type_ii() {
  static const GermType g{GermTag::TypeII, 1,
                          Rational{BigInt(1), BigInt(3)},
                          Rational{BigInt(4), BigInt(3)}, -1};
  return g;
}

GermType GermType::custom(long long euler_contribution, Rational loc_sig,
                          Rational phi_value, long long sign_neighborhood) {
  return {GermTag::Custom, euler_contribution, std::move(loc_sig),
          std::move(phi_value), sign_neighborhood};
}

GermType GermType::type_i_at_degree(int d) {
  Rational v = lasso_value(d);
  return {GermTag::Custom, 1, v, v, 0};
}

const std::array<GermType, 3>& germ_table() {
  static const std::array<GermType, 3> table{
      GermType::type_i(), GermType::hyperelliptic(), GermType::type_ii()};
  return table;
}

TotalSignature total_signature(const GermList& germs) {
  Rational total;
  for (const GermCount& g : germs) {
    if (g.count < 0) throw NegativeCount("germ count is negative");
    total += Rational(g.count) * g.type.loc_sig();
  }
  bool integral = total.is_integer();
  return {std::move(total), integral};
}

Rational solve_unknown(const Rational& total_sign, const GermList& known,
                       long long unknown_count) {
  if (unknown_count < 1)
    throw DomainError("unknown germ count must be at least 1");
  return (total_sign - total_signature(known).value) /
         Rational(unknown_count);
}

long long typeI_count_from_euler(long long c2, long long genus,
                                 long long other_euler) {
  long long count = c2 - 2 * (2 - 2 * genus) - other_euler;
  if (count < 0)
    throw NegativeCount("Euler arithmetic yields " + std::to_string(count) +
                        " nodal fibers");
  return count;
}

Rational phi_from_locsig(const GermType& t) {
  return t.loc_sig() - Rational(t.sign_neighborhood());
}

namespace {

Rational rational_field(const nlohmann::json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (v.is_number_integer()) return {v.get<long long>()};
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw ParseError(std::string("field '") + key +
                   "' must be an integer or a \"p/q\" string");
}

GermType custom_from_json(const nlohmann::json& obj) {
  long long euler = obj.value("euler", 0LL);
  long long sign_nbhd = obj.value("sign_nbhd", 0LL);
  const bool has_loc = obj.contains("loc_sig");
  const bool has_phi = obj.contains("phi");
  if (!has_loc && !has_phi)
    throw MissingValue("custom germ needs loc_sig or phi");
  Rational loc_sig, phi;
  if (has_loc) loc_sig = rational_field(obj, "loc_sig");
  if (has_phi) phi = rational_field(obj, "phi");
  if (!has_phi) phi = loc_sig - Rational(sign_nbhd);
  if (!has_loc) loc_sig = phi + Rational(sign_nbhd);
  return GermType::custom(euler, std::move(loc_sig), std::move(phi),
                          sign_nbhd);
}

}  // namespace

GermList parse_germ_list(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("germ list is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("germ list must be a JSON array");

  GermList out;
  try {
    for (const auto& obj : doc) {
      if (!obj.is_object())
        throw ParseError("germ entries must be JSON objects");
      if (!obj.contains("type")) throw MissingValue("germ entry lacks type");
      if (!obj.contains("count")) throw MissingValue("germ entry lacks count");
      const std::string type = obj.at("type").get<std::string>();
      const long long count = obj.at("count").get<long long>();
      if (count < 0) throw NegativeCount("germ count is negative");
      if (type == "type_i")
        out.push_back({GermType::type_i(), count});
      else if (type == "hyperelliptic")
        out.push_back({GermType::hyperelliptic(), count});
      else if (type == "type_ii")
        out.push_back({GermType::type_ii(), count});
      else if (type == "custom")
        out.push_back({custom_from_json(obj), count});
      else
        throw ParseError("unknown germ type '" + type + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed germ entry: ") + e.what());
  }
  return out;
}

}  // namespace curvesig
