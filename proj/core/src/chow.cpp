#include "curvesig/chow.hpp"

#include "curvesig/errors.hpp"

namespace curvesig {

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
  ChowClass r;
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 2; ++j)
      r.coeff_[i][j] = a.coeff_[i][j] + b.coeff_[i][j];
  return r;
}

ChowClass operator-(const ChowClass& a, const ChowClass& b) {
  ChowClass r;
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 2; ++j)
      r.coeff_[i][j] = a.coeff_[i][j] - b.coeff_[i][j];
  return r;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  ChowClass r;
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 2; ++j) {
      if (a.coeff_[i][j] == 0) continue;
      for (int k = 0; k <= 1; ++k)
        for (int l = 0; l <= 2; ++l) {
          if (i + k > 1 || j + l > 2) continue;  // xi1^2 = 0, xi2^3 = 0
          r.coeff_[i + k][j + l] += a.coeff_[i][j] * b.coeff_[k][l];
        }
    }
  return r;
}

ChowClass operator*(long long s, const ChowClass& a) {
  ChowClass r;
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 2; ++j) r.coeff_[i][j] = s * a.coeff_[i][j];
  return r;
}

ChowClass multiply(const ChowClass& u, const ChowClass& v) { return u * v; }

long long degree(const ChowClass& u) { return u.coeff(1, 2); }

std::string ChowClass::str() const {
  std::string out;
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 2; ++j) {
      long long c = coeff_[i][j];
      if (c == 0) continue;
      if (!out.empty()) out += c > 0 ? " + " : " - ";
      else if (c < 0) out += "-";
      long long mag = c < 0 ? -c : c;
      std::string monomial;
      if (i == 1) monomial += "xi1";
      if (j >= 1) {
        if (!monomial.empty()) monomial += "*";
        monomial += j == 1 ? "xi2" : "xi2^2";
      }
      if (mag != 1 || monomial.empty()) {
        out += std::to_string(mag);
        if (!monomial.empty()) out += "*";
      }
      out += monomial;
    }
  return out.empty() ? "0" : out;
}

SignatureResult hirzebruch_signature(long long c1_squared, long long c2) {
  Rational value{BigInt(c1_squared - 2 * c2), BigInt(3)};
  bool integral = value.is_integer();
  return {std::move(value), integral};
}

ChernNumbers hypersurface_chern(long long a, long long b) {
  if (a < 0 || b < 0)
    throw DomainError("bidegree components must be non-negative");
  if (a == 0 && b == 0) throw ZeroBidegree("bidegree (0, 0) has no divisor");

  const ChowClass xi1 = ChowClass::xi1();
  const ChowClass xi2 = ChowClass::xi2();

  const ChowClass divisor = a * xi1 + b * xi2;               // c1([M])
  const ChowClass c1 = (2 - a) * xi1 + (3 - b) * xi2;        // c1(M)|ambient
  const ChowClass c2_ambient = 3 * (xi2 * xi2) + 6 * (xi1 * xi2);

  ChernNumbers out;
  out.c1_squared = degree(c1 * c1 * divisor);
  out.c2 = degree((c2_ambient - c1 * divisor) * divisor);
  SignatureResult sig = hirzebruch_signature(out.c1_squared, out.c2);
  out.signature = std::move(sig.value);
  out.signature_integral = sig.is_integral;
  return out;
}

}  // namespace curvesig
