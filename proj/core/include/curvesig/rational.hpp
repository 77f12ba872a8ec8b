#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "curvesig/errors.hpp"

namespace curvesig {

/// Arbitrary-precision integer. Entries of cocycle Gram matrices and
/// substituted polynomial coefficients grow without bound, so every exact
/// scalar in the library is built on this type.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always kept reduced with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  /// -1, 0, or +1.
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Renders "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  /// Parses "p", "p/q", or "-p/q". Throws ParseError on anything else.
  static Rational parse(std::string_view text);

 private:
  void reduce();

  BigInt num_;
  BigInt den_;  // > 0
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

/// Element of Q(i). Coordinates of curve points are frequently complex,
/// so the polynomial layer works over this field throughout.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(int n) : re_(n) {}                    // NOLINT
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2, the square modulus; rational and non-negative.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a,
                                    const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a,
                                    const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a,
                                    const GaussianRational& b) {
    return a *= b;
  }
  friend GaussianRational operator/(GaussianRational a,
                                    const GaussianRational& b) {
    return a /= b;
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Renders "p/q", "r/s*i", or "p/q+r/s*i" (minus sign absorbed into r).
  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& v);

}  // namespace curvesig
