#include "curvesig/rational.hpp"

#include <ostream>
#include <utility>

namespace curvesig {

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw DomainError("division by zero rational");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

Rational Rational::parse(std::string_view text) {
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+'))
      t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text))
      throw ParseError("invalid rational: '" + std::string(text) + "'");
    return Rational(BigInt(std::string(text)));
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw ParseError("invalid rational: '" + std::string(text) + "'");
  BigInt d{std::string(den)};
  if (d == 0) throw ParseError("rational with zero denominator");
  return {BigInt(std::string(num)), std::move(d)};
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm();
  if (n.is_zero()) throw DomainError("division by zero in Q(i)");
  // a/b = a * conj(b) / |b|^2
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string im_part = im_.str() + "*i";
  if (re_.is_zero()) return im_part;
  if (im_.sign() > 0) return re_.str() + "+" + im_part;
  return re_.str() + im_part;  // im_part already carries the minus sign
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& v) {
  return os << v.str();
}

}  // namespace curvesig
