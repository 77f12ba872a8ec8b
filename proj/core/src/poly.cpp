#include "curvesig/poly.hpp"

#include <cctype>
#include <utility>

#include "curvesig/errors.hpp"

namespace curvesig {

std::vector<Monomial> monomial_basis(int degree) {
  std::vector<Monomial> basis;
  basis.reserve(static_cast<std::size_t>(degree + 2) * (degree + 1) / 2);
  for (int l = degree; l >= 0; --l)
    for (int m = degree - l; m >= 0; --m)
      basis.push_back({l, m, degree - l - m});
  return basis;
}

HomogPoly::HomogPoly(int degree, CoefficientMap coefficients)
    : degree_(degree), coeffs_(std::move(coefficients)) {
  if (degree_ < 1) throw DomainError("polynomial degree must be at least 1");
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second.is_zero()) {
      it = coeffs_.erase(it);
      continue;
    }
    if (it->first.x < 0 || it->first.y < 0 || it->first.z < 0 ||
        it->first.total() != degree_)
      throw DomainError("monomial degree does not match polynomial degree");
    ++it;
  }
  if (coeffs_.empty()) throw DomainError("zero polynomial");
}

GaussianRational HomogPoly::coefficient(const Monomial& m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? GaussianRational{} : it->second;
}

std::string HomogPoly::str() const {
  std::string out;
  for (const auto& [mono, coeff] : coeffs_) {
    std::string cs = coeff.str();
    bool negative_real = coeff.is_real() && coeff.re().sign() < 0;
    if (out.empty()) {
      if (negative_real) {
        out += "-";
        cs = (-coeff).str();
      }
    } else {
      out += negative_real ? "-" : "+";
      if (negative_real) cs = (-coeff).str();
    }
    bool needs_parens = !coeff.is_real() && !coeff.re().is_zero();
    std::string monomial;
    auto append_var = [&monomial](char v, int e) {
      if (e == 0) return;
      if (!monomial.empty()) monomial += "*";
      monomial += v;
      if (e > 1) monomial += "^" + std::to_string(e);
    };
    append_var('x', mono.x);
    append_var('y', mono.y);
    append_var('z', mono.z);
    bool unit = cs == "1";
    if (monomial.empty()) {
      out += needs_parens ? "(" + cs + ")" : cs;
    } else if (unit) {
      out += monomial;
    } else {
      out += (needs_parens ? "(" + cs + ")" : cs) + "*" + monomial;
    }
  }
  return out;
}

namespace {

// Possibly inhomogeneous polynomial over Q(i), the parser's working value.
using SparsePoly = std::map<Monomial, GaussianRational, MonomialOrder>;

SparsePoly constant(GaussianRational c) {
  SparsePoly p;
  if (!c.is_zero()) p[{0, 0, 0}] = std::move(c);
  return p;
}

SparsePoly add(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r = a;
  for (const auto& [m, c] : b) {
    GaussianRational s = r[m] + c;
    if (s.is_zero())
      r.erase(m);
    else
      r[m] = std::move(s);
  }
  return r;
}

SparsePoly negate(const SparsePoly& a) {
  SparsePoly r;
  for (const auto& [m, c] : a) r[m] = -c;
  return r;
}

SparsePoly mul(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m{ma.x + mb.x, ma.y + mb.y, ma.z + mb.z};
      GaussianRational s = r[m] + ca * cb;
      if (s.is_zero())
        r.erase(m);
      else
        r[m] = std::move(s);
    }
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view text) { normalize(text); }

  SparsePoly run() {
    SparsePoly p = expr();
    skip_space();
    if (pos_ != src_.size())
      throw ParseError("unexpected trailing input at '" + rest() + "'");
    return p;
  }

 private:
  // Replaces the unicode minus sign with '-' so both spellings parse.
  void normalize(std::string_view text) {
    for (std::size_t i = 0; i < text.size();) {
      if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
          static_cast<unsigned char>(text[i + 1]) == 0x88 &&
          static_cast<unsigned char>(text[i + 2]) == 0x92) {
        src_ += '-';
        i += 3;
      } else {
        src_ += text[i];
        ++i;
      }
    }
  }

  void skip_space() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  std::string rest() const { return src_.substr(pos_); }

  SparsePoly expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    SparsePoly acc = term();
    if (neg) acc = negate(acc);
    for (;;) {
      if (eat('+'))
        acc = add(acc, term());
      else if (eat('-'))
        acc = add(acc, negate(term()));
      else
        return acc;
    }
  }

  SparsePoly term() {
    SparsePoly acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = mul(acc, factor());
      } else if (eat('/')) {
        SparsePoly divisor = factor();
        GaussianRational c = as_constant(divisor);
        if (c.is_zero()) throw ParseError("division by zero");
        acc = mul(acc, constant(GaussianRational(1) / c));
      } else {
        return acc;
      }
    }
  }

  SparsePoly factor() {
    SparsePoly base_poly = base();
    if (eat('^')) {
      long long e = integer_literal();
      if (e < 0) throw ParseError("negative exponent");
      if (e > 64) throw ParseError("exponent too large");
      SparsePoly acc = constant(GaussianRational(1));
      for (long long k = 0; k < e; ++k) acc = mul(acc, base_poly);
      return acc;
    }
    return base_poly;
  }

  SparsePoly base() {
    char c = peek();
    if (c == '(') {
      eat('(');
      SparsePoly inner = expr();
      if (!eat(')')) throw ParseError("missing ')' near '" + rest() + "'");
      return inner;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      SparsePoly p;
      Monomial m{c == 'x' ? 1 : 0, c == 'y' ? 1 : 0, c == 'z' ? 1 : 0};
      p[m] = GaussianRational(1);
      return p;
    }
    if (c == 'i') {
      ++pos_;
      return constant(GaussianRational::i());
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return constant(GaussianRational(Rational(BigInt(digits()))));
    throw ParseError("unexpected input at '" + rest() + "'");
  }

  long long integer_literal() {
    skip_space();
    bool neg = eat('-');
    skip_space();
    if (pos_ >= src_.size() ||
        !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      throw ParseError("expected integer at '" + rest() + "'");
    long long v = 0;
    for (char d : digits()) v = v * 10 + (d - '0');
    return neg ? -v : v;
  }

  std::string digits() {
    std::string out;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_])))
      out += src_[pos_++];
    if (out.empty()) throw ParseError("expected digits at '" + rest() + "'");
    return out;
  }

  static GaussianRational as_constant(const SparsePoly& p) {
    if (p.empty()) return {};
    if (p.size() != 1 || !(p.begin()->first == Monomial{}))
      throw ParseError("division by a non-constant polynomial");
    return p.begin()->second;
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

HomogPoly HomogPoly::parse(std::string_view text) {
  SparsePoly p = Parser(text).run();
  if (p.empty()) throw ParseError("polynomial is zero");
  int degree = p.begin()->first.total();
  for (const auto& [m, c] : p)
    if (m.total() != degree)
      throw ParseError("polynomial is not homogeneous");
  if (degree < 1) throw ParseError("polynomial is constant");
  CoefficientMap coeffs;
  for (auto& [m, c] : p) coeffs.emplace(m, std::move(c));
  return {degree, std::move(coeffs)};
}

GaussianRational parse_gaussian_scalar(std::string_view text) {
  SparsePoly p = Parser(text).run();
  if (p.empty()) return {};
  if (p.size() != 1 || !(p.begin()->first == Monomial{}))
    throw ParseError("expected a constant, got a polynomial");
  return p.begin()->second;
}

}  // namespace curvesig
