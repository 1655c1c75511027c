#include "loopalg/ratfun.hpp"

namespace loopalg {

void RatFun::normalize() {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(num_.nvars(), Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divexact(num_, g);
      den_ = divexact(den_, g);
    }
  }
  Rational lc = den_.leading_coeff();
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFun RatFun::operator+(const RatFun& o) const {
  if (den_ == o.den_) return RatFun(num_ + o.num_, den_);
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFun RatFun::operator-(const RatFun& o) const {
  if (den_ == o.den_) return RatFun(num_ - o.num_, den_);
  return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}
RatFun RatFun::operator*(const RatFun& o) const {
  // cross-cancel first to keep GCD inputs small
  Poly g1 = poly_gcd(num_, o.den_), g2 = poly_gcd(o.num_, den_);
  Poly n1 = g1.is_constant() ? num_ : divexact(num_, g1);
  Poly d2 = g1.is_constant() ? o.den_ : divexact(o.den_, g1);
  Poly n2 = g2.is_constant() ? o.num_ : divexact(o.num_, g2);
  Poly d1 = g2.is_constant() ? den_ : divexact(den_, g2);
  return RatFun(n1 * n2, d1 * d2);
}
RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero rational function");
  return *this * RatFun(o.den_, o.num_);
}
RatFun RatFun::operator*(const Rational& c) const {
  RatFun r = *this;
  r.num_ = r.num_ * c;
  if (c == 0) r.den_ = Poly(num_.nvars(), Rational(1));
  return r;
}
RatFun RatFun::pow(int k) const {
  if (k < 0) return RatFun(den_, num_).pow(-k);
  RatFun r(nvars(), Rational(1));
  RatFun b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

RatFun RatFun::derivative(int v) const {
  // (n/d)' = (n'd - nd')/d^2
  return RatFun(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

Rational RatFun::eval(const std::vector<Rational>& pt) const {
  Rational d = den_.eval(pt);
  if (d == 0) throw std::domain_error("denominator vanishes at evaluation point");
  return num_.eval(pt) / d;
}

std::string RatFun::str(const std::vector<std::string>& names) const {
  if (den_.is_constant() && den_.constant_term() == 1) {
    if (num_.nterms() > 1) return "(" + num_.str(names) + ")";
    return num_.str(names);
  }
  std::string ns = num_.nterms() > 1 ? "(" + num_.str(names) + ")" : num_.str(names);
  std::string ds = "(" + den_.str(names) + ")";
  return ns + "/" + ds;
}

bool ratfun_equal(const RatFun& a, const RatFun& b) {
  return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

RatFun ratfun_normalize(const RatFun& a) {
  RatFun r = a;
  r.normalize();
  return r;
}

}  // namespace loopalg
