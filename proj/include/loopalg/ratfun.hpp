#pragma once
// Rational functions num/den in u^1..u^n, kept in lowest terms with a monic
// (hence positive-leading-coefficient) denominator under grlex.
#include "loopalg/poly.hpp"

namespace loopalg {

class RatFun {
 public:
  RatFun() : num_(0), den_(0) {}
  explicit RatFun(int n) : num_(n), den_(n, Rational(1)) {}
  RatFun(int n, const Rational& c) : num_(n, c), den_(n, Rational(1)) {}
  explicit RatFun(const Poly& p) : num_(p), den_(p.nvars(), Rational(1)) {}
  RatFun(const Poly& num, const Poly& den) : num_(num), den_(den) { normalize(); }

  static RatFun var(int n, int i) { return RatFun(Poly::var(n, i)); }

  int nvars() const { return num_.nvars(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const { return num_.constant_term() / den_.constant_term(); }

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator-() const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun operator*(const Rational& c) const;
  RatFun pow(int k) const;

  RatFun derivative(int v) const;
  Rational eval(const std::vector<Rational>& pt) const;  // throws on zero den

  std::string str(const std::vector<std::string>& names) const;

  // Structural equality is valid because normalization is canonical, but the
  // robust cross-multiplied test is the one everything uses.
  bool operator==(const RatFun& o) const { return ratfun_equal(*this, o); }

  friend bool ratfun_equal(const RatFun& a, const RatFun& b);
  friend RatFun ratfun_normalize(const RatFun& a);

 private:
  Poly num_, den_;
  void normalize();
};

bool ratfun_equal(const RatFun& a, const RatFun& b);
RatFun ratfun_normalize(const RatFun& a);

}  // namespace loopalg
