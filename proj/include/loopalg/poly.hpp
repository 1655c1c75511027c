#pragma once
// Sparse multivariate polynomials over exact rationals (GMP), graded-lex order.
#include <gmpxx.h>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace loopalg {

using Rational = mpq_class;

std::string rat_str(const Rational& r);

// Exponent vector over a fixed variable list of length n.
using Mono = std::vector<int32_t>;

inline int32_t mono_deg(const Mono& m) {
  int32_t d = 0;
  for (auto e : m) d += e;
  return d;
}

struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    int32_t da = mono_deg(a), db = mono_deg(b);
    if (da != db) return da < db;
    // graded lex: higher exponent on earlier variable is larger
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

class Poly {
 public:
  Poly() : n_(0) {}
  explicit Poly(int n) : n_(n) {}
  Poly(int n, const Rational& c) : n_(n) {
    if (c != 0) t_[Mono(n, 0)] = c;
  }
  static Poly var(int n, int i);  // the i-th variable (0-based)

  int nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int32_t total_degree() const;
  int32_t degree_in(int v) const;
  bool depends_on(int v) const;
  size_t nterms() const { return t_.size(); }

  const std::map<Mono, Rational, GrlexLess>& terms() const { return t_; }
  void set(const Mono& m, const Rational& c);
  void add_term(const Mono& m, const Rational& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly pow(int k) const;
  bool operator==(const Poly& o) const { return n_ == o.n_ && t_ == o.t_; }

  Poly derivative(int v) const;
  Rational eval(const std::vector<Rational>& pt) const;

  // Leading coefficient under grlex.
  Rational leading_coeff() const;
  Mono leading_mono() const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int n_;
  std::map<Mono, Rational, GrlexLess> t_;
  void check(const Poly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("polynomial variable contexts differ");
  }
};

// Scale to a primitive polynomial over the integers with positive leading
// coefficient; returns zero for zero input.
Poly make_primitive(const Poly& a);

// Exact division; throws if not exact.
Poly divexact(const Poly& a, const Poly& b);

// Multivariate GCD (primitive PRS). Result is integer-primitive with positive
// leading coefficient; gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace loopalg
