#pragma once
// The ring A of differential polynomials: polynomials in jet variables
// u^i_(s), s >= 1, with RatFun(u^1..u^n) coefficients. No explicit
// x-dependence by construction.
#include "loopalg/ratfun.hpp"

#include <compare>

namespace loopalg {

struct JetVar {
  int coord;  // 0-based coordinate index
  int order;  // s >= 1 inside monomials; s = 0 means u^i itself (coefficients)
  auto operator<=>(const JetVar&) const = default;
};

// Sorted list of (jet variable, positive exponent).
using JetMono = std::vector<std::pair<JetVar, int>>;

class JetExpr {
 public:
  JetExpr() : n_(0) {}
  explicit JetExpr(int n) : n_(n) {}
  JetExpr(int n, const Rational& c) : n_(n) { add(JetMono{}, RatFun(n, c)); }
  explicit JetExpr(const RatFun& c) : n_(c.nvars()) { add(JetMono{}, c); }

  // u^i_(s); for s = 0 the variable lives in the coefficient layer.
  static JetExpr jet_var(int n, int coord, int order);

  int nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<JetMono, RatFun>& terms() const { return t_; }
  void add(const JetMono& m, const RatFun& c);

  // True iff the expression has no jet variables (order >= 1) at all.
  bool is_ratfun() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
  RatFun as_ratfun() const;  // throws if jet variables occur
  int max_order() const;     // 0 when no jet variables occur

  JetExpr operator+(const JetExpr& o) const;
  JetExpr operator-(const JetExpr& o) const;
  JetExpr operator-() const;
  JetExpr operator*(const JetExpr& o) const;
  JetExpr operator*(const RatFun& c) const;
  JetExpr operator*(const Rational& c) const;
  JetExpr pow(int k) const;
  bool operator==(const JetExpr& o) const { return (*this - o).is_zero(); }

  std::string str(const std::vector<std::string>& names) const;

 private:
  int n_;
  std::map<JetMono, RatFun> t_;
};

// Formal partial derivative d/du^i_(s) (s = 0 differentiates coefficients).
JetExpr jet_partial(const JetExpr& e, int coord, int order);
// k-fold total derivative.
JetExpr total_derivative(const JetExpr& e, int k = 1);
// Euler operator: component i = sum_t (-1)^t d_x^t (df/du^i_(t)).
std::vector<JetExpr> variational_derivative(const JetExpr& f);
bool is_total_derivative(const JetExpr& f);

}  // namespace loopalg
