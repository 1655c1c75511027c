#pragma once
// Shared helpers for the test suites: deterministic random generators for
// rationals, polynomials, rational functions, jet expressions and 1-forms.
#include "loopalg/forms.hpp"

#include <random>

namespace testutil {

using namespace loopalg;

using Rng = std::mt19937;

inline Rational rand_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

// Random polynomial in n variables, total degree <= deg.
inline Poly rand_poly(Rng& rng, int n, int deg, int terms = 3) {
  Poly p(n);
  std::uniform_int_distribution<int> e(0, deg);
  for (int t = 0; t < terms; ++t) {
    Mono m(n, 0);
    int budget = deg;
    for (int i = 0; i < n; ++i) {
      int k = std::uniform_int_distribution<int>(0, budget)(rng);
      m[i] = k;
      budget -= k;
    }
    p.add_term(m, rand_rational(rng));
  }
  return p;
}

inline Poly rand_nonzero_poly(Rng& rng, int n, int deg, int terms = 3) {
  for (;;) {
    Poly p = rand_poly(rng, n, deg, terms);
    if (!p.is_zero()) return p;
  }
}

inline RatFun rand_ratfun(Rng& rng, int n, int deg, bool with_den = false) {
  Poly num = rand_poly(rng, n, deg);
  if (!with_den) return RatFun(num);
  return RatFun(num, rand_nonzero_poly(rng, n, 1, 2));
}

// Random differential polynomial: jet orders <= max_order, jet degree <= 2,
// polynomial u-coefficients of degree <= coeff_deg.
inline JetExpr rand_jet(Rng& rng, int n, int max_order, int coeff_deg, int terms = 3) {
  JetExpr e(n);
  std::uniform_int_distribution<int> coord(0, n - 1), order(1, std::max(1, max_order)),
      jdeg(0, 2);
  for (int t = 0; t < terms; ++t) {
    JetExpr term(JetExpr(rand_ratfun(rng, n, coeff_deg)));
    int d = jdeg(rng);
    for (int k = 0; k < d; ++k)
      term = term * JetExpr::jet_var(n, coord(rng), max_order > 0 ? order(rng) : 1);
    if (max_order == 0) term = JetExpr(rand_ratfun(rng, n, coeff_deg));
    e = e + term;
  }
  return e;
}

inline OneForm rand_reduced_form(Rng& rng, int n, int max_order, int coeff_deg,
                                 int terms = 2) {
  std::vector<JetExpr> c;
  for (int i = 0; i < n; ++i) c.push_back(rand_jet(rng, n, max_order, coeff_deg, terms));
  return OneForm::from_reduced(std::move(c));
}

// u-only reduced 1-form (for hydro-mode and exactness tests)
inline OneForm rand_uonly_form(Rng& rng, int n, int deg) {
  std::vector<JetExpr> c;
  for (int i = 0; i < n; ++i) c.push_back(JetExpr(rand_ratfun(rng, n, deg)));
  return OneForm::from_reduced(std::move(c));
}

inline Mat const_identity(int n) { return mat_identity(n, n); }

}  // namespace testutil
