#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "util.hpp"

using namespace loopalg;
using testutil::Rng;

TEST_CASE("reduction by integration by parts") {
  int n = 1;
  // alpha^{(1)}_1 = u1 reduces to alpha_1 = -u1_(1)
  OneForm a(n);
  a.set_general(0, 1, JetExpr(RatFun::var(n, 0)));
  OneForm r = reduce_form(a);
  CHECK(r.reduced()[0] == -JetExpr::jet_var(n, 0, 1));
  // two integrations by parts: alpha^{(2)}_1 = u1 -> +u1_(2)
  OneForm b(n);
  b.set_general(0, 2, JetExpr(RatFun::var(n, 0)));
  CHECK(reduce_form(b).reduced()[0] == JetExpr::jet_var(n, 0, 2));
}

TEST_CASE("reduction is idempotent (randomized)") {
  Rng rng(301);
  for (int it = 0; it < 15; ++it) {
    OneForm a(2);
    for (int i = 0; i < 2; ++i)
      for (int t = 0; t <= 2; ++t) a.set_general(i, t, testutil::rand_jet(rng, 2, 2, 2, 2));
    OneForm r1 = reduce_form(a), r2 = reduce_form(r1);
    CHECK(form_equal(r1, r2));
  }
}

TEST_CASE("form arithmetic respects reduction") {
  Rng rng(302);
  for (int it = 0; it < 10; ++it) {
    OneForm a = testutil::rand_reduced_form(rng, 2, 2, 2);
    OneForm b = testutil::rand_reduced_form(rng, 2, 2, 2);
    CHECK(form_equal(form_sub(form_add(a, b), b), a));
    CHECK(form_equal(form_add(a, b), form_add(b, a)));
  }
}

TEST_CASE("delta of a functional is computed by the Euler operator") {
  int n = 1;
  FunctionalDensity f{JetExpr::jet_var(n, 0, 1).pow(2) * Rational(1, 2)};
  OneForm d = delta_functional(f);
  CHECK(d.reduced()[0] == -JetExpr::jet_var(n, 0, 2));
}

TEST_CASE("delta annihilates total-derivative densities") {
  Rng rng(303);
  for (int it = 0; it < 10; ++it) {
    JetExpr g = testutil::rand_jet(rng, 2, 2, 2);
    FunctionalDensity f{total_derivative(g)};
    CHECK(f.zero_class());
    CHECK(delta_functional(f).reduced_is_zero());
  }
}

TEST_CASE("density equivalence is modulo total derivatives") {
  Rng rng(304);
  JetExpr g = testutil::rand_jet(rng, 2, 2, 2);
  JetExpr h = testutil::rand_jet(rng, 2, 2, 2);
  FunctionalDensity f1{h}, f2{h + total_derivative(g)};
  CHECK(density_equivalent(f1, f2));
  FunctionalDensity f3{h + JetExpr::jet_var(2, 0, 1).pow(2)};
  CHECK(!density_equivalent(f1, f3));
}

TEST_CASE("delta of an exact form vanishes (anticommutativity delta^2 = 0)") {
  Rng rng(305);
  for (int it = 0; it < 5; ++it) {
    FunctionalDensity f{testutil::rand_jet(rng, 2, 1, 2, 2)};
    OneForm df = delta_functional(f);
    TwoFormRep dd = delta_form(df);
    CHECK(two_form_zero_class(dd));
  }
  // a non-variational form has a nonzero delta class
  OneForm bad = OneForm::from_reduced({JetExpr::jet_var(2, 1, 1), JetExpr(2)});
  CHECK(!two_form_zero_class(delta_form(bad)));
}

TEST_CASE("contraction pairing of a 1-form with a field") {
  int n = 2;
  OneForm a = OneForm::from_reduced(
      {JetExpr(RatFun::var(n, 1)), JetExpr::jet_var(n, 0, 1)});
  EvField xi{{JetExpr(n, Rational(1)), JetExpr(RatFun::var(n, 0))}};
  FunctionalDensity p = pairing(a, xi);
  JetExpr expect = JetExpr(RatFun::var(n, 1)) +
                   JetExpr::jet_var(n, 0, 1) * JetExpr(RatFun::var(n, 0));
  CHECK(p.density == expect);
  FunctionalDensity c = contract(a, xi);
  CHECK(density_equivalent(p, c));
}

TEST_CASE("two-form representative is antisymmetric") {
  int n = 2;
  TwoFormRep w(n);
  JetExpr c = JetExpr(RatFun::var(n, 0));
  w.add({0, 1}, {1, 0}, c);
  CHECK(w.coeff({0, 1}, {1, 0}) == c);
  CHECK(w.coeff({1, 0}, {0, 1}) == -c);
  w.add({1, 0}, {0, 1}, c);  // cancels
  CHECK(w.is_zero());
}

TEST_CASE("exactness defect of u-only forms") {
  int n = 2;
  // gradient of h = u1^2 u2 is exact
  RatFun h = RatFun::var(n, 0) * RatFun::var(n, 0) * RatFun::var(n, 1);
  OneForm exact = OneForm::from_reduced({JetExpr(h.derivative(0)), JetExpr(h.derivative(1))});
  Mat d = exactness_defect(exact);
  for (auto& row : d)
    for (auto& e : row) CHECK(e.is_zero());
  // (u2, -u1) has curl -2
  OneForm closed = OneForm::from_reduced(
      {JetExpr(RatFun::var(n, 1)), JetExpr(-RatFun::var(n, 0))});
  Mat d2 = exactness_defect(closed);
  CHECK(!d2[0][1].is_zero());
}
