#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "util.hpp"

using namespace loopalg;
using testutil::Rng;

static const std::vector<std::string> N2 = {"u1", "u2"};

TEST_CASE("total derivative of a coordinate function") {
  // d_x f(u) = sum_i (df/du^i) u^i_(1)
  int n = 2;
  JetExpr f(RatFun::var(n, 0) * RatFun::var(n, 1));  // u1*u2
  JetExpr expect = JetExpr(RatFun::var(n, 1)) * JetExpr::jet_var(n, 0, 1) +
                   JetExpr(RatFun::var(n, 0)) * JetExpr::jet_var(n, 1, 1);
  CHECK(total_derivative(f) == expect);
}

TEST_CASE("total derivative shifts jet orders") {
  int n = 1;
  JetExpr f = JetExpr::jet_var(n, 0, 2);
  CHECK(total_derivative(f) == JetExpr::jet_var(n, 0, 3));
  CHECK(total_derivative(f, 3) == JetExpr::jet_var(n, 0, 5));
}

TEST_CASE("total derivative is a derivation (randomized)") {
  Rng rng(201);
  for (int it = 0; it < 20; ++it) {
    JetExpr f = testutil::rand_jet(rng, 2, 2, 2), g = testutil::rand_jet(rng, 2, 2, 2);
    CHECK(total_derivative(f * g) == total_derivative(f) * g + f * total_derivative(g));
  }
}

TEST_CASE("commutation of jet partials with the total derivative") {
  // d/du^i_(s) d_x = d_x d/du^i_(s) + d/du^i_(s-1)
  Rng rng(202);
  for (int it = 0; it < 20; ++it) {
    JetExpr f = testutil::rand_jet(rng, 2, 2, 2);
    for (int i = 0; i < 2; ++i)
      for (int s = 1; s <= 3; ++s) {
        JetExpr lhs = jet_partial(total_derivative(f), i, s);
        JetExpr rhs = total_derivative(jet_partial(f, i, s)) + jet_partial(f, i, s - 1);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("higher commutation identity with binomial coefficients") {
  // d/du^i_(s) d_x^k = sum_t C(k,t) d_x^{k-t} d/du^i_(s-t)
  Rng rng(203);
  JetExpr f = testutil::rand_jet(rng, 2, 2, 2);
  int k = 3;
  for (int i = 0; i < 2; ++i)
    for (int s = 1; s <= 3; ++s) {
      JetExpr lhs = jet_partial(total_derivative(f, k), i, s);
      JetExpr rhs(2);
      long binom = 1;
      for (int t = 0; t <= std::min(k, s); ++t) {
        rhs = rhs + total_derivative(jet_partial(f, i, s - t), k - t) * Rational(binom);
        binom = binom * (k - t) / (t + 1);
      }
      CHECK(lhs == rhs);
    }
}

TEST_CASE("variational derivative kills total derivatives") {
  Rng rng(204);
  for (int it = 0; it < 15; ++it) {
    JetExpr g = testutil::rand_jet(rng, 2, 2, 2);
    auto vd = variational_derivative(total_derivative(g));
    for (auto& c : vd) CHECK(c.is_zero());
    CHECK(is_total_derivative(total_derivative(g)));
  }
}

TEST_CASE("variational derivative worked examples") {
  int n = 1;
  // f = (1/2) u1_(1)^2 -> delta f / delta u = -u1_(2)
  JetExpr f = JetExpr::jet_var(n, 0, 1).pow(2) * Rational(1, 2);
  auto vd = variational_derivative(f);
  CHECK(vd[0] == -JetExpr::jet_var(n, 0, 2));
  // f = u^3 -> 3u^2
  JetExpr g = JetExpr(RatFun::var(n, 0)).pow(3);
  auto vdg = variational_derivative(g);
  CHECK(vdg[0] == JetExpr(RatFun::var(n, 0)).pow(2) * Rational(3));
}

TEST_CASE("non-total-derivative densities are detected") {
  int n = 1;
  JetExpr f = JetExpr::jet_var(n, 0, 1).pow(2);  // u_x^2 has nonzero Euler operator
  CHECK(!is_total_derivative(f));
  // u*u_x = d_x(u^2/2) is a total derivative
  JetExpr g = JetExpr(RatFun::var(n, 0)) * JetExpr::jet_var(n, 0, 1);
  CHECK(is_total_derivative(g));
}

TEST_CASE("jet expression printing") {
  int n = 2;
  JetExpr e = JetExpr(RatFun::var(n, 0)) * JetExpr::jet_var(n, 1, 2).pow(2) * Rational(3);
  CHECK(e.str(N2) == "3*u1*u2_2^2");
}
