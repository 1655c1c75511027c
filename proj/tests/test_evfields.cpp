#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loopalg/evfield.hpp"
#include "util.hpp"

using namespace loopalg;
using testutil::Rng;

static EvField rand_field(Rng& rng, int n) {
  EvField xi;
  for (int i = 0; i < n; ++i) xi.comp.push_back(testutil::rand_jet(rng, n, 2, 2, 2));
  return xi;
}

TEST_CASE("ev_apply is a derivation") {
  Rng rng(401);
  for (int it = 0; it < 15; ++it) {
    EvField xi = rand_field(rng, 2);
    JetExpr f = testutil::rand_jet(rng, 2, 2, 2), g = testutil::rand_jet(rng, 2, 2, 2);
    CHECK(ev_apply(xi, f * g) == ev_apply(xi, f) * g + f * ev_apply(xi, g));
  }
}

TEST_CASE("evolutionary fields commute with the total derivative") {
  Rng rng(402);
  for (int it = 0; it < 15; ++it) {
    EvField xi = rand_field(rng, 2);
    JetExpr f = testutil::rand_jet(rng, 2, 2, 2);
    CHECK(ev_apply(xi, total_derivative(f)) == total_derivative(ev_apply(xi, f)));
  }
}

TEST_CASE("prolongation acts on jet coordinates by d_x powers") {
  int n = 1;
  EvField xi{{JetExpr(RatFun::var(n, 0)).pow(2)}};  // xi^1 = u^2
  JetExpr u2jet = JetExpr::jet_var(n, 0, 2);
  CHECK(ev_apply(xi, u2jet) == total_derivative(xi.comp[0], 2));
}

TEST_CASE("commutator is antisymmetric and matches its defining action") {
  Rng rng(403);
  for (int it = 0; it < 10; ++it) {
    EvField xi = rand_field(rng, 2), eta = rand_field(rng, 2);
    EvField lhs = ev_commutator(xi, eta), rhs = ev_commutator(eta, xi);
    for (int p = 0; p < 2; ++p) {
      CHECK(lhs.comp[p] == -rhs.comp[p]);
      // [xi,eta]^p = xi(eta^p) - eta(xi^p)
      CHECK(lhs.comp[p] == ev_apply(xi, eta.comp[p]) - ev_apply(eta, xi.comp[p]));
    }
  }
}

TEST_CASE("commutator Jacobi identity") {
  Rng rng(404);
  for (int it = 0; it < 4; ++it) {
    EvField a = rand_field(rng, 2), b = rand_field(rng, 2), c = rand_field(rng, 2);
    EvField j1 = ev_commutator(a, ev_commutator(b, c));
    EvField j2 = ev_commutator(b, ev_commutator(c, a));
    EvField j3 = ev_commutator(c, ev_commutator(a, b));
    for (int p = 0; p < 2; ++p) CHECK((j1.comp[p] + j2.comp[p] + j3.comp[p]).is_zero());
  }
}

TEST_CASE("zero field") {
  EvField z = ev_zero(3);
  CHECK(z.n() == 3);
  CHECK(z.is_zero());
}
