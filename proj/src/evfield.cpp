#include "loopalg/evfield.hpp"

namespace loopalg {

EvField ev_zero(int n) {
  EvField f;
  f.comp.assign(n, JetExpr(n));
  return f;
}

JetExpr ev_apply(const EvField& xi, const JetExpr& e) {
  int n = e.nvars();
  int T = e.max_order();
  JetExpr r(n);
  for (int i = 0; i < n; ++i) {
    JetExpr dxs = xi.comp[i];  // d_x^s(xi^i), s = 0 first
    for (int s = 0; s <= T; ++s) {
      JetExpr p = jet_partial(e, i, s);
      if (!p.is_zero()) r = r + dxs * p;
      if (s < T) dxs = total_derivative(dxs);
    }
  }
  return r;
}

EvField ev_commutator(const EvField& xi, const EvField& eta) {
  int n = xi.n();
  EvField r = ev_zero(n);
  for (int p = 0; p < n; ++p) r.comp[p] = ev_apply(xi, eta.comp[p]) - ev_apply(eta, xi.comp[p]);
  return r;
}

}  // namespace loopalg
