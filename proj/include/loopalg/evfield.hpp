#pragma once
// Evolutionary vector fields: n components in A; prolongation is implicit.
#include "loopalg/jet.hpp"

namespace loopalg {

struct EvField {
  std::vector<JetExpr> comp;  // xi^1..xi^n
  int n() const { return (int)comp.size(); }
  bool is_zero() const {
    for (auto& c : comp)
      if (!c.is_zero()) return false;
    return true;
  }
};

EvField ev_zero(int n);

// Directional (prolonged) derivative: sum_{i,s} d_x^s(xi^i) de/du^i_(s).
JetExpr ev_apply(const EvField& xi, const JetExpr& e);

// [xi, eta]^p = d_x^s(xi^i) d eta^p/du^i_(s) - d_x^s(eta^i) d xi^p/du^i_(s).
EvField ev_commutator(const EvField& xi, const EvField& eta);

}  // namespace loopalg
