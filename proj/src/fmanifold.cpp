#include "loopalg/fmanifold.hpp"

#include <sstream>

namespace loopalg {

namespace {

std::string idx(std::initializer_list<int> is) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int i : is) {
    if (!first) os << ",";
    os << i + 1;
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

CheckReport check_fmanifold(const StructureSpec& spec) {
  CheckReport rep;
  int n = spec.n;
  if (!spec.product || !spec.connection)
    throw std::invalid_argument("check_fmanifold needs both a product and a connection");
  const Tensor3& c = spec.product->c;
  const Tensor3& G = spec.connection->gamma;
  const auto& names = spec.coords;

  // commutativity c^i_{jk} = c^i_{kj}
  {
    CheckItem it{"product-commutativity", true, ""};
    for (int i = 0; i < n && it.pass; ++i)
      for (int j = 0; j < n && it.pass; ++j)
        for (int k = j + 1; k < n; ++k) {
          RatFun d = c[i][j][k] - c[i][k][j];
          if (!d.is_zero()) {
            it.pass = false;
            it.defect = "c" + idx({i, j, k}) + " - c" + idx({i, k, j}) + " = " + d.str(names);
            break;
          }
        }
    rep.items.push_back(it);
  }
  // associativity c^i_{jm} c^m_{kl} = c^i_{km} c^m_{jl}
  {
    CheckItem it{"product-associativity", true, ""};
    for (int i = 0; i < n && it.pass; ++i)
      for (int j = 0; j < n && it.pass; ++j)
        for (int k = 0; k < n && it.pass; ++k)
          for (int l = 0; l < n; ++l) {
            RatFun d(n);
            for (int m = 0; m < n; ++m) d = d + c[i][j][m] * c[m][k][l] - c[i][k][m] * c[m][j][l];
            if (!d.is_zero()) {
              it.pass = false;
              it.defect = "assoc defect at " + idx({i, j, k, l}) + " = " + d.str(names);
              break;
            }
          }
    rep.items.push_back(it);
  }
  // flatness: R^i_{jkl} = d_k G^i_{lj} - d_l G^i_{kj} + G^i_{ks}G^s_{lj} - G^i_{ls}G^s_{kj}
  {
    CheckItem it{"connection-flatness", true, ""};
    for (int i = 0; i < n && it.pass; ++i)
      for (int j = 0; j < n && it.pass; ++j)
        for (int k = 0; k < n && it.pass; ++k)
          for (int l = 0; l < n; ++l) {
            RatFun d = G[i][l][j].derivative(k) - G[i][k][j].derivative(l);
            for (int s = 0; s < n; ++s) d = d + G[i][k][s] * G[s][l][j] - G[i][l][s] * G[s][k][j];
            if (!d.is_zero()) {
              it.pass = false;
              it.defect = "Riemann" + idx({i, j, k, l}) + " = " + d.str(names);
              break;
            }
          }
    rep.items.push_back(it);
  }
  // compatibility nabla_l c^i_{jk} = nabla_j c^i_{lk}
  {
    auto nabla_c = [&](int l, int i, int j, int k) {
      RatFun d = c[i][j][k].derivative(l);
      for (int s = 0; s < n; ++s)
        d = d + G[i][l][s] * c[s][j][k] - G[s][l][j] * c[i][s][k] - G[s][l][k] * c[i][j][s];
      return d;
    };
    CheckItem it{"compatibility", true, ""};
    for (int i = 0; i < n && it.pass; ++i)
      for (int j = 0; j < n && it.pass; ++j)
        for (int k = 0; k < n && it.pass; ++k)
          for (int l = 0; l < n; ++l) {
            RatFun d = nabla_c(l, i, j, k) - nabla_c(j, i, l, k);
            if (!d.is_zero()) {
              it.pass = false;
              it.defect = "compat defect at " + idx({i, j, k, l}) + " = " + d.str(names);
              break;
            }
          }
    rep.items.push_back(it);
  }
  return rep;
}

BoolWithDefect check_invariance(const MetricData& g, const ProductStructure& cs,
                                const std::vector<std::string>& names) {
  int n = g.n();
  const Tensor3& c = cs.c;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        RatFun d(g.nvars());
        for (int k = 0; k < n; ++k)
          d = d + c[i][j][k] * g.g_contra()[k][l] - c[l][j][k] * g.g_contra()[k][i];
        if (!d.is_zero())
          return {false, "invariance defect at " + idx({i, j, l}) + " = " + d.str(names)};
      }
  return {true, ""};
}

BoolWithDefect verify_recursion(const StructureSpec& spec, const HierarchyForm& next,
                                const HierarchyForm& prev) {
  int n = spec.n;
  if (!spec.metric || !spec.product || !spec.connection)
    throw std::invalid_argument("verify_recursion needs metric, product and connection");
  const Tensor3& c = spec.product->c;
  const Tensor3& G = spec.connection->gamma;
  const Mat& gcov = spec.metric->g_cov();
  const Mat& gcon = spec.metric->g_contra();
  // contravariant components of prev, computed once: v^l = g^{lm} prev_m
  std::vector<RatFun> v(n, RatFun(n));
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m) v[l] = v[l] + gcon[l][m] * prev.omega[m];
  // W^i_k = c^i_{kl} v^l
  std::vector<std::vector<RatFun>> W(n, std::vector<RatFun>(n, RatFun(n)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) W[i][k] = W[i][k] + c[i][k][l] * v[l];
  for (int k = 0; k < n; ++k)
    for (int h = 0; h < n; ++h) {
      RatFun lhs = next.omega[h].derivative(k);
      for (int m = 0; m < n; ++m) lhs = lhs - G[m][h][k] * next.omega[m];
      RatFun rhs(n);
      for (int i = 0; i < n; ++i) rhs = rhs + gcov[i][h] * W[i][k];
      RatFun d = lhs - rhs;
      if (!d.is_zero())
        return {false, "recursion defect at " + idx({k, h}) + " = " + d.str(spec.coords)};
    }
  return {true, ""};
}

BoolWithDefect verify_recursion_fields(const StructureSpec& spec, const std::vector<RatFun>& next,
                                       const std::vector<RatFun>& prev) {
  int n = spec.n;
  const Tensor3& c = spec.product->c;
  const Tensor3& G = spec.connection->gamma;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      RatFun lhs = next[i].derivative(j);
      for (int s = 0; s < n; ++s) lhs = lhs + G[i][j][s] * next[s];
      RatFun rhs(n);
      for (int k = 0; k < n; ++k) rhs = rhs + c[i][j][k] * prev[k];
      RatFun d = lhs - rhs;
      if (!d.is_zero())
        return {false, "field recursion defect at " + idx({j, i}) + " = " + d.str(spec.coords)};
    }
  return {true, ""};
}

BoolWithDefect check_av_symmetry(const StructureSpec& spec, const std::vector<RatFun>& X) {
  int n = spec.n;
  const Tensor3& c = spec.product->c;
  const Tensor3& G = spec.connection->gamma;
  auto nablaX = [&](int k, int m) {
    RatFun r = X[m].derivative(k);
    for (int s = 0; s < n; ++s) r = r + G[m][k][s] * X[s];
    return r;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        RatFun d(n);
        for (int m = 0; m < n; ++m) d = d + c[i][j][m] * nablaX(k, m) - c[i][k][m] * nablaX(j, m);
        if (!d.is_zero())
          return {false, "symmetry defect at " + idx({i, j, k}) + " = " + d.str(spec.coords)};
      }
  return {true, ""};
}

EvField build_flow(const ProductStructure& cs, const std::vector<RatFun>& X) {
  int n = (int)X.size();
  EvField out = ev_zero(n);
  for (int i = 0; i < n; ++i) {
    JetExpr comp(n);
    for (int j = 0; j < n; ++j) {
      RatFun coef(n);
      for (int k = 0; k < n; ++k) coef = coef + cs.c[i][j][k] * X[k];
      if (!coef.is_zero()) comp = comp + JetExpr::jet_var(n, j, 1) * coef;
    }
    out.comp[i] = comp;
  }
  return out;
}

MetricData pullback_metric(const std::vector<RatFun>& map, const Mat& eta) {
  int n = (int)map.size();
  Mat J = mat_zero(n, n, n);  // J[a][i] = d t^a / d u^i
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i) J[a][i] = map[a].derivative(i);
  // g = J^T eta J with eta constant, so g^{-1} = J^{-1} eta^{-1} J^{-T} and
  // the Levi-Civita connection is the pulled-back flat one:
  // Gamma^i_{jk} = (J^{-1})^i_a d_k J^a_j.
  Mat Jinv = matrix_inverse(J);
  Mat etainv = matrix_inverse(eta);
  Mat gcon = mat_zero(n, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatFun s(n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) s = s + Jinv[i][a] * etainv[a][b] * Jinv[j][b];
      gcon[i][j] = s;
    }
  Tensor3 lc = tensor3_zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        RatFun s(n);
        for (int a = 0; a < n; ++a) s = s + Jinv[i][a] * J[a][j].derivative(k);
        lc[i][j][k] = s;
      }
  return MetricData(gcon, lc);
}

StructureSpec epsilon_system(int n, const Rational& eps) {
  if (n < 2) throw std::invalid_argument("epsilon_system requires n >= 2");
  StructureSpec spec;
  spec.n = n;
  for (int i = 0; i < n; ++i) spec.coords.push_back("u" + std::to_string(i + 1));
  Tensor3 G = tensor3_zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      // Gamma^i_{ji} = eps/(u^i - u^j), symmetric in the lower pair
      RatFun g = RatFun(Poly(n, eps), Poly::var(n, i) - Poly::var(n, j));
      G[i][j][i] = g;
      G[i][i][j] = g;
      G[i][j][j] = -g;
    }
  for (int i = 0; i < n; ++i) {
    RatFun s(n);
    for (int k = 0; k < n; ++k)
      if (k != i) s = s - G[i][i][k];
    G[i][i][i] = s;
  }
  spec.connection = ConnectionData{G};
  Tensor3 c = tensor3_zero(n, n);
  for (int i = 0; i < n; ++i) c[i][i][i] = RatFun(n, Rational(1));
  spec.product = ProductStructure{c};
  if (n == 3 && eps == 1) {
    // flat-coordinate map and antidiagonal eta
    Poly u1 = Poly::var(3, 0), u2 = Poly::var(3, 1), u3 = Poly::var(3, 2);
    Poly two(3, Rational(2));
    std::vector<RatFun> map;
    map.push_back(RatFun(u1 + u2 + u3));
    map.push_back(RatFun(Poly(3, Rational(1)), two * (u1 - u2) * (u3 - u1)));
    map.push_back(RatFun(Poly(3, Rational(1)), two * (u1 - u2) * (u2 - u3)));
    Mat eta = mat_zero(3, 3, 3);
    eta[0][2] = eta[1][1] = eta[2][0] = RatFun(3, Rational(1));
    spec.map = map;
    spec.eta = eta;
    spec.metric = pullback_metric(map, eta);
  }
  return spec;
}

OneForm involution_check(const MetricData& M, const HierarchyForm& w1, const HierarchyForm& w2) {
  int n = M.n();
  std::vector<JetExpr> a, b;
  for (auto& c : w1.omega) a.push_back(JetExpr(c));
  for (auto& c : w2.omega) b.push_back(JetExpr(c));
  return bracket(M, OneForm::from_reduced(a), OneForm::from_reduced(b), BracketMode::hydro);
}

}  // namespace loopalg
