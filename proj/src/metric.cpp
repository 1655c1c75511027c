#include "loopalg/metric.hpp"

namespace loopalg {

Tensor3 tensor3_zero(int n, int nvars) {
  return Tensor3(n, std::vector<std::vector<RatFun>>(n, std::vector<RatFun>(n, RatFun(nvars))));
}

MetricData::MetricData(Mat g_contra, Tensor3 gamma_lc)
    : g_contra_(std::move(g_contra)), gamma_lc_(std::move(gamma_lc)) {
  int n = (int)g_contra_.size();
  int nv = nvars();
  gamma_contra_ = tensor3_zero(n, nv);
  // Gamma^{ij}_k = -g^{il} Gamma^j_{lk}
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        RatFun s(nv);
        for (int l = 0; l < n; ++l) s = s + g_contra_[i][l] * gamma_lc_[j][l][k];
        gamma_contra_[i][j][k] = -s;
      }
}

MetricData MetricData::constant(const Mat& eta) {
  int n = (int)eta.size();
  return MetricData(eta, tensor3_zero(n, eta[0][0].nvars()));
}

const Mat& MetricData::g_cov() const {
  if (!g_cov_) g_cov_ = matrix_inverse(g_contra_);
  return *g_cov_;
}

bool MetricData::is_constant() const {
  int n_ = n();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (!g_contra_[i][j].is_constant()) return false;
      for (int k = 0; k < n_; ++k)
        if (!gamma_lc_[i][j][k].is_zero()) return false;
    }
  return true;
}

FlatnessReport check_flat(const MetricData& M) {
  int n = M.n(), nv = M.nvars();
  const Mat& g = M.g_contra();
  const Tensor3& G = M.gamma_contra();
  FlatnessReport rep{true, {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          RatFun d(nv);
          for (int s = 0; s < n; ++s) {
            d = d + g[i][s] * (G[j][k][l].derivative(s) - G[j][k][s].derivative(l));
            d = d - G[i][j][s] * G[s][k][l] + G[i][k][s] * G[s][j][l];
          }
          if (!d.is_zero()) {
            rep.flat = false;
            rep.defects.emplace_back(i, j, k, l, d);
          }
        }
  return rep;
}

EvField apply_P(const MetricData& M, const OneForm& alpha) {
  OneForm fa = reduce_form(alpha);
  const auto& a = fa.reduced();
  int n = M.n(), nv = M.nvars();
  EvField out = ev_zero(n);
  for (int i = 0; i < n; ++i) {
    JetExpr comp(nv);
    for (int j = 0; j < n; ++j) {
      comp = comp + total_derivative(a[j]) * M.g_contra()[i][j];
      for (int k = 0; k < n; ++k) {
        RatFun c = M.gamma_contra()[i][j][k];
        if (!c.is_zero()) comp = comp + JetExpr::jet_var(nv, k, 1) * a[j] * c;
      }
    }
    out.comp[i] = comp;
  }
  return out;
}

OneForm lie_derivative(const EvField& xi, const OneForm& alpha) {
  OneForm fa = reduce_form(alpha);
  const auto& a = fa.reduced();
  int n = fa.n();
  std::vector<JetExpr> out(n, JetExpr(n));
  int Txi = 0;
  for (auto& c : xi.comp) Txi = std::max(Txi, c.max_order());
  for (int i = 0; i < n; ++i) {
    // transport term: sum_{k,s} d_x^s(xi^k) d(alpha_i)/du^k_(s)
    out[i] = ev_apply(xi, a[i]);
    // coefficient term: sum_s (-1)^s d_x^s[ sum_k alpha_k d(xi^k)/du^i_(s) ]
    for (int s = 0; s <= Txi; ++s) {
      JetExpr inner(n);
      for (int k = 0; k < n; ++k) inner = inner + a[k] * jet_partial(xi.comp[k], i, s);
      if (inner.is_zero()) continue;
      JetExpr d = total_derivative(inner, s);
      out[i] = (s % 2 == 0) ? out[i] + d : out[i] - d;
    }
  }
  return OneForm::from_reduced(std::move(out));
}

OneForm lie_derivative_P(const MetricData& M, const OneForm& beta, const OneForm& alpha) {
  if (!M.is_constant())
    throw std::invalid_argument("lie_derivative_P requires a constant (flat-coordinate) metric");
  return lie_derivative(apply_P(M, beta), alpha);
}

static OneForm bracket_flat(const MetricData& M, const OneForm& alpha, const OneForm& beta) {
  if (!M.is_constant()) throw std::invalid_argument("flat mode requires a constant metric");
  OneForm fa = reduce_form(alpha), fb = reduce_form(beta);
  const auto& a = fa.reduced();
  const auto& b = fb.reduced();
  int n = M.n(), nv = M.nvars();
  int Ta = 0, Tb = 0;
  for (auto& c : a) Ta = std::max(Ta, c.max_order());
  for (auto& c : b) Tb = std::max(Tb, c.max_order());
  int T = std::max(Ta, Tb);
  // precompute eta^{kl} d_x^{s+1} of a_l, b_l
  std::vector<std::vector<JetExpr>> da(n), db(n);  // [l][s] = d_x^{s+1}
  for (int l = 0; l < n; ++l) {
    JetExpr xa = total_derivative(a[l]), xb = total_derivative(b[l]);
    for (int s = 0; s <= T; ++s) {
      da[l].push_back(xa);
      db[l].push_back(xb);
      xa = total_derivative(xa);
      xb = total_derivative(xb);
    }
  }
  std::vector<JetExpr> out(n, JetExpr(nv));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const RatFun& eta = M.g_contra()[k][l];
        if (eta.is_zero()) continue;
        for (int s = 0; s <= T; ++s) {
          JetExpr pa = jet_partial(a[j], k, s);
          if (!pa.is_zero()) out[j] = out[j] + db[l][s] * pa * eta;
          JetExpr pb = jet_partial(b[j], k, s);
          if (!pb.is_zero()) out[j] = out[j] - da[l][s] * pb * eta;
        }
      }
  return OneForm::from_reduced(std::move(out));
}

static OneForm bracket_definition(const MetricData& M, const OneForm& alpha, const OneForm& beta) {
  if (!M.is_constant()) throw std::invalid_argument("definition mode requires a constant metric");
  EvField Pa = apply_P(M, alpha), Pb = apply_P(M, beta);
  OneForm t1 = lie_derivative(Pb, alpha);
  OneForm t2 = lie_derivative(Pa, beta);
  OneForm t3 = delta_functional(pairing(beta, Pa));
  return form_add(form_sub(t1, t2), t3);
}

static OneForm bracket_general(const MetricData& M, const OneForm& alpha, const OneForm& beta) {
  OneForm fa = reduce_form(alpha), fb = reduce_form(beta);
  const auto& a = fa.reduced();
  const auto& b = fb.reduced();
  int n = M.n(), nv = M.nvars();
  EvField Pa = apply_P(M, fa), Pb = apply_P(M, fb);
  const Tensor3& Gc = M.gamma_contra();
  const Tensor3& Gl = M.gamma_lc();
  std::vector<JetExpr> out(n, JetExpr(nv));
  for (int i = 0; i < n; ++i) {
    out[i] = ev_apply(Pb, a[i]) - ev_apply(Pa, b[i]);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        RatFun glk = Gc[l][k][i];
        if (!glk.is_zero())
          out[i] = out[i] + (a[k] * total_derivative(b[l]) - b[k] * total_derivative(a[l])) * glk;
        // - a_k b_l [Gamma^k_{is} Gamma^{sl}_m - Gamma^l_{is} Gamma^{sk}_m] u^m_x
        for (int m = 0; m < n; ++m) {
          RatFun coef(nv);
          for (int s = 0; s < n; ++s)
            coef = coef + Gl[k][i][s] * Gc[s][l][m] - Gl[l][i][s] * Gc[s][k][m];
          if (!coef.is_zero())
            out[i] = out[i] - a[k] * b[l] * JetExpr::jet_var(nv, m, 1) * coef;
        }
      }
  }
  return OneForm::from_reduced(std::move(out));
}

static OneForm bracket_hydro(const MetricData& M, const OneForm& alpha, const OneForm& beta) {
  OneForm fa = reduce_form(alpha), fb = reduce_form(beta);
  int n = M.n(), nv = M.nvars();
  std::vector<RatFun> a, b;
  for (auto& c : fa.reduced()) {
    if (!c.is_ratfun()) throw std::invalid_argument("hydro mode requires u-only coefficients");
    a.push_back(c.as_ratfun());
  }
  for (auto& c : fb.reduced()) {
    if (!c.is_ratfun()) throw std::invalid_argument("hydro mode requires u-only coefficients");
    b.push_back(c.as_ratfun());
  }
  const Tensor3& Gl = M.gamma_lc();
  // nabla_m w_l = d w_l/du^m - Gamma^n_{lm} w_n
  auto nabla = [&](const std::vector<RatFun>& w, int m, int l) {
    RatFun r = w[l].derivative(m);
    for (int nn = 0; nn < n; ++nn) r = r - Gl[nn][l][m] * w[nn];
    return r;
  };
  // precompute covariant derivatives and their metric contractions once:
  // Na[m][l] = nabla_m a_l, Ga[l][i] = g^{kl} Na[k][i]
  std::vector<std::vector<RatFun>> Na(n, std::vector<RatFun>(n, RatFun(nv)));
  std::vector<std::vector<RatFun>> Nb = Na, Ga = Na, Gb = Na;
  for (int m = 0; m < n; ++m)
    for (int l = 0; l < n; ++l) {
      Na[m][l] = nabla(a, m, l);
      Nb[m][l] = nabla(b, m, l);
    }
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const RatFun& g = M.g_contra()[k][l];
        if (g.is_zero()) continue;
        Ga[l][i] = Ga[l][i] + g * Na[k][i];
        Gb[l][i] = Gb[l][i] + g * Nb[k][i];
      }
  std::vector<JetExpr> out(n, JetExpr(nv));
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < n; ++m) {
      RatFun coef(nv);
      for (int l = 0; l < n; ++l)
        coef = coef + Nb[m][l] * Ga[l][i] - Na[m][l] * Gb[l][i];
      if (!coef.is_zero()) out[i] = out[i] + JetExpr::jet_var(nv, m, 1) * coef;
    }
  return OneForm::from_reduced(std::move(out));
}

OneForm bracket(const MetricData& M, const OneForm& alpha, const OneForm& beta, BracketMode mode) {
  switch (mode) {
    case BracketMode::definition:
      return bracket_definition(M, alpha, beta);
    case BracketMode::flat:
      return bracket_flat(M, alpha, beta);
    case BracketMode::general:
      return bracket_general(M, alpha, beta);
    case BracketMode::hydro:
      return bracket_hydro(M, alpha, beta);
  }
  throw std::logic_error("unknown bracket mode");
}

FunctionalDensity functional_bracket(const MetricData& M, const FunctionalDensity& f,
                                     const FunctionalDensity& h) {
  OneForm df = delta_functional(f), dh = delta_functional(h);
  return pairing(df, apply_P(M, dh));
}

EvField antihom_defect(const MetricData& M, const OneForm& alpha, const OneForm& beta) {
  EvField Pa = apply_P(M, alpha), Pb = apply_P(M, beta);
  EvField Pbr = apply_P(M, bracket(M, alpha, beta, BracketMode::flat));
  EvField comm = ev_commutator(Pa, Pb);
  EvField out = ev_zero(M.n());
  for (int i = 0; i < M.n(); ++i) out.comp[i] = Pbr.comp[i] + comm.comp[i];
  return out;
}

OneForm jacobi_defect(const MetricData& M, const OneForm& a, const OneForm& b, const OneForm& c) {
  auto br = [&](const OneForm& x, const OneForm& y) { return bracket(M, x, y, BracketMode::flat); };
  return form_add(form_add(br(a, br(b, c)), br(b, br(c, a))), br(c, br(a, b)));
}

OneForm cartan_defect(const MetricData& M, const OneForm& alpha, const OneForm& beta) {
  OneForm fa = reduce_form(alpha);
  EvField Pb = apply_P(M, beta);
  OneForm lie = lie_derivative_P(M, beta, fa);
  OneForm t1 = reduce_form(contract(delta_form(fa), Pb));
  OneForm t2 = delta_functional(pairing(fa, Pb));
  return form_sub(lie, form_add(t1, t2));
}

}  // namespace loopalg
