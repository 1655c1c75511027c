#include "loopalg/forms.hpp"

#include <tuple>

namespace loopalg {

OneForm OneForm::from_reduced(std::vector<JetExpr> coeffs) {
  OneForm f((int)coeffs.size());
  for (int i = 0; i < f.n_; ++i)
    if (!coeffs[i].is_zero()) f.gen_[{i, 0}] = coeffs[i];
  f.reduced_ = std::move(coeffs);
  return f;
}

void OneForm::set_general(int coord, int order, const JetExpr& e) {
  reduced_.reset();
  if (e.is_zero())
    gen_.erase({coord, order});
  else
    gen_[{coord, order}] = e;
}

const std::vector<JetExpr>& OneForm::reduced() const {
  if (!reduced_) throw std::logic_error("1-form is not reduced; call reduce_form first");
  return *reduced_;
}

bool OneForm::reduced_is_zero() const {
  for (auto& c : reduced())
    if (!c.is_zero()) return false;
  return true;
}

OneForm reduce_form(const OneForm& a) {
  if (a.is_reduced()) return a;
  std::vector<JetExpr> red(a.n(), JetExpr(a.n()));
  for (auto& [key, e] : a.general()) {
    auto [i, t] = key;
    JetExpr d = total_derivative(e, t);
    red[i] = (t % 2 == 0) ? red[i] + d : red[i] - d;
  }
  return OneForm::from_reduced(std::move(red));
}

OneForm form_add(const OneForm& a, const OneForm& b) {
  std::vector<JetExpr> r;
  OneForm fa = reduce_form(a), fb = reduce_form(b);
  for (int i = 0; i < a.n(); ++i) r.push_back(fa.reduced()[i] + fb.reduced()[i]);
  return OneForm::from_reduced(std::move(r));
}

OneForm form_sub(const OneForm& a, const OneForm& b) {
  std::vector<JetExpr> r;
  OneForm fa = reduce_form(a), fb = reduce_form(b);
  for (int i = 0; i < a.n(); ++i) r.push_back(fa.reduced()[i] - fb.reduced()[i]);
  return OneForm::from_reduced(std::move(r));
}

bool form_equal(const OneForm& a, const OneForm& b) {
  return form_sub(a, b).reduced_is_zero();
}

void TwoFormRep::add(Slot a, Slot b, const JetExpr& c) {
  if (a == b || c.is_zero()) return;
  std::pair<Slot, Slot> key;
  JetExpr v = c;
  if (a < b) {
    key = {a, b};
  } else {
    key = {b, a};
    v = -c;
  }
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_[key] = v;
  } else {
    JetExpr s = it->second + v;
    if (s.is_zero())
      t_.erase(it);
    else
      it->second = s;
  }
}

JetExpr TwoFormRep::coeff(Slot a, Slot b) const {
  if (a == b) return JetExpr(n_);
  bool flip = !(a < b);
  auto it = t_.find(flip ? std::make_pair(b, a) : std::make_pair(a, b));
  if (it == t_.end()) return JetExpr(n_);
  return flip ? -it->second : it->second;
}

bool density_equivalent(const FunctionalDensity& f, const FunctionalDensity& g) {
  return is_total_derivative(f.density - g.density);
}

TwoFormRep delta_form(const OneForm& alpha) {
  OneForm fa = reduce_form(alpha);
  const auto& red = fa.reduced();
  int n = alpha.n();
  TwoFormRep w(n);
  for (int i = 0; i < n; ++i) {
    int T = red[i].max_order();
    for (int j = 0; j < n; ++j)
      for (int t = 0; t <= T; ++t) {
        JetExpr p = jet_partial(red[i], j, t);
        if (!p.is_zero()) w.add({j, t}, {i, 0}, p);
      }
  }
  return w;
}

bool two_form_zero_class(const TwoFormRep& omega) {
  int n = omega.n();
  // Integrate by parts until every term reads c du^j_(t) ^ du^i_(0); collect
  // B[(i,j,t)] = coefficient of du^j_(t) ^ du^i.
  std::map<std::tuple<int, int, int>, JetExpr> B;
  std::vector<std::tuple<TwoFormRep::Slot, TwoFormRep::Slot, JetExpr>> work;
  for (auto& [key, c] : omega.entries()) {
    work.emplace_back(key.first, key.second, c);
    work.emplace_back(key.second, key.first, -c);
  }
  while (!work.empty()) {
    auto [a, b, c] = work.back();
    work.pop_back();
    if (c.is_zero() || a == b) continue;
    if (b.second > 0) {
      // c du^a_(t) ^ du^b_(s) = d_x(c du^a_(t) ^ du^b_(s-1))
      //                         - c_x du^a_(t) ^ du^b_(s-1)
      //                         - c du^a_(t+1) ^ du^b_(s-1)   (mod Im d_x)
      TwoFormRep::Slot b1{b.first, b.second - 1};
      work.emplace_back(a, b1, -total_derivative(c));
      work.emplace_back(TwoFormRep::Slot{a.first, a.second + 1}, b1, -c);
      continue;
    }
    auto key = std::make_tuple(b.first, a.first, a.second);
    auto it = B.find(key);
    if (it == B.end())
      B[key] = c;
    else
      it->second = it->second + c;
  }
  // The associated operator L_{ij} = sum_t B[(i,j,t)] d_x^t; the class is zero
  // iff L is self-adjoint: B[(i,j,r)] = sum_{t>=r} (-1)^t C(t,r)
  // d_x^{t-r} B[(j,i,t)].
  int T = 0;
  for (auto& [key, c] : B) T = std::max(T, std::get<2>(key));
  auto get = [&](int i, int j, int t) -> JetExpr {
    auto it = B.find(std::make_tuple(i, j, t));
    return it == B.end() ? JetExpr(n) : it->second;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r <= T; ++r) {
        JetExpr rhs(n);
        for (int t = r; t <= T; ++t) {
          mpz_class bin;
          mpz_bin_uiui(bin.get_mpz_t(), t, r);
          Rational c(bin);
          if (t % 2) c = -c;
          rhs = rhs + JetExpr(n, c) * total_derivative(get(j, i, t), t - r);
        }
        if (!(get(i, j, r) - rhs).is_zero()) return false;
      }
  return true;
}

OneForm delta_functional(const FunctionalDensity& f) {
  return OneForm::from_reduced(variational_derivative(f.density));
}

FunctionalDensity pairing(const OneForm& alpha, const EvField& xi) {
  OneForm fa = reduce_form(alpha);
  const auto& red = fa.reduced();
  JetExpr d(alpha.n());
  for (int i = 0; i < alpha.n(); ++i) d = d + red[i] * xi.comp[i];
  return FunctionalDensity{d};
}

FunctionalDensity contract(const OneForm& alpha, const EvField& xi) { return pairing(alpha, xi); }

OneForm contract(const TwoFormRep& omega, const EvField& xi) {
  int n = omega.n();
  OneForm out(n);
  std::map<std::pair<int, int>, JetExpr> acc;
  auto addg = [&](TwoFormRep::Slot s, const JetExpr& e) {
    auto it = acc.find(s);
    if (it == acc.end())
      acc[s] = e;
    else
      it->second = it->second + e;
  };
  // i_xi(c * du^a ^ du^b) = c*d_x^{s_a}(xi^{i_a}) du^b - c*d_x^{s_b}(xi^{i_b}) du^a
  for (auto& [key, c] : omega.entries()) {
    auto [a, b] = key;
    addg(b, c * total_derivative(xi.comp[a.first], a.second));
    addg(a, -(c * total_derivative(xi.comp[b.first], b.second)));
  }
  for (auto& [s, e] : acc) out.set_general(s.first, s.second, e);
  return out;
}

Mat exactness_defect(const OneForm& alpha) {
  OneForm fa = reduce_form(alpha);
  const auto& red = fa.reduced();
  int n = alpha.n();
  std::vector<RatFun> a;
  for (auto& c : red) {
    if (!c.is_ratfun())
      throw std::invalid_argument("exactness defect requires u-only coefficients");
    a.push_back(c.as_ratfun());
  }
  Mat m = mat_zero(n, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a[i].derivative(j) - a[j].derivative(i);
  return m;
}

}  // namespace loopalg
