#include "loopalg/jet.hpp"

#include <algorithm>
#include <sstream>

namespace loopalg {

JetExpr JetExpr::jet_var(int n, int coord, int order) {
  JetExpr e(n);
  if (order == 0) {
    e.add(JetMono{}, RatFun::var(n, coord));
  } else {
    e.add(JetMono{{JetVar{coord, order}, 1}}, RatFun(n, Rational(1)));
  }
  return e;
}

void JetExpr::add(const JetMono& m, const RatFun& c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_[m] = c;
  } else {
    RatFun s = it->second + c;
    if (s.is_zero())
      t_.erase(it);
    else
      it->second = s;
  }
}

RatFun JetExpr::as_ratfun() const {
  if (t_.empty()) return RatFun(n_);
  if (!is_ratfun()) throw std::invalid_argument("expression contains jet variables");
  return t_.begin()->second;
}

int JetExpr::max_order() const {
  int m = 0;
  for (auto& [mono, c] : t_)
    for (auto& [jv, e] : mono) m = std::max(m, jv.order);
  return m;
}

JetExpr JetExpr::operator+(const JetExpr& o) const {
  JetExpr r = *this;
  for (auto& [m, c] : o.t_) r.add(m, c);
  return r;
}
JetExpr JetExpr::operator-(const JetExpr& o) const {
  JetExpr r = *this;
  for (auto& [m, c] : o.t_) r.add(m, -c);
  return r;
}
JetExpr JetExpr::operator-() const {
  JetExpr r(n_);
  for (auto& [m, c] : t_) r.t_[m] = -c;
  return r;
}

static JetMono mono_mul(const JetMono& a, const JetMono& b) {
  JetMono r;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

JetExpr JetExpr::operator*(const JetExpr& o) const {
  JetExpr r(n_);
  for (auto& [m1, c1] : t_)
    for (auto& [m2, c2] : o.t_) r.add(mono_mul(m1, m2), c1 * c2);
  return r;
}
JetExpr JetExpr::operator*(const RatFun& c) const {
  JetExpr r(n_);
  if (c.is_zero()) return r;
  for (auto& [m, cc] : t_) r.add(m, cc * c);
  return r;
}
JetExpr JetExpr::operator*(const Rational& c) const { return *this * RatFun(n_, c); }

JetExpr JetExpr::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power of a jet expression");
  JetExpr r(n_, Rational(1));
  JetExpr b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

std::string JetExpr::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : t_) {
    std::string cs = c.str(names);
    if (first) {
      first = false;
    } else if (cs.size() > 1 && cs[0] == '-') {
      os << " - ";
      cs = cs.substr(1);
    } else {
      os << " + ";
    }
    if (m.empty()) {
      os << cs;
      continue;
    }
    bool unit = (cs == "1");
    if (cs == "-1") {
      os << "-";
      unit = true;
    }
    if (!unit) os << cs << "*";
    bool fst = true;
    for (auto& [jv, e] : m) {
      if (!fst) os << "*";
      fst = false;
      os << names[jv.coord] << "_" << jv.order;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

JetExpr jet_partial(const JetExpr& e, int coord, int order) {
  int n = e.nvars();
  JetExpr r(n);
  if (order == 0) {
    for (auto& [m, c] : e.terms()) r.add(m, c.derivative(coord));
    return r;
  }
  JetVar v{coord, order};
  for (auto& [m, c] : e.terms()) {
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i].first != v) continue;
      JetMono d = m;
      int expo = d[i].second;
      if (expo == 1)
        d.erase(d.begin() + i);
      else
        d[i].second -= 1;
      r.add(d, c * Rational(expo));
      break;
    }
  }
  return r;
}

// monomial times the single jet variable u^coord_(order)
static JetMono mono_times_var(const JetMono& m, int coord, int order) {
  JetVar v{coord, order};
  JetMono r = m;
  auto it = std::lower_bound(r.begin(), r.end(), v,
                             [](const auto& p, const JetVar& w) { return p.first < w; });
  if (it != r.end() && it->first == v)
    it->second += 1;
  else
    r.insert(it, {v, 1});
  return r;
}

static JetExpr total_derivative_once(const JetExpr& e) {
  int n = e.nvars();
  JetExpr r(n);
  for (auto& [m, c] : e.terms()) {
    // derivative of the coefficient: sum_i (dc/du^i) u^i_(1) * m
    for (int i = 0; i < n; ++i) {
      RatFun dc = c.derivative(i);
      if (dc.is_zero()) continue;
      r.add(mono_times_var(m, i, 1), dc);
    }
    // Leibniz over the jet factors
    for (size_t i = 0; i < m.size(); ++i) {
      JetMono d = m;
      int expo = d[i].second;
      JetVar v = d[i].first;
      if (expo == 1)
        d.erase(d.begin() + i);
      else
        d[i].second -= 1;
      r.add(mono_times_var(d, v.coord, v.order + 1), c * Rational(expo));
    }
  }
  return r;
}

JetExpr total_derivative(const JetExpr& e, int k) {
  JetExpr r = e;
  for (int i = 0; i < k; ++i) r = total_derivative_once(r);
  return r;
}

std::vector<JetExpr> variational_derivative(const JetExpr& f) {
  int n = f.nvars();
  int T = f.max_order();
  std::vector<JetExpr> out(n, JetExpr(n));
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t <= T; ++t) {
      JetExpr p = jet_partial(f, i, t);
      if (p.is_zero()) continue;
      JetExpr d = total_derivative(p, t);
      out[i] = (t % 2 == 0) ? out[i] + d : out[i] - d;
    }
  }
  return out;
}

bool is_total_derivative(const JetExpr& f) {
  for (auto& c : variational_derivative(f))
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace loopalg
