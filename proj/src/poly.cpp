#include "loopalg/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

namespace loopalg {

std::string rat_str(const Rational& r) { return r.get_str(); }

Poly Poly::var(int n, int i) {
  Poly p(n);
  Mono m(n, 0);
  m[i] = 1;
  p.t_[m] = 1;
  return p;
}

bool Poly::is_constant() const {
  if (t_.empty()) return true;
  return t_.size() == 1 && mono_deg(t_.begin()->first) == 0;
}

Rational Poly::constant_term() const {
  Mono z(n_, 0);
  auto it = t_.find(z);
  return it == t_.end() ? Rational(0) : it->second;
}

int32_t Poly::total_degree() const {
  return t_.empty() ? -1 : mono_deg(t_.rbegin()->first);
}

int32_t Poly::degree_in(int v) const {
  int32_t d = 0;
  for (auto& [m, c] : t_) d = std::max(d, m[v]);
  return t_.empty() ? -1 : d;
}

bool Poly::depends_on(int v) const {
  for (auto& [m, c] : t_)
    if (m[v] > 0) return true;
  return false;
}

void Poly::set(const Mono& m, const Rational& c) {
  if (c == 0)
    t_.erase(m);
  else
    t_[m] = c;
}

void Poly::add_term(const Mono& m, const Rational& c) {
  auto it = t_.find(m);
  if (it == t_.end()) {
    if (c != 0) t_[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  check(o);
  Poly r = *this;
  for (auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check(o);
  Poly r = *this;
  for (auto& [m, c] : o.t_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(n_);
  for (auto& [m, c] : t_) r.t_[m] = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check(o);
  Poly r(n_);
  for (auto& [m1, c1] : t_)
    for (auto& [m2, c2] : o.t_) {
      Mono m(n_);
      for (int i = 0; i < n_; ++i) m[i] = m1[i] + m2[i];
      r.add_term(m, c1 * c2);
    }
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(n_);
  if (c == 0) return r;
  for (auto& [m, cc] : t_) r.t_[m] = cc * c;
  return r;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power of a polynomial");
  Poly r(n_, Rational(1));
  Poly b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

Poly Poly::derivative(int v) const {
  Poly r(n_);
  for (auto& [m, c] : t_) {
    if (m[v] == 0) continue;
    Mono d = m;
    d[v] -= 1;
    r.add_term(d, c * Rational(m[v]));
  }
  return r;
}

Rational Poly::eval(const std::vector<Rational>& pt) const {
  Rational r = 0;
  for (auto& [m, c] : t_) {
    Rational t = c;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < m[i]; ++k) t *= pt[i];
    r += t;
  }
  return r;
}

Rational Poly::leading_coeff() const {
  if (t_.empty()) return 0;
  return t_.rbegin()->second;
}

Mono Poly::leading_mono() const {
  if (t_.empty()) return Mono(n_, 0);
  return t_.rbegin()->first;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const Mono& m = it->first;
    Rational c = it->second;
    bool neg = c < 0;
    Rational ac = abs(c);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::vector<std::string> factors;
    if (mono_deg(m) == 0 || ac != 1) factors.push_back(rat_str(ac));
    for (int i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      if (m[i] == 1)
        factors.push_back(names[i]);
      else
        factors.push_back(names[i] + "^" + std::to_string(m[i]));
    }
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

Poly make_primitive(const Poly& a) {
  if (a.is_zero()) return a;
  // lcm of coefficient denominators, gcd of numerators
  mpz_class den_lcm = 1, num_gcd = 0;
  for (auto& [m, c] : a.terms()) {
    mpz_class d = c.get_den(), n = c.get_num();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  Poly r = a * scale;
  if (r.leading_coeff() < 0) r = -r;
  return r;
}

// --- internal helpers for GCD ---------------------------------------------

namespace {

// View p as univariate in variable v: vector of Poly coefficients (degree-
// indexed), each not depending on v.
std::vector<Poly> to_uni(const Poly& p, int v) {
  int n = p.nvars();
  std::vector<Poly> co(std::max<int32_t>(p.degree_in(v), 0) + 1, Poly(n));
  if (p.is_zero()) return {};
  for (auto& [m, c] : p.terms()) {
    Mono mm = m;
    int d = mm[v];
    mm[v] = 0;
    co[d].add_term(mm, c);
  }
  while (!co.empty() && co.back().is_zero()) co.pop_back();
  return co;
}

Poly from_uni(const std::vector<Poly>& co, int v, int n) {
  Poly r(n);
  for (size_t d = 0; d < co.size(); ++d) {
    for (auto& [m, c] : co[d].terms()) {
      Mono mm = m;
      mm[v] += (int32_t)d;
      r.add_term(mm, c);
    }
  }
  return r;
}

int uni_deg(const std::vector<Poly>& a) { return (int)a.size() - 1; }

std::vector<Poly> uni_scale(const std::vector<Poly>& a, const Poly& s) {
  std::vector<Poly> r(a.size(), Poly(s.nvars()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

void uni_trim(std::vector<Poly>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Pseudo-remainder of a by b as univariates in v (coefficients are Polys).
std::vector<Poly> uni_prem(std::vector<Poly> a, const std::vector<Poly>& b, int n) {
  int db = uni_deg(b);
  const Poly& lb = b.back();
  while (uni_deg(a) >= db) {
    int da = uni_deg(a);
    Poly la = a.back();
    // a = a*lb - la * x^(da-db) * b
    a = uni_scale(a, lb);
    for (int i = 0; i <= db; ++i) a[da - db + i] = a[da - db + i] - la * b[i];
    uni_trim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly uni_content(const std::vector<Poly>& a) {
  Poly g = a.empty() ? Poly(0) : Poly(a[0].nvars());
  for (auto& c : a) g = poly_gcd(g, c);
  return g;
}

// --- heuristic GCD (integer evaluation / base-xi reconstruction) -----------

bool divides(const Poly& d, const Poly& a, Poly* q = nullptr) {
  try {
    Poly r = divexact(a, d);
    if (q) *q = r;
    return true;
  } catch (const std::runtime_error&) {
    return false;
  }
}

// max |numerator| over terms (inputs are integer polynomials here)
mpz_class height(const Poly& a) {
  mpz_class h = 0;
  for (auto& [m, c] : a.terms()) {
    mpz_class v = abs(c.get_num());
    if (v > h) h = v;
  }
  return h;
}

Poly eval_var(const Poly& a, int v, const mpz_class& xi) {
  Poly r(a.nvars());
  for (auto& [m, c] : a.terms()) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), xi.get_mpz_t(), (unsigned long)m[v]);
    Mono mm = m;
    mm[v] = 0;
    r.add_term(mm, c * Rational(p));
  }
  return r;
}

// symmetric remainder in (-xi/2, xi/2], applied coefficient-wise
Poly smod(const Poly& a, const mpz_class& xi) {
  Poly r(a.nvars());
  mpz_class half = xi / 2;
  for (auto& [m, c] : a.terms()) {
    mpz_class v = c.get_num() % xi;
    if (v > half) v -= xi;
    if (v <= -half) v += xi;
    if (v != 0) r.add_term(m, Rational(v));
  }
  return r;
}

std::optional<Poly> gcdheu(const Poly& a, const Poly& b, int depth) {
  int n = a.nvars();
  int v = -1;
  for (int i = n - 1; i >= 0; --i)
    if (a.depends_on(i) || b.depends_on(i)) {
      v = i;
      break;
    }
  if (v < 0) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.constant_term().get_num().get_mpz_t(),
            b.constant_term().get_num().get_mpz_t());
    return Poly(n, Rational(g));
  }
  if (depth > 12) return std::nullopt;
  mpz_class ha = height(a), hb = height(b);
  mpz_class xi = 2 * (ha < hb ? ha : hb) + 29;
  // a constant verdict can come from an unlucky evaluation point; require two
  // independent points to agree and keep only the shared integer factor
  std::optional<mpz_class> const_hit;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) > 12000) return std::nullopt;
    Poly A = eval_var(a, v, xi), B = eval_var(b, v, xi);
    if (!A.is_zero() && !B.is_zero()) {
      auto gamma = gcdheu(A, B, depth + 1);
      if (gamma) {
        // at the top level the target gcd is primitive, so spurious integer
        // factors in gamma (from gcds of evaluations) can be stripped before
        // reconstruction; at inner levels the content is meaningful
        Poly gsrc = (depth == 0 && !gamma->is_constant()) ? make_primitive(*gamma) : *gamma;
        // reconstruct in v from base-xi digits
        Poly G(n), e = gsrc;
        int d = 0;
        bool ok = true;
        while (!e.is_zero()) {
          if (d > a.degree_in(v) + b.degree_in(v)) {
            ok = false;
            break;
          }
          Poly digit = smod(e, xi);
          for (auto& [m, c] : digit.terms()) {
            Mono mm = m;
            mm[v] = d;
            G.add_term(mm, c);
          }
          e = (e - digit) * Rational(Rational(1) / Rational(xi));
          ++d;
        }
        if (ok && !G.is_zero()) {
          // keep the integer content: at inner levels it encodes the
          // dependence on already-evaluated variables
          if (!G.is_constant() && divides(G, a) && divides(G, b)) return G;
          if (G.is_constant() || gamma->is_constant()) {
            // a constant gamma >= xi/2 reconstructs to a spurious polynomial
            // in v; when that candidate fails division the constant itself is
            // still the level verdict, so record it
            mpz_class val = abs(gamma->is_constant() ? gamma->constant_term().get_num()
                                                     : G.constant_term().get_num());
            if (const_hit) {
              mpz_class g;
              mpz_gcd(g.get_mpz_t(), val.get_mpz_t(), const_hit->get_mpz_t());
              return Poly(n, Rational(g));
            }
            const_hit = val;
          }
        }
      }
    }
    xi = xi * 73794 / 27011;  // irrational-ish growth avoids unlucky points
    if (mpz_even_p(xi.get_mpz_t())) xi += 1;
  }
  return std::nullopt;
}

}  // namespace

Poly divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  int n = a.nvars();
  Poly rem = a, q(n);
  Mono lb = b.leading_mono();
  Rational lcb = b.leading_coeff();
  while (!rem.is_zero()) {
    Mono lm = rem.leading_mono();
    Mono d(n);
    for (int i = 0; i < n; ++i) {
      d[i] = lm[i] - lb[i];
      if (d[i] < 0) throw std::runtime_error("inexact polynomial division");
    }
    Rational qc = rem.leading_coeff() / lcb;
    Poly t(n);
    t.set(d, qc);
    q = q + t;
    rem = rem - t * b;
  }
  return q;
}

Poly poly_gcd(const Poly& a0, const Poly& b0) {
  if (a0.is_zero()) return make_primitive(b0);
  if (b0.is_zero()) return make_primitive(a0);
  Poly a = make_primitive(a0), b = make_primitive(b0);
  int n = a.nvars();
  if (a.is_constant() || b.is_constant()) return Poly(n, Rational(1));
  if (!getenv("LOOPALG_NO_HEUGCD")) {
    if (auto g = gcdheu(a, b, 0)) {
      // the heuristic certifies a common divisor; maximality follows once the
      // cofactors are coprime, so strip and recurse
      Poly G = make_primitive(*g);
      if (G.is_constant()) return Poly(n, Rational(1));
      return make_primitive(G * poly_gcd(divexact(a, G), divexact(b, G)));
    }
  }
  // main variable: last variable occurring in either
  int v = -1;
  for (int i = n - 1; i >= 0; --i)
    if (a.depends_on(i) || b.depends_on(i)) {
      v = i;
      break;
    }
  if (!a.depends_on(v)) {
    // b depends on v, a does not: gcd(a, cont_v(b))
    return poly_gcd(a, uni_content(to_uni(b, v)));
  }
  if (!b.depends_on(v)) return poly_gcd(b, uni_content(to_uni(a, v)));

  auto ua = to_uni(a, v), ub = to_uni(b, v);
  Poly ca = uni_content(ua), cb = uni_content(ub);
  Poly cg = poly_gcd(ca, cb);
  // primitive parts
  for (auto& c : ua) c = divexact(c, ca);
  for (auto& c : ub) c = divexact(c, cb);

  if (uni_deg(ua) < uni_deg(ub)) std::swap(ua, ub);
  while (true) {
    auto r = uni_prem(ua, ub, n);
    if (r.empty()) break;
    if (uni_deg(r) == 0) {
      // gcd of primitive parts is trivial in v
      return cg;
    }
    // primitive part of r
    Poly cr = uni_content(r);
    for (auto& c : r) c = divexact(c, cr);
    ua = std::move(ub);
    ub = std::move(r);
  }
  Poly pp = from_uni(ub, v, n);
  return make_primitive(cg * pp);
}

}  // namespace loopalg
