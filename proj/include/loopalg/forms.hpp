#pragma once
// Loop-space 1-forms, 2-form representatives, functional densities.
#include "loopalg/evfield.hpp"
#include "loopalg/matrix.hpp"

#include <optional>

namespace loopalg {

// A loop-space 1-form: general coefficients alpha_i^{(t)} at (coord i, jet
// order t); once reduced, the canonical coefficients alpha_i are cached and
// the general table holds them at t = 0.
class OneForm {
 public:
  OneForm() : n_(0) {}
  explicit OneForm(int n) : n_(n) {}
  static OneForm from_reduced(std::vector<JetExpr> coeffs);

  int n() const { return n_; }
  const std::map<std::pair<int, int>, JetExpr>& general() const { return gen_; }
  void set_general(int coord, int order, const JetExpr& e);
  bool is_reduced() const { return reduced_.has_value(); }
  const std::vector<JetExpr>& reduced() const;

  bool reduced_is_zero() const;

 private:
  int n_;
  std::map<std::pair<int, int>, JetExpr> gen_;
  std::optional<std::vector<JetExpr>> reduced_;
  friend OneForm reduce_form(const OneForm& a);
};

// alpha_i = sum_t (-1)^t d_x^t alpha_i^{(t)}; idempotent.
OneForm reduce_form(const OneForm& a);

OneForm form_add(const OneForm& a, const OneForm& b);
OneForm form_sub(const OneForm& a, const OneForm& b);
bool form_equal(const OneForm& a, const OneForm& b);  // on reduced coefficients

// 2-form representative: antisymmetric coefficients stored once per ordered
// key pair ((i,s) < (j,t)).
class TwoFormRep {
 public:
  using Slot = std::pair<int, int>;  // (coord, order)
  explicit TwoFormRep(int n) : n_(n) {}
  int n() const { return n_; }
  // adds c to the (a,b) entry and -c to the (b,a) entry
  void add(Slot a, Slot b, const JetExpr& c);
  // full (signed) coefficient at (a,b)
  JetExpr coeff(Slot a, Slot b) const;
  const std::map<std::pair<Slot, Slot>, JetExpr>& entries() const { return t_; }
  bool is_zero() const { return t_.empty(); }

 private:
  int n_;
  std::map<std::pair<Slot, Slot>, JetExpr> t_;  // keys with first < second
};

// A functional density, understood modulo Im(d_x) and constants.
struct FunctionalDensity {
  JetExpr density;
  bool zero_class() const { return is_total_derivative(density); }
};

bool density_equivalent(const FunctionalDensity& f, const FunctionalDensity& g);

// delta of a reduced 1-form: entries d(alpha_i)/du^j_(t) at ((j,t),(i,0)),
// antisymmetrized.
TwoFormRep delta_form(const OneForm& alpha);
// delta of a functional: the exact reduced 1-form with coefficients given by
// the variational derivative of the density.
OneForm delta_functional(const FunctionalDensity& f);

// Whether a 2-form representative is zero as a functional form, i.e. zero
// modulo Im(d_x): integrates by parts to the canonical shape
// sum B^{jt}_i du^j_(t) ^ du^i and checks the Helmholtz self-adjointness
// conditions on the coefficient operator.
bool two_form_zero_class(const TwoFormRep& omega);

// Contractions with an evolutionary field.
FunctionalDensity contract(const OneForm& alpha, const EvField& xi);  // pairing
OneForm contract(const TwoFormRep& omega, const EvField& xi);
FunctionalDensity pairing(const OneForm& alpha, const EvField& xi);

// Finite-dimensional exactness defect for u-only 1-forms:
// entry (i,j) = d alpha_i/du^j - d alpha_j/du^i.
Mat exactness_defect(const OneForm& alpha);

}  // namespace loopalg
