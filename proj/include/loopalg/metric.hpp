#pragma once
// Hydrodynamic-type Poisson operators from flat metrics; Lie derivative along
// P-beta; the Poisson bracket on 1-forms in four presentations; instance
// checkers for the anti-homomorphism and Jacobi properties.
#include "loopalg/forms.hpp"

namespace loopalg {

// Rank-3 tensor of rational functions, indexed [i][j][k].
using Tensor3 = std::vector<std::vector<std::vector<RatFun>>>;

Tensor3 tensor3_zero(int n, int nvars);

class MetricData {
 public:
  // General construction: contravariant metric + Levi-Civita symbols
  // Gamma^i_{jk}; Gamma^{ij}_k = -g^{il} Gamma^j_{lk} is derived.
  MetricData(Mat g_contra, Tensor3 gamma_lc);
  // Constant metric: zero Christoffels.
  static MetricData constant(const Mat& eta);

  int n() const { return (int)g_contra_.size(); }
  int nvars() const { return g_contra_[0][0].nvars(); }
  const Mat& g_contra() const { return g_contra_; }
  const Mat& g_cov() const;  // inverse, computed lazily once
  const Tensor3& gamma_lc() const { return gamma_lc_; }
  const Tensor3& gamma_contra() const { return gamma_contra_; }
  bool is_constant() const;

 private:
  Mat g_contra_;
  Tensor3 gamma_lc_;
  Tensor3 gamma_contra_;
  mutable std::optional<Mat> g_cov_;
};

// Zero-curvature in contravariant form:
// g^{is}(d_s Gamma^{jk}_l - d_l Gamma^{jk}_s) - Gamma^{ij}_s Gamma^{sk}_l
// + Gamma^{ik}_s Gamma^{sj}_l, for all (i,j,k,l).
struct FlatnessReport {
  bool flat;
  std::vector<std::tuple<int, int, int, int, RatFun>> defects;
};
FlatnessReport check_flat(const MetricData& M);

// (P alpha)^i = g^{ij} d_x alpha_j + Gamma^{ij}_k u^k_(1) alpha_j.
EvField apply_P(const MetricData& M, const OneForm& alpha);

// Lie derivative of a reduced 1-form along an evolutionary field:
// (Lie_xi alpha)_i = sum_s d_x^s(xi^k) d(alpha_i)/du^k_(s)
//                  + sum_s (-1)^s d_x^s[alpha_k d(xi^k)/du^i_(s)].
OneForm lie_derivative(const EvField& xi, const OneForm& alpha);
// Specialization along P beta (constant metric required by the closed form).
OneForm lie_derivative_P(const MetricData& M, const OneForm& beta, const OneForm& alpha);

enum class BracketMode { definition, flat, general, hydro };

// Poisson bracket of two reduced 1-forms; result reduced.
OneForm bracket(const MetricData& M, const OneForm& alpha, const OneForm& beta, BracketMode mode);

// {f,h} density: sum_i vd(f)_i (P vd(h))^i.
FunctionalDensity functional_bracket(const MetricData& M, const FunctionalDensity& f,
                                     const FunctionalDensity& h);

// apply_P(bracket(a,b,flat)) + [P a, P b]; zero certifies P{a,b} = -[Pa,Pb].
EvField antihom_defect(const MetricData& M, const OneForm& alpha, const OneForm& beta);

// {a,{b,c}} + {b,{c,a}} + {c,{a,b}} in flat mode.
OneForm jacobi_defect(const MetricData& M, const OneForm& a, const OneForm& b, const OneForm& c);

// Cartan balance: Lie_{P beta} alpha - i_{P beta} delta(alpha) - delta<alpha, P beta>.
OneForm cartan_defect(const MetricData& M, const OneForm& alpha, const OneForm& beta);

}  // namespace loopalg
