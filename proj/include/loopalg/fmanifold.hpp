#pragma once
// F-manifold structures, hierarchy recursion checks, metric pullback, the
// epsilon-system builder, and involution checks.
#include "loopalg/metric.hpp"

namespace loopalg {

struct ProductStructure {
  Tensor3 c;  // c^i_{jk}
};

struct ConnectionData {
  Tensor3 gamma;  // Gamma^i_{jk}, symmetric in (j,k)
};

struct StructureSpec {
  int n = 0;
  std::vector<std::string> coords;
  std::optional<ConnectionData> connection;
  std::optional<ProductStructure> product;
  std::optional<MetricData> metric;
  std::optional<std::vector<RatFun>> map;  // flat-coordinate map t(u)
  std::optional<Mat> eta;                  // constant target metric
};

struct HierarchyForm {
  std::string label;          // e.g. "(1,0)"
  std::vector<RatFun> omega;  // u-only coefficients
};

struct CheckItem {
  std::string name;
  bool pass;
  std::string defect;  // empty when pass
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool all_pass() const {
    for (auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

// Product commutativity/associativity, connection flatness (lower Riemann
// tensor), compatibility nabla_l c^i_{jk} = nabla_j c^i_{lk}.
CheckReport check_fmanifold(const StructureSpec& spec);

// c^i_{jk} g^{kl} = c^l_{jk} g^{ki}.
struct BoolWithDefect {
  bool pass;
  std::string defect;
};
BoolWithDefect check_invariance(const MetricData& g, const ProductStructure& c,
                                const std::vector<std::string>& names);

// Forms: nabla_k w[next]_h = g_{ih} c^i_{kl} g^{lm} w[prev]_m.
BoolWithDefect verify_recursion(const StructureSpec& spec, const HierarchyForm& next,
                                const HierarchyForm& prev);
// Fields: nabla_j X[next]^i = c^i_{jk} X[prev]^k.
BoolWithDefect verify_recursion_fields(const StructureSpec& spec, const std::vector<RatFun>& next,
                                       const std::vector<RatFun>& prev);

// c^i_{jm} nabla_k X^m = c^i_{km} nabla_j X^m.
BoolWithDefect check_av_symmetry(const StructureSpec& spec, const std::vector<RatFun>& X);

// xi^i = c^i_{jk} X^k u^j_(1).
EvField build_flow(const ProductStructure& c, const std::vector<RatFun>& X);

// g_{ij} = J^a_i eta_{ab} J^b_j; contravariant by inversion; Levi-Civita from g.
MetricData pullback_metric(const std::vector<RatFun>& map, const Mat& eta);

// The epsilon-system: Gamma^i_{ji} = eps/(u^i - u^j) (i != j),
// Gamma^i_{jj} = -Gamma^i_{ji}, Gamma^i_{ii} = -sum_{k != i} Gamma^i_{ik},
// zero otherwise; product c^i_{jk} = delta^i_j delta^i_k. For n = 3, eps = 1
// the flat-coordinate map and antidiagonal eta (and pulled-back metric) are
// attached.
StructureSpec epsilon_system(int n, const Rational& eps);

// Reduced hydro-mode bracket of two u-only forms; zero certifies involution.
OneForm involution_check(const MetricData& M, const HierarchyForm& w1, const HierarchyForm& w2);

}  // namespace loopalg
