// loopcalc: exact variational calculus on the formal loop space.
#include "loopalg/parser.hpp"
#include "loopalg/specio.hpp"

#include <CLI11.hpp>
#include <iostream>

using namespace loopalg;
using nlohmann::json;

namespace {

BracketMode parse_mode(const std::string& m) {
  if (m == "definition") return BracketMode::definition;
  if (m == "flat") return BracketMode::flat;
  if (m == "general") return BracketMode::general;
  if (m == "hydro") return BracketMode::hydro;
  throw std::invalid_argument("unknown bracket mode '" + m + "'");
}

const MetricData& need_metric(const SpecFile& sf) {
  if (!sf.spec.metric) throw std::invalid_argument("spec file has no metric");
  return *sf.spec.metric;
}

void print_report(const CheckReport& r, bool as_json) {
  if (as_json) {
    std::cout << report_to_json(r).dump(2) << "\n";
    return;
  }
  for (auto& it : r.items) {
    std::cout << (it.pass ? "PASS" : "FAIL") << "  " << it.name;
    if (!it.pass && !it.defect.empty()) std::cout << "  [" << it.defect << "]";
    std::cout << "\n";
  }
}

void print_form(const OneForm& a, const std::vector<std::string>& names, bool as_json) {
  if (as_json) {
    std::cout << form_to_json(a, names).dump(2) << "\n";
    return;
  }
  const auto& red = a.reduced();
  for (size_t i = 0; i < red.size(); ++i)
    std::cout << "alpha_" << (i + 1) << " = " << red[i].str(names) << "\n";
}

void print_field(const EvField& xi, const std::vector<std::string>& names) {
  for (int i = 0; i < xi.n(); ++i)
    std::cout << "xi^" << (i + 1) << " = " << xi.comp[i].str(names) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Exact symbolic calculus for hydrodynamic Poisson brackets on the loop space"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON reports");

  std::string spec_path, form_a, form_b, form_c, mode_str = "definition";
  std::vector<std::string> labels;
  int eps_n = 3;
  std::string eps_str = "1";
  bool emit = false;

  auto* cs = app.add_subcommand("check-structure", "run all structure checks on a spec");
  cs->add_option("spec", spec_path)->required();

  auto* br = app.add_subcommand("bracket", "Poisson bracket of two 1-forms");
  br->add_option("--mode", mode_str, "definition|flat|general|hydro");
  br->add_option("spec", spec_path)->required();
  br->add_option("a", form_a)->required();
  br->add_option("b", form_b)->required();

  auto* rd = app.add_subcommand("reduce", "reduce a 1-form to standard form");
  rd->add_option("form", form_a)->required();

  auto* ap = app.add_subcommand("apply-p", "apply the Poisson operator to a 1-form");
  ap->add_option("spec", spec_path)->required();
  ap->add_option("form", form_a)->required();

  auto* ja = app.add_subcommand("jacobi", "Jacobi cyclic sum of three 1-forms (flat mode)");
  ja->add_option("spec", spec_path)->required();
  ja->add_option("a", form_a)->required();
  ja->add_option("b", form_b)->required();
  ja->add_option("c", form_c)->required();

  auto* ca = app.add_subcommand("cartan", "Cartan-formula balance for a pair of 1-forms");
  ca->add_option("spec", spec_path)->required();
  ca->add_option("a", form_a)->required();
  ca->add_option("b", form_b)->required();

  auto* hv = app.add_subcommand("hierarchy-verify", "recursion and involution checks on labeled forms");
  hv->add_option("spec", spec_path)->required();
  hv->add_option("forms", labels, "labels of forms from the spec, in recursion order");

  auto* ep = app.add_subcommand("epsilon", "build the epsilon-system and check it");
  ep->add_option("--n", eps_n)->required();
  ep->add_option("--eps", eps_str)->required();
  ep->add_flag("--emit", emit, "write epsilonN.json");

  auto* cc = app.add_subcommand("casimir-check", "test whether P applied to a 1-form vanishes");
  cc->add_option("spec", spec_path)->required();
  cc->add_option("form", form_a)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (cs->parsed()) {
    SpecFile sf = load_spec(spec_path);
    CheckReport r = check_fmanifold(sf.spec);
    if (sf.spec.metric) {
      FlatnessReport fr = check_flat(*sf.spec.metric);
      std::string defect;
      if (!fr.flat) {
        auto& [i, j, k, l, v] = fr.defects.front();
        defect = "R(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                 std::to_string(k + 1) + "," + std::to_string(l + 1) +
                 ") = " + v.str(sf.spec.coords);
      }
      r.items.push_back({"metric-flatness", fr.flat, defect});
      if (sf.spec.product) {
        auto inv = check_invariance(*sf.spec.metric, *sf.spec.product, sf.spec.coords);
        r.items.push_back({"metric-invariance", inv.pass, inv.defect});
      }
    }
    print_report(r, as_json);
    return r.all_pass() ? 0 : 1;
  }

  if (br->parsed()) {
    SpecFile sf = load_spec(spec_path);
    const MetricData& M = need_metric(sf);
    OneForm a = reduce_form(load_form(form_a, sf.spec.coords));
    OneForm b = reduce_form(load_form(form_b, sf.spec.coords));
    OneForm out = bracket(M, a, b, parse_mode(mode_str));
    print_form(out, sf.spec.coords, as_json);
    return 0;
  }

  if (rd->parsed()) {
    std::vector<std::string> names;
    OneForm a = reduce_form(load_form(form_a, {}, &names));
    print_form(a, names, as_json);
    return 0;
  }

  if (ap->parsed()) {
    SpecFile sf = load_spec(spec_path);
    const MetricData& M = need_metric(sf);
    OneForm a = reduce_form(load_form(form_a, sf.spec.coords));
    print_field(apply_P(M, a), sf.spec.coords);
    return 0;
  }

  if (ja->parsed()) {
    SpecFile sf = load_spec(spec_path);
    const MetricData& M = need_metric(sf);
    OneForm a = reduce_form(load_form(form_a, sf.spec.coords));
    OneForm b = reduce_form(load_form(form_b, sf.spec.coords));
    OneForm c = reduce_form(load_form(form_c, sf.spec.coords));
    OneForm d = jacobi_defect(M, a, b, c);
    bool ok = d.reduced_is_zero();
    std::cout << (ok ? "PASS  jacobi\n" : "FAIL  jacobi\n");
    if (!ok) print_form(d, sf.spec.coords, as_json);
    return ok ? 0 : 1;
  }

  if (ca->parsed()) {
    SpecFile sf = load_spec(spec_path);
    const MetricData& M = need_metric(sf);
    OneForm a = reduce_form(load_form(form_a, sf.spec.coords));
    OneForm b = reduce_form(load_form(form_b, sf.spec.coords));
    OneForm d = cartan_defect(M, a, b);
    bool ok = d.reduced_is_zero();
    std::cout << (ok ? "PASS  cartan\n" : "FAIL  cartan\n");
    if (!ok) print_form(d, sf.spec.coords, as_json);
    return ok ? 0 : 1;
  }

  if (hv->parsed()) {
    SpecFile sf = load_spec(spec_path);
    CheckReport r = check_fmanifold(sf.spec);
    if (sf.spec.metric && sf.spec.product) {
      auto inv = check_invariance(*sf.spec.metric, *sf.spec.product, sf.spec.coords);
      r.items.push_back({"metric-invariance", inv.pass, inv.defect});
    }
    std::vector<const HierarchyForm*> chain;
    if (labels.empty()) {
      for (auto& f : sf.forms) chain.push_back(&f);
    } else {
      for (auto& lab : labels) {
        const HierarchyForm* found = nullptr;
        for (auto& f : sf.forms)
          if (f.label == lab) found = &f;
        if (!found) throw std::invalid_argument("no form labeled '" + lab + "' in the spec");
        chain.push_back(found);
      }
    }
    for (size_t k = 0; k + 1 < chain.size(); ++k) {
      auto rec = verify_recursion(sf.spec, *chain[k + 1], *chain[k]);
      r.items.push_back({"recursion " + chain[k]->label + " -> " + chain[k + 1]->label, rec.pass,
                         rec.defect});
    }
    if (sf.spec.metric) {
      for (size_t i = 0; i < chain.size(); ++i)
        for (size_t k = i + 1; k < chain.size(); ++k) {
          OneForm d = involution_check(*sf.spec.metric, *chain[i], *chain[k]);
          bool ok = d.reduced_is_zero();
          r.items.push_back({"involution {" + chain[i]->label + ", " + chain[k]->label + "}", ok,
                             ok ? "" : "nonzero bracket"});
        }
    }
    print_report(r, as_json);
    return r.all_pass() ? 0 : 1;
  }

  if (ep->parsed()) {
    Rational eps(eps_str);
    eps.canonicalize();
    SpecFile sf;
    sf.spec = epsilon_system(eps_n, eps);
    CheckReport r = check_fmanifold(sf.spec);
    if (sf.spec.metric) {
      FlatnessReport fr = check_flat(*sf.spec.metric);
      r.items.push_back({"metric-flatness", fr.flat, fr.flat ? "" : "nonzero curvature"});
    }
    if (emit) {
      std::string path = "epsilon" + std::to_string(eps_n) + ".json";
      save_spec(sf, path);
      std::cout << "wrote " << path << "\n";
    }
    print_report(r, as_json);
    return r.all_pass() ? 0 : 1;
  }

  if (cc->parsed()) {
    SpecFile sf = load_spec(spec_path);
    const MetricData& M = need_metric(sf);
    OneForm a = reduce_form(load_form(form_a, sf.spec.coords));
    EvField out = apply_P(M, a);
    bool ok = out.is_zero();
    std::cout << (ok ? "PASS  casimir\n" : "FAIL  casimir\n");
    if (!ok) print_field(out, sf.spec.coords);
    return ok ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const loopalg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
