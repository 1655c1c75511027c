#include "loopalg/specio.hpp"
#include "loopalg/parser.hpp"

#include <fstream>

namespace loopalg {

using nlohmann::json;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

RatFun parse_entry(const json& j, const std::vector<std::string>& coords) {
  if (j.is_number_integer()) return RatFun((int)coords.size(), Rational((long)j.get<long>()));
  if (!j.is_string()) throw std::invalid_argument("expected an expression string");
  return parse_ratfun(j.get<std::string>(), coords);
}

Mat parse_matrix(const json& j, const std::vector<std::string>& coords) {
  int n = (int)coords.size();
  if (!j.is_array() || (int)j.size() != n) throw std::invalid_argument("metric must be an n x n matrix");
  Mat m(n, std::vector<RatFun>(n, RatFun(n)));
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || (int)j[i].size() != n)
      throw std::invalid_argument("metric must be an n x n matrix");
    for (int k = 0; k < n; ++k) m[i][k] = parse_entry(j[i][k], coords);
  }
  return m;
}

Tensor3 parse_tensor3(const json& j, const std::vector<std::string>& coords, const char* what) {
  int n = (int)coords.size();
  Tensor3 t = tensor3_zero(n, n);
  if (!j.is_array() || (int)j.size() != n)
    throw std::invalid_argument(std::string(what) + " must be an n x n x n array");
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || (int)j[i].size() != n)
      throw std::invalid_argument(std::string(what) + " must be an n x n x n array");
    for (int a = 0; a < n; ++a) {
      if (!j[i][a].is_array() || (int)j[i][a].size() != n)
        throw std::invalid_argument(std::string(what) + " must be an n x n x n array");
      for (int b = 0; b < n; ++b) t[i][a][b] = parse_entry(j[i][a][b], coords);
    }
  }
  return t;
}

json mat_json(const Mat& m, const std::vector<std::string>& names) {
  json j = json::array();
  for (auto& row : m) {
    json r = json::array();
    for (auto& e : row) r.push_back(e.str(names));
    j.push_back(r);
  }
  return j;
}

json tensor3_json(const Tensor3& t, const std::vector<std::string>& names) {
  json j = json::array();
  for (auto& a : t) {
    json ja = json::array();
    for (auto& b : a) {
      json jb = json::array();
      for (auto& e : b) jb.push_back(e.str(names));
      ja.push_back(jb);
    }
    j.push_back(ja);
  }
  return j;
}

}  // namespace

SpecFile load_spec(const std::string& path) {
  json j = read_json(path);
  if (!j.is_object()) throw std::invalid_argument("spec file must be a JSON object");
  if (j.value("spec_version", 0) != 1) throw std::invalid_argument("unsupported spec_version");
  SpecFile sf;
  StructureSpec& s = sf.spec;
  if (!j.contains("coords") || !j["coords"].is_array())
    throw std::invalid_argument("spec file needs a coords array");
  for (auto& c : j["coords"]) s.coords.push_back(c.get<std::string>());
  s.n = (int)s.coords.size();
  if (j.contains("n") && j["n"].get<int>() != s.n)
    throw std::invalid_argument("n does not match the number of coords");
  if (s.n == 0) throw std::invalid_argument("coords must be nonempty");

  std::optional<Tensor3> gamma;
  if (j.contains("connection")) gamma = parse_tensor3(j["connection"], s.coords, "connection");
  if (j.contains("metric")) {
    Mat g = parse_matrix(j["metric"], s.coords);
    s.metric = MetricData(g, gamma ? *gamma : tensor3_zero(s.n, s.n));
  }
  if (gamma) s.connection = ConnectionData{*gamma};
  if (j.contains("product")) s.product = ProductStructure{parse_tensor3(j["product"], s.coords, "product")};
  if (j.contains("map")) {
    std::vector<RatFun> m;
    for (auto& e : j["map"]) m.push_back(parse_entry(e, s.coords));
    if ((int)m.size() != s.n) throw std::invalid_argument("map must have n components");
    s.map = m;
  }
  if (j.contains("eta")) s.eta = parse_matrix(j["eta"], s.coords);
  if (j.contains("forms")) {
    if (!j["forms"].is_object()) throw std::invalid_argument("forms must be an object");
    for (auto& [label, arr] : j["forms"].items()) {
      HierarchyForm f;
      f.label = label;
      for (auto& e : arr) f.omega.push_back(parse_entry(e, s.coords));
      if ((int)f.omega.size() != s.n)
        throw std::invalid_argument("form '" + label + "' must have n components");
      sf.forms.push_back(std::move(f));
    }
  }
  return sf;
}

nlohmann::json spec_to_json(const SpecFile& sf, const std::vector<std::string>& names) {
  const StructureSpec& s = sf.spec;
  json j;
  j["spec_version"] = 1;
  j["n"] = s.n;
  j["coords"] = names;
  if (s.metric) j["metric"] = mat_json(s.metric->g_contra(), names);
  if (s.connection) j["connection"] = tensor3_json(s.connection->gamma, names);
  if (s.product) j["product"] = tensor3_json(s.product->c, names);
  if (s.map) {
    json m = json::array();
    for (auto& e : *s.map) m.push_back(e.str(names));
    j["map"] = m;
  }
  if (s.eta) j["eta"] = mat_json(*s.eta, names);
  if (!sf.forms.empty()) {
    json f = json::object();
    for (auto& w : sf.forms) {
      json arr = json::array();
      for (auto& e : w.omega) arr.push_back(e.str(names));
      f[w.label] = arr;
    }
    j["forms"] = f;
  }
  return j;
}

void save_spec(const SpecFile& sf, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << spec_to_json(sf, sf.spec.coords).dump(2) << "\n";
}

OneForm load_form(const std::string& path, const std::vector<std::string>& coords,
                  std::vector<std::string>* names_out) {
  json j = read_json(path);
  if (!j.is_object()) throw std::invalid_argument("form file must be a JSON object");
  std::vector<std::string> names = coords;
  if (j.contains("coords")) {
    names.clear();
    for (auto& c : j["coords"]) names.push_back(c.get<std::string>());
    if (!coords.empty() && names != coords)
      throw std::invalid_argument("form coords disagree with the structure spec");
  }
  if (names.empty()) throw std::invalid_argument("form file needs a coords array");
  if (names_out) *names_out = names;
  int n = (int)names.size();
  if (j.contains("reduced")) {
    std::vector<JetExpr> c;
    for (auto& e : j["reduced"]) c.push_back(parse_expr(e.get<std::string>(), names));
    if ((int)c.size() != n) throw std::invalid_argument("reduced form must have n components");
    return OneForm::from_reduced(std::move(c));
  }
  if (j.contains("general")) {
    OneForm a(n);
    for (auto& e : j["general"]) {
      int i = e.at("i").get<int>();
      int t = e.at("t").get<int>();
      if (i < 1 || i > n || t < 0) throw std::invalid_argument("bad general entry indices");
      a.set_general(i - 1, t, parse_expr(e.at("expr").get<std::string>(), names));
    }
    return a;
  }
  throw std::invalid_argument("form file needs a 'reduced' or 'general' key");
}

nlohmann::json form_to_json(const OneForm& reduced, const std::vector<std::string>& coords) {
  json j;
  j["coords"] = coords;
  json arr = json::array();
  for (auto& e : reduced.reduced()) arr.push_back(e.str(coords));
  j["reduced"] = arr;
  return j;
}

nlohmann::json report_to_json(const CheckReport& r) {
  json items = json::array();
  for (auto& it : r.items) {
    json e;
    e["name"] = it.name;
    e["pass"] = it.pass;
    if (!it.pass) e["defect"] = it.defect;
    items.push_back(e);
  }
  json j;
  j["checks"] = items;
  j["all_pass"] = r.all_pass();
  return j;
}

}  // namespace loopalg
