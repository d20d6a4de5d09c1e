#include "bhcr/report.hpp"

#include "bhcr/delsarte.hpp"
#include "bhcr/error.hpp"
#include "bhcr/weights.hpp"

namespace bhcr {

namespace {

std::vector<std::string> rational_strings(const RationalVector& v) {
  std::vector<std::string> out;
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

}  // namespace

Json symmetry_json(const DiagonalSymmetry& g) { return rational_strings(g.phases()); }

Json elements_json(const SymmetryGroup& g) {
  Json arr = Json::array();
  for (const auto& e : g.elements()) arr.push_back(symmetry_json(e));
  return arr;
}

Json triple_json(const NikulinTriple& t) { return Json::array({t.r, t.a, t.delta}); }

PotentialReport describe_potential(const DelsartePolynomial& p) {
  PotentialReport r;
  r.polynomial = p.to_string();
  r.variables = p.var_names();
  for (std::size_t i = 0; i < p.size(); ++i) r.exponents.push_back(p.exponents().row(i));
  r.coefficients = p.coefficients();

  auto ws = weight_system(p);
  r.charges = rational_strings(ws.charges);
  r.weights = ws.weights;
  r.degree = ws.degree;
  r.normalized = is_normalized(ws);
  r.calabi_yau = is_calabi_yau(ws);
  r.decomposition = atomic_decomposition(p).to_string();

  r.det = p.determinant();
  r.aut_order = static_cast<Integer>(aut_group(p).order());
  r.sl_order = static_cast<Integer>(sl_group(p).order());
  auto j = j_element(p);
  r.j = rational_strings(j.phases());
  r.j_order = element_order(j);
  if (is_integral(j.phase_sum())) {
    auto q = sl_tilde(p);
    r.sl_tilde_order = static_cast<Integer>(q.order());
    for (const auto& e : q.elements()) r.sl_tilde_elements.push_back(rational_strings(e.phases()));
  }
  return r;
}

AnalysisReport analyze(std::string_view text, bool with_transpose) {
  AnalysisReport r;
  r.input = std::string(text);
  auto p = parse_delsarte(text, &r.warnings);
  r.primal = describe_potential(p);
  if (with_transpose) r.dual = describe_potential(transpose(p));
  return r;
}

namespace {

Json input_section(const PotentialReport& p) {
  return {{"polynomial", p.polynomial},
          {"variables", p.variables},
          {"exponents", p.exponents},
          {"coefficients", p.coefficients}};
}

Json weights_section(const PotentialReport& p) {
  return {{"charges", p.charges},     {"weights", p.weights},       {"degree", p.degree},
          {"normalized", p.normalized}, {"calabi_yau", p.calabi_yau}, {"decomposition", p.decomposition}};
}

Json groups_section(const PotentialReport& p) {
  Json g = {{"det", p.det}, {"aut_order", p.aut_order}, {"sl_order", p.sl_order}, {"j", p.j}, {"j_order", p.j_order}};
  if (p.sl_tilde_order) {
    g["sl_tilde_order"] = *p.sl_tilde_order;
    g["sl_tilde_elements"] = p.sl_tilde_elements;
  } else {
    g["sl_tilde_order"] = nullptr;
    g["sl_tilde_elements"] = nullptr;
  }
  return g;
}

void read_input(const Json& in, PotentialReport& p) {
  p.polynomial = in.at("polynomial").get<std::string>();
  p.variables = in.at("variables").get<std::vector<std::string>>();
  p.exponents = in.at("exponents").get<std::vector<std::vector<Integer>>>();
  p.coefficients = in.at("coefficients").get<std::vector<Integer>>();
}

void read_weights(const Json& w, PotentialReport& p) {
  p.charges = w.at("charges").get<std::vector<std::string>>();
  p.weights = w.at("weights").get<std::vector<Integer>>();
  p.degree = w.at("degree").get<Integer>();
  p.normalized = w.at("normalized").get<bool>();
  p.calabi_yau = w.at("calabi_yau").get<bool>();
  p.decomposition = w.at("decomposition").get<std::string>();
}

void read_groups(const Json& g, PotentialReport& p) {
  p.det = g.at("det").get<Integer>();
  p.aut_order = g.at("aut_order").get<Integer>();
  p.sl_order = g.at("sl_order").get<Integer>();
  p.j = g.at("j").get<std::vector<std::string>>();
  p.j_order = g.at("j_order").get<Integer>();
  if (!g.at("sl_tilde_order").is_null()) {
    p.sl_tilde_order = g.at("sl_tilde_order").get<Integer>();
    p.sl_tilde_elements = g.at("sl_tilde_elements").get<std::vector<std::vector<std::string>>>();
  }
}

}  // namespace

Json to_json(const AnalysisReport& r) {
  Json in = input_section(r.primal);
  in["text"] = r.input;
  in["warnings"] = r.warnings;
  Json dual = nullptr;
  if (r.dual) {
    dual = input_section(*r.dual);
    dual["weights"] = weights_section(*r.dual);
    dual["groups"] = groups_section(*r.dual);
  }
  Json verdicts = {{"calabi_yau", r.primal.calabi_yau},
                   {"normalized", r.primal.normalized},
                   {"non_degenerate", r.primal.decomposition != "undetermined"}};
  return {{"input", in},
          {"weights", weights_section(r.primal)},
          {"groups", groups_section(r.primal)},
          {"transpose", dual},
          {"borcea_voisin", nullptr},
          {"verdicts", verdicts}};
}

AnalysisReport analysis_from_json(const Json& j) {
  AnalysisReport r;
  const auto& in = j.at("input");
  r.input = in.at("text").get<std::string>();
  r.warnings = in.at("warnings").get<std::vector<std::string>>();
  read_input(in, r.primal);
  read_weights(j.at("weights"), r.primal);
  read_groups(j.at("groups"), r.primal);
  if (!j.at("transpose").is_null()) {
    PotentialReport d;
    const auto& t = j.at("transpose");
    read_input(t, d);
    read_weights(t.at("weights"), d);
    read_groups(t.at("groups"), d);
    r.dual = std::move(d);
  }
  return r;
}

Json borcea_voisin_json(const NikulinTriple& t) {
  const auto fl = fixed_locus(t);
  const auto h = hodge_numbers(t);
  const auto m = lattice_mirror(t);
  const auto hm = hodge_numbers(m);
  return {{"triple", triple_json(t)},
          {"fixed_locus", {{"genus", fl.genus}, {"rational_curves", fl.rational_curves}}},
          {"hodge", {{"h11", h.h11}, {"h21", h.h21}}},
          {"mirror_triple", triple_json(m)},
          {"mirror_hodge", {{"h11", hm.h11}, {"h21", hm.h21}}},
          {"hodge_swap", hodge_swap_check(t)},
          {"availability", std::string(to_string(bhcr_model_available(t)))}};
}

}  // namespace bhcr
