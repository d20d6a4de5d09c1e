#include "bhcr/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "bhcr/error.hpp"
#include "bhcr/fixtures.hpp"
#include "bhcr/report.hpp"
#include "bhcr/splitting.hpp"

namespace bhcr::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<DiagonalSymmetry> parse_generators(const std::string& text) {
  std::vector<DiagonalSymmetry> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_symmetry(item));
  }
  return out;
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string weights_text(const WeightSystem& ws) {
  return "P(" + join(ws.weights) + ") degree " + std::to_string(ws.degree);
}

Json weight_json(const WeightSystem& ws) {
  std::vector<std::string> charges;
  for (const auto& c : ws.charges) charges.push_back(to_string(c));
  return {{"charges", charges}, {"weights", ws.weights}, {"degree", ws.degree}};
}

Json generators_json(const SymmetryGroup& g) {
  Json arr = Json::array();
  for (const auto& e : g.generators()) arr.push_back(symmetry_json(e));
  return arr;
}

Json split_json(const SplitElement& se) {
  return {{"curve", symmetry_json(se.curve_part)}, {"surface", symmetry_json(se.surface_part)}};
}

Json document(Json input, Json weights, Json groups, Json transpose, Json bv, Json verdicts) {
  return {{"input", std::move(input)},         {"weights", std::move(weights)},
          {"groups", std::move(groups)},       {"transpose", std::move(transpose)},
          {"borcea_voisin", std::move(bv)},    {"verdicts", std::move(verdicts)}};
}

void print_elements(std::ostream& out, const char* label, const SymmetryGroup& g) {
  out << label << " (order " << g.order() << "):";
  for (const auto& e : g.elements()) out << ' ' << e.to_string();
  out << '\n';
}

NikulinTriple parse_triple(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    try {
      std::size_t pos = 0;
      v.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "bad triple component '" + item + "'");
    }
  }
  if (v.size() != 3) throw Error(ErrorKind::ParseError, "a triple needs three components r,a,delta");
  return NikulinTriple::make(v[0], v[1], v[2]);
}

void print_report(std::ostream& out, const char* label, const PotentialReport& p) {
  out << label << ": " << p.polynomial << '\n';
  out << "  charges (" << join(p.charges) << ")\n";
  out << "  weights P(" << join(p.weights) << ") degree " << p.degree << '\n';
  out << "  normalized " << (p.normalized ? "yes" : "no") << ", Calabi-Yau " << (p.calabi_yau ? "yes" : "no")
      << ", atoms " << p.decomposition << '\n';
  out << "  |det A| " << (p.det < 0 ? -p.det : p.det) << ", |Aut| " << p.aut_order << ", |SL| " << p.sl_order
      << ", j (" << join(p.j) << ") of order " << p.j_order << '\n';
  if (p.sl_tilde_order) out << "  |SL/J| " << *p.sl_tilde_order << '\n';
}

int cmd_analyze(const std::string& text, bool with_transpose, bool require_cy, bool json, std::ostream& out) {
  auto report = analyze(text, with_transpose);
  if (require_cy && !report.primal.calabi_yau)
    throw Error(ErrorKind::NonCalabiYau, report.primal.polynomial + " has weights summing to " +
                                             std::to_string([&] {
                                               Integer s = 0;
                                               for (auto w : report.primal.weights) s += w;
                                               return s;
                                             }()) +
                                             " but degree " + std::to_string(report.primal.degree));
  if (json) {
    auto doc = to_json(report);
    doc["input"]["command"] = "analyze";
    out << doc.dump(2) << '\n';
    return 0;
  }
  for (const auto& w : report.warnings) out << "warning: " << w << '\n';
  print_report(out, "potential", report.primal);
  if (report.dual) print_report(out, "transpose", *report.dual);
  return 0;
}

int cmd_transpose(const std::string& text, bool json, std::ostream& out) {
  if (json) {
    auto doc = to_json(analyze(text, true));
    doc["input"]["command"] = "transpose";
    out << doc.dump(2) << '\n';
    return 0;
  }
  out << transpose(parse_delsarte(text)).to_string() << '\n';
  return 0;
}

int cmd_group(const std::string& text, const std::string& generators, bool json, std::ostream& out) {
  auto p = parse_delsarte(text);
  auto ambient = sl_tilde(p);
  auto h = subgroup_generated(ambient, parse_generators(generators));
  auto ht = transposed_group(h);
  auto htt = transposed_group(ht);
  const bool involution = htt.same_elements(h);
  const bool orders = h.order() * ht.order() == ambient.order();
  if (json) {
    auto doc = document({{"command", "group"}, {"polynomial", p.to_string()}, {"generators", generators_json(h)}},
                        weight_json(weight_system(p)),
                        {{"sl_tilde_order", ambient.order()},
                         {"sl_tilde_elements", elements_json(ambient)},
                         {"subgroup_order", h.order()},
                         {"subgroup_elements", elements_json(h)}},
                        {{"polynomial", ht.potential().to_string()},
                         {"subgroup_order", ht.order()},
                         {"subgroup_elements", elements_json(ht)}},
                        nullptr, {{"double_transpose", involution}, {"order_product", orders}});
    out << doc.dump(2) << '\n';
  } else {
    out << "potential " << p.to_string() << '\n';
    print_elements(out, "SL/J", ambient);
    print_elements(out, "G", h);
    out << "transpose " << ht.potential().to_string() << '\n';
    print_elements(out, "G^T", ht);
    out << "(G^T)^T = G: " << (involution ? "yes" : "no") << '\n';
  }
  return involution && orders ? 0 : exit_code(ErrorCategory::Internal);
}

int cmd_mirror_bv(const std::string& curve_text, const std::string& surface_text, const std::string& curve_gens,
                  const std::string& surface_gens, const std::string& triple_text, bool json, std::ostream& out) {
  auto curve = parse_delsarte(curve_text);
  auto surface = parse_delsarte(surface_text);
  std::optional<NikulinTriple> triple;
  if (!triple_text.empty()) triple = parse_triple(triple_text);

  auto model = build_twist_model(curve, surface);
  auto predicted = transposed_twist_weights(model);
  auto tmodel = transposed_model(model);
  auto computed = weight_system(tmodel.product_potential);
  const bool weights_ok = predicted == computed;

  ThetaMap theta(model);
  ThetaMap theta_t(tmodel);
  auto g_e = subgroup_generated(theta.curve_group(), parse_generators(curve_gens));
  auto g_s = subgroup_generated(theta.surface_group(), parse_generators(surface_gens));
  auto cert = verify_transposed_splitting(theta, theta_t, g_e, g_s);
  auto g_et = transposed_group(g_e);
  auto g_st = transposed_group(g_s);

  std::optional<bool> swap;
  Json bv = nullptr;
  if (triple) {
    bv = borcea_voisin_json(*triple);
    swap = hodge_swap_check(*triple);
  }
  const bool ok = weights_ok && cert.holds && swap.value_or(true);

  if (json) {
    Json split = Json::array();
    for (const auto& e : cert.product_subgroup.elements()) split.push_back(symmetry_json(theta.split_representative(e)));
    Json split_t = Json::array();
    for (const auto& e : cert.transposed_product_subgroup.elements())
      split_t.push_back(symmetry_json(theta_t.split_representative(e)));
    Json theta_split = Json::array();
    for (const auto& se : cert.left) theta_split.push_back(split_json(se));
    const auto& par = model.parameters;
    auto doc = document(
        {{"command", "mirror-bv"},
         {"curve", curve.to_string()},
         {"surface", surface.to_string()},
         {"curve_generators", generators_json(g_e)},
         {"surface_generators", generators_json(g_s)},
         {"triple", triple ? triple_json(*triple) : Json(nullptr)}},
        {{"curve", weight_json(model.curve_weights)},
         {"surface", weight_json(model.surface_weights)},
         {"product", {{"polynomial", model.product_potential.to_string()}, {"weights", model.weights.weights},
                      {"degree", model.weights.degree}}},
         {"twist", {{"ell", par.ell}, {"u0", par.u0}, {"v0", par.v0}, {"s0", par.s0}, {"t0", par.t0},
                    {"s", par.s}, {"t", par.t}}},
         {"shape", std::string(to_string(model.shape))}},
        {{"curve_sl_tilde_order", theta.curve_group().order()},
         {"surface_sl_tilde_order", theta.surface_group().order()},
         {"product_sl_tilde_order", theta.product_group().order()},
         {"G_E", elements_json(g_e)},
         {"G_S", elements_json(g_s)},
         {"G_ES", elements_json(cert.product_subgroup)},
         {"G_ES_split_representatives", split}},
        {{"curve", tmodel.curve_potential.to_string()},
         {"surface", tmodel.surface_potential.to_string()},
         {"product", tmodel.product_potential.to_string()},
         {"predicted_weights", {{"weights", predicted.weights}, {"degree", predicted.degree}}},
         {"weights", {{"weights", computed.weights}, {"degree", computed.degree}}},
         {"curve_sl_tilde_order", theta_t.curve_group().order()},
         {"surface_sl_tilde_order", theta_t.surface_group().order()},
         {"product_sl_tilde_order", theta_t.product_group().order()},
         {"G_E^T", elements_json(g_et)},
         {"G_S^T", elements_json(g_st)},
         {"G_ES^T", elements_json(cert.transposed_product_subgroup)},
         {"G_ES^T_split_representatives", split_t},
         {"theta_split", theta_split}},
        bv,
        {{"transposed_weights", weights_ok},
         {"splitting", cert.holds},
         {"hodge_swap", swap ? Json(*swap) : Json(nullptr)}});
    out << doc.dump(2) << '\n';
  } else {
    out << "curve      " << curve.to_string() << " in " << weights_text(model.curve_weights) << '\n';
    out << "surface    " << surface.to_string() << " in " << weights_text(model.surface_weights) << '\n';
    out << "product    " << model.product_potential.to_string() << " in " << weights_text(model.weights) << '\n';
    out << "transpose  " << tmodel.product_potential.to_string() << " in " << weights_text(computed) << '\n';
    out << "predicted  " << weights_text(predicted) << (weights_ok ? " (agrees)" : " (DISAGREES)") << '\n';
    print_elements(out, "G_E", g_e);
    print_elements(out, "G_S", g_s);
    print_elements(out, "G_ES", cert.product_subgroup);
    print_elements(out, "G_ES^T", cert.transposed_product_subgroup);
    out << "G_ES^T split:";
    for (const auto& e : cert.transposed_product_subgroup.elements())
      out << ' ' << theta_t.split_representative(e).to_string();
    out << '\n';
    out << "theta(G_ES^T):";
    for (const auto& se : cert.left) out << " [" << se.curve_part.to_string() << ", " << se.surface_part.to_string() << ']';
    out << '\n';
    print_elements(out, "G_E^T", g_et);
    print_elements(out, "G_S^T", g_st);
    out << "splitting " << (cert.holds ? "holds" : "FAILS") << '\n';
    if (triple) {
      auto t = *triple;
      auto m = lattice_mirror(t);
      auto h = hodge_numbers(t);
      auto hm = hodge_numbers(m);
      out << "triple " << t.to_string() << " hodge (" << h.h11 << "," << h.h21 << "), mirror " << m.to_string()
          << " hodge (" << hm.h11 << "," << hm.h21 << "), swap " << (*swap ? "verified" : "FAILS") << '\n';
    }
  }
  return ok ? 0 : exit_code(ErrorCategory::Internal);
}

int cmd_table(const std::string& action, bool json, std::ostream& out) {
  const auto& rows = elliptic_table();
  auto checks = verify_elliptic_table(rows);
  bool all = true;
  for (const auto& c : checks) all = all && c.ok();

  if (json) {
    Json weights = Json::array(), groups = Json::array(), transposes = Json::array(), verdict_rows = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      const auto& c = checks[i];
      weights.push_back({{"index", r.index}, {"polynomial", r.potential.to_string()}, {"weights", c.weights},
                         {"degree", c.degree}});
      groups.push_back({{"index", r.index}, {"sl_order", c.sl_order}, {"sl_tilde_order", c.sl_tilde_order}});
      Json perm = nullptr;
      if (c.mirror_permutation) perm = {{"rows", c.mirror_permutation->rows}, {"cols", c.mirror_permutation->cols}};
      transposes.push_back({{"index", r.index}, {"transpose", c.transpose_text}, {"mirror_index", r.mirror_index},
                            {"permutation", perm}});
      verdict_rows.push_back({{"index", r.index}, {"ok", c.ok()}, {"failing_field", c.failing_field()}});
    }
    out << document({{"command", "table"}, {"action", action}}, weights, groups, transposes, nullptr,
                    {{"rows", verdict_rows}, {"all_pass", all}})
               .dump(2)
        << '\n';
  } else if (action == "print") {
    out << "#   mirror  weights    |SL|  |SL/J|  potential\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      const auto& c = checks[i];
      std::ostringstream line;
      line << std::left;
      line.width(4);
      line << r.index;
      line.width(8);
      line << r.mirror_index;
      line.width(11);
      line << join(c.weights);
      line.width(6);
      line << c.sl_order;
      line.width(8);
      line << c.sl_tilde_order;
      line << r.potential.to_string();
      out << line.str() << '\n';
    }
  } else {
    for (const auto& c : checks)
      out << "row " << c.index << ": " << (c.ok() ? "ok" : "mismatch in " + c.failing_field()) << '\n';
  }
  if (action == "verify" && !all) {
    for (const auto& c : checks)
      if (!c.ok()) throw Error(ErrorKind::RowMismatch, "row " + std::to_string(c.index) + " field " + c.failing_field());
  }
  return 0;
}

int cmd_triple(int r, int a, int delta, bool json, std::ostream& out) {
  auto t = NikulinTriple::make(r, a, delta);
  auto bv = borcea_voisin_json(t);
  const bool swap = hodge_swap_check(t);
  if (json) {
    out << document({{"command", "triple"}, {"triple", triple_json(t)}}, nullptr, nullptr, nullptr, bv,
                    {{"hodge_swap", swap}})
               .dump(2)
        << '\n';
  } else {
    auto fl = fixed_locus(t);
    auto h = hodge_numbers(t);
    auto m = lattice_mirror(t);
    auto hm = hodge_numbers(m);
    out << "triple " << t.to_string() << '\n';
    out << "fixed locus: genus " << fl.genus << ", " << fl.rational_curves << " rational curves\n";
    out << "hodge (h11,h21) = (" << h.h11 << "," << h.h21 << ")\n";
    out << "mirror " << m.to_string() << " hodge (" << hm.h11 << "," << hm.h21 << ")\n";
    out << "swap " << (swap ? "verified" : "FAILS") << '\n';
    out << "model " << to_string(bhcr_model_available(t)) << '\n';
  }
  return swap ? 0 : exit_code(ErrorCategory::Internal);
}

void apply_enum_cap_env() {
  const char* cap = std::getenv("BHCR_ENUM_CAP");
  if (!cap) return;
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(cap, &pos);
    if (pos != std::string(cap).size() || v <= 0) throw std::invalid_argument(cap);
    set_default_enumeration_cap(static_cast<Integer>(v));
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, std::string("BHCR_ENUM_CAP must be a positive integer, got '") + cap + "'");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Berglund-Huebsch transposition and Borcea-Voisin mirror toolkit", "bhcr"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit a JSON document");

  std::string poly, curve, surface, generators, curve_gens, surface_gens, triple_text, action = "verify";
  bool with_transpose = false, require_cy = false;
  int r = 0, a = 0, delta = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "weights, predicates and symmetry groups of a potential");
  analyze_cmd->add_option("polynomial", poly)->required();
  analyze_cmd->add_flag("--transpose", with_transpose, "also analyze the transposed potential");
  analyze_cmd->add_flag("--require-cy", require_cy, "fail unless the Calabi-Yau condition holds");
  analyze_cmd->add_flag("--json", json);

  auto* transpose_cmd = app.add_subcommand("transpose", "transposed potential");
  transpose_cmd->add_option("polynomial", poly)->required();
  transpose_cmd->add_flag("--json", json);

  auto* group_cmd = app.add_subcommand("group", "subgroup of SL/J and its transposed group");
  group_cmd->add_option("polynomial", poly)->required();
  group_cmd->add_option("--generators", generators, "phase vectors 'a,b,c;d,e,f'");
  group_cmd->add_flag("--json", json);

  auto* bv_cmd = app.add_subcommand("mirror-bv", "Borcea-Voisin model by the twist map and its transpose");
  bv_cmd->add_option("curve", curve)->required();
  bv_cmd->add_option("surface", surface)->required();
  bv_cmd->add_option("--curve-generators", curve_gens, "generators of G_E");
  bv_cmd->add_option("--surface-generators", surface_gens, "generators of G_S");
  bv_cmd->add_option("--triple", triple_text, "invariant-lattice triple r,a,delta of the surface involution");
  bv_cmd->add_flag("--json", json);

  auto* table_cmd = app.add_subcommand("table", "table of elliptic curve mirror pairs");
  table_cmd->add_option("action", action)->check(CLI::IsMember({"verify", "print"}));
  table_cmd->add_flag("--json", json);

  auto* triple_cmd = app.add_subcommand("triple", "Borcea-Voisin data of a triple (r, a, delta)");
  triple_cmd->add_option("r", r)->required();
  triple_cmd->add_option("a", a)->required();
  triple_cmd->add_option("delta", delta)->required();
  triple_cmd->add_flag("--json", json);

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_code(ErrorCategory::Input);
  }

  try {
    apply_enum_cap_env();
    if (analyze_cmd->parsed()) return cmd_analyze(poly, with_transpose, require_cy, json, out);
    if (transpose_cmd->parsed()) return cmd_transpose(poly, json, out);
    if (group_cmd->parsed()) return cmd_group(poly, generators, json, out);
    if (bv_cmd->parsed()) return cmd_mirror_bv(curve, surface, curve_gens, surface_gens, triple_text, json, out);
    if (table_cmd->parsed()) return cmd_table(action, json, out);
    if (triple_cmd->parsed()) return cmd_triple(r, a, delta, json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.category());
  } catch (const std::overflow_error& e) {
    err << "error: integer overflow: " << e.what() << '\n';
    return exit_code(ErrorCategory::Obstruction);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(ErrorCategory::Internal);
  }
  return exit_code(ErrorCategory::Input);
}

}  // namespace bhcr::cli
