#include "bhcr/fixtures.hpp"

#include <sstream>

#include "bhcr/error.hpp"
#include "bhcr/symmetry.hpp"
#include "bhcr/weights.hpp"
#include "embedded_data.hpp"

namespace bhcr {

namespace {

std::vector<Integer> parse_int_list(const std::string& s) {
  std::vector<Integer> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stoll(item));
  return out;
}

std::string strip_comment(const std::string& line) { return line.substr(0, line.find('#')); }

}  // namespace

std::vector<EllipticTableRow> parse_elliptic_table(std::string_view text) {
  std::vector<EllipticTableRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(strip_comment(line));
    int index, mirror;
    std::string weights, poly;
    Integer sl, slt;
    if (!(ls >> index)) continue;
    if (!(ls >> mirror >> weights >> sl >> slt >> poly))
      throw Error(ErrorKind::ParseError, "malformed table line: " + line);
    rows.push_back({index, mirror, parse_int_list(weights), parse_delsarte(poly), sl, slt, poly});
  }
  return rows;
}

const std::vector<EllipticTableRow>& elliptic_table() {
  static const auto rows = parse_elliptic_table(data::elliptic_curves());
  return rows;
}

const EllipticTableRow& elliptic_row(int index) {
  for (const auto& r : elliptic_table())
    if (r.index == index) return r;
  throw Error(ErrorKind::OutOfRange, "no table row " + std::to_string(index));
}

const WorkedExample& worked_example() {
  static const WorkedExample ex = [] {
    std::istringstream in{std::string(data::worked_example())};
    std::string line, curve, surface;
    std::optional<NikulinTriple> triple;
    while (std::getline(in, line)) {
      std::istringstream ls(strip_comment(line));
      std::string key;
      if (!(ls >> key)) continue;
      if (key == "curve") ls >> curve;
      else if (key == "surface") ls >> surface;
      else if (key == "triple") {
        int r, a, d;
        ls >> r >> a >> d;
        triple = NikulinTriple::make(r, a, d);
      }
    }
    if (curve.empty() || surface.empty() || !triple)
      throw Error(ErrorKind::ParseError, "incomplete worked example fixture");
    return WorkedExample{curve, surface, parse_delsarte(curve), parse_delsarte(surface), *triple};
  }();
  return ex;
}

std::string RowCheck::failing_field() const {
  if (!weights_ok) return "weights";
  if (!sl_ok) return "|SL(W)|";
  if (!sl_tilde_ok) return "|SL(W)/J_W|";
  if (!mirror_ok) return "mirror";
  return {};
}

std::vector<RowCheck> verify_elliptic_table(const std::vector<EllipticTableRow>& rows) {
  std::vector<RowCheck> out;
  for (const auto& row : rows) {
    RowCheck c;
    c.index = row.index;
    auto ws = weight_system(row.potential);
    c.weights = ws.weights;
    c.degree = ws.degree;
    c.sl_order = static_cast<Integer>(sl_group(row.potential).order());
    c.sl_tilde_order = static_cast<Integer>(sl_tilde(row.potential).order());
    auto t = transpose(row.potential);
    c.transpose_text = t.to_string();
    c.weights_ok = c.weights == row.weights && is_calabi_yau(ws);
    c.sl_ok = c.sl_order == row.sl_order;
    c.sl_tilde_ok = c.sl_tilde_order == row.sl_tilde_order;
    const EllipticTableRow* mirror = nullptr;
    for (const auto& r : rows)
      if (r.index == row.mirror_index) mirror = &r;
    if (mirror) {
      c.mirror_permutation = equivalent_up_to_permutation(t, mirror->potential);
      c.mirror_ok = c.mirror_permutation.has_value() && mirror->mirror_index == row.index;
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace bhcr
