#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bhcr/borcea_voisin.hpp"
#include "bhcr/symmetry.hpp"

namespace bhcr {

using Json = nlohmann::json;

/// Everything `analyze` computes about one potential. Rationals are kept as
/// "p/q" strings so the record maps one-to-one onto its JSON form.
struct PotentialReport {
  std::string polynomial;
  std::vector<std::string> variables;
  std::vector<std::vector<Integer>> exponents;
  std::vector<Integer> coefficients;

  std::vector<std::string> charges;
  std::vector<Integer> weights;
  Integer degree = 0;
  bool normalized = false;
  bool calabi_yau = false;
  std::string decomposition;

  Integer det = 0;
  Integer aut_order = 0;
  Integer sl_order = 0;
  std::vector<std::string> j;
  Integer j_order = 0;
  std::optional<Integer> sl_tilde_order;
  std::vector<std::vector<std::string>> sl_tilde_elements;

  bool operator==(const PotentialReport&) const = default;
};

struct AnalysisReport {
  std::string input;
  std::vector<std::string> warnings;
  PotentialReport primal;
  std::optional<PotentialReport> dual;

  bool operator==(const AnalysisReport&) const = default;
};

PotentialReport describe_potential(const DelsartePolynomial& p);
AnalysisReport analyze(std::string_view text, bool with_transpose);

/// Top-level keys: input, weights, groups, transpose, borcea_voisin, verdicts.
Json to_json(const AnalysisReport& r);
AnalysisReport analysis_from_json(const Json& j);

Json symmetry_json(const DiagonalSymmetry& g);
Json elements_json(const SymmetryGroup& g);
Json triple_json(const NikulinTriple& t);

/// Fixed locus, Hodge numbers, lattice mirror and availability of a triple.
/// Throws MirrorUndefined / ExceptionalTriple.
Json borcea_voisin_json(const NikulinTriple& t);

}  // namespace bhcr
