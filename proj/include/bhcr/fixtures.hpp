#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bhcr/borcea_voisin.hpp"
#include "bhcr/delsarte.hpp"

namespace bhcr {

/// One elliptic curve of the shipped table with its expected data.
struct EllipticTableRow {
  int index = 0;
  int mirror_index = 0;
  std::vector<Integer> weights;
  DelsartePolynomial potential;
  Integer sl_order = 0;
  Integer sl_tilde_order = 0;
  std::string text;
};

std::vector<EllipticTableRow> parse_elliptic_table(std::string_view text);
const std::vector<EllipticTableRow>& elliptic_table();
const EllipticTableRow& elliptic_row(int index);

/// Curve, surface and surface triple of the worked Borcea-Voisin example.
struct WorkedExample {
  std::string curve_text;
  std::string surface_text;
  DelsartePolynomial curve;
  DelsartePolynomial surface;
  NikulinTriple triple;
};

const WorkedExample& worked_example();

/// Result of recomputing one table row.
struct RowCheck {
  int index = 0;
  std::vector<Integer> weights;
  Integer degree = 0;
  Integer sl_order = 0;
  Integer sl_tilde_order = 0;
  std::string transpose_text;
  std::optional<PermutationPair> mirror_permutation;
  bool weights_ok = false;
  bool sl_ok = false;
  bool sl_tilde_ok = false;
  bool mirror_ok = false;

  bool ok() const { return weights_ok && sl_ok && sl_tilde_ok && mirror_ok; }
  /// Name of the first failing field, empty when the row passes.
  std::string failing_field() const;
};

std::vector<RowCheck> verify_elliptic_table(const std::vector<EllipticTableRow>& rows = elliptic_table());

}  // namespace bhcr
