#include "bhcr/duality.hpp"

#include <algorithm>

#include "bhcr/error.hpp"

namespace bhcr {

PairingValue pairing(const DelsartePolynomial& w, const DiagonalSymmetry& u, const DiagonalSymmetry& v) {
  if (u.size() != w.size() || v.size() != w.size())
    throw Error(ErrorKind::DimensionMismatch, "pairing needs two vectors of length " + std::to_string(w.size()));
  return PairingValue{mod_one(bilinear(u.phases(), w.exponents(), v.phases()))};
}

SymmetryGroup transposed_group(const SymmetryGroup& g) {
  if (g.kind() != GroupKind::SLtilde)
    throw Error(ErrorKind::NotASubgroup, "transposed groups are defined for subgroups of SL~(W)");
  const auto& w = g.potential();
  auto dual = sl_tilde(transpose(w));
  std::vector<DiagonalSymmetry> kept;
  for (const auto& u : dual.elements()) {
    bool orthogonal = std::all_of(g.elements().begin(), g.elements().end(),
                                  [&](const DiagonalSymmetry& v) { return pairing(w, u, v).value == Rational(0); });
    if (orthogonal) kept.push_back(u);
  }
  return SymmetryGroup(dual.potential(), GroupKind::SLtilde, std::move(kept));
}

}  // namespace bhcr
