#pragma once

#include "bhcr/symmetry.hpp"

namespace bhcr {

/// Value of the pairing in Q/Z, reduced into [0, 1).
struct PairingValue {
  Rational value;
  bool operator==(const PairingValue&) const = default;
};

/// u^T A v mod 1 for u in SL~(W^T) and v in SL~(W), A the exponent matrix of W.
PairingValue pairing(const DelsartePolynomial& w, const DiagonalSymmetry& u, const DiagonalSymmetry& v);

/// Orthogonal complement of g (a subgroup of SL~(W)) inside SL~(W^T).
SymmetryGroup transposed_group(const SymmetryGroup& g);

}  // namespace bhcr
