#pragma once

#include "bhcr/weights.hpp"

namespace bhcr {

/// Integers attached to the twist map of x0^l + f in P(u0, u) and y0^l + g in
/// P(v0, v):  s0 u0 + 1 = s v0  and  t0 v0 + 1 = t u0  with 0 <= s0 < v0,
/// 0 <= t0 < u0.
struct TwistParameters {
  Integer ell = 2;
  Integer u0 = 1;
  Integer v0 = 1;
  Integer s0 = 0;
  Integer t0 = 0;
  Integer s = 1;
  Integer t = 1;

  bool operator==(const TwistParameters&) const = default;
};

/// Throws NotCoprime unless gcd(u0, v0) = 1, OutOfRange for ell < 2 or
/// non-positive weights.
TwistParameters twist_parameters(Integer ell, Integer u0, Integer v0);

/// Which of the two elliptic weight shapes the curve has.
enum class CurveShape { Quartic /* P(2,1,1) */, Sextic /* P(3,2,1) */, Other };
std::string_view to_string(CurveShape shape);

/// Hypersurface f - g = 0 in P(v0 u, u0 v) obtained from an elliptic curve
/// x0^2 + f = 0 and a K3 surface y0^2 + g = 0 by the twist map.
struct TwistModel {
  DelsartePolynomial curve_potential;
  DelsartePolynomial surface_potential;
  DelsartePolynomial product_potential;
  WeightSystem curve_weights;
  WeightSystem surface_weights;
  WeightSystem weights;
  TwistParameters parameters;
  CurveShape shape = CurveShape::Other;
};

/// Drops the first row and column.
IntMatrix drop_first(const IntMatrix& m);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

/// Throws FirstMonomialNotPureSquare, NotCalabiYauFactor, WeightObstruction
/// (gcd(u0, v0) > 1, e.g. 6 | v0), DimensionMismatch for factors that are not
/// a curve in 3 and a surface in 4 variables.
TwistModel build_twist_model(const DelsartePolynomial& curve, const DelsartePolynomial& surface);

/// Weights (v0' u', u0' v') and degree 2 u0' v0' of the transposed product,
/// primes denoting the transposed factors. Throws TransposedGcdObstruction
/// unless gcd(u0', v0') = 1; throws VerificationFailed if they disagree with
/// the weights computed directly from the transposed product.
WeightSystem transposed_twist_weights(const TwistModel& model);

/// The twist model of the transposed factors, whose product potential is the
/// transpose of model.product_potential.
TwistModel transposed_model(const TwistModel& model);

}  // namespace bhcr
