#pragma once

#include <utility>
#include <vector>

#include "bhcr/duality.hpp"
#include "bhcr/twist.hpp"

namespace bhcr {

/// An element of SL~(W_E) x SL~(W_S), both parts canonical coset representatives.
struct SplitElement {
  DiagonalSymmetry curve_part;
  DiagonalSymmetry surface_part;

  bool operator==(const SplitElement&) const = default;
  bool operator<(const SplitElement& o) const {
    return curve_part < o.curve_part || (curve_part == o.curve_part && surface_part < o.surface_part);
  }
};

/// The isomorphism SL~(W_{E,S}) -> SL~(W_E) x SL~(W_S) of a twist model,
/// with the three groups enumerated once.
///
/// In phase language an element (alpha, beta) of SL(W_{E,S}) has a
/// determinant-one representative (sum alpha, sum beta integral) after adding
/// j if needed; its image is the pair of classes of (0, alpha) and (0, beta).
class ThetaMap {
 public:
  /// Throws TransposedGcdObstruction unless gcd(u0', v0') = 1 for the
  /// transposed factors: without it the two sides have different orders.
  explicit ThetaMap(TwistModel model);

  const TwistModel& model() const { return model_; }
  const SymmetryGroup& product_group() const { return product_; }
  const SymmetryGroup& curve_group() const { return curve_; }
  const SymmetryGroup& surface_group() const { return surface_; }

  SplitElement operator()(const DiagonalSymmetry& g) const;
  DiagonalSymmetry inverse(const SplitElement& se) const;

  /// Least representative (alpha, beta) of the class of g in SL~(W_{E,S})
  /// with sum alpha and sum beta both integral.
  DiagonalSymmetry split_representative(const DiagonalSymmetry& g) const;

  /// psi : SL(W_{E,S}) x {+1,-1} -> SL(W_E) x SL(W_S) on actual elements (not
  /// classes): the determinant-completion embedding, times the section s(-1) =
  /// (j_E^{u0}, id) for odd u0, else (id, j_S^{v0}), when sign is -1.
  std::pair<DiagonalSymmetry, DiagonalSymmetry> psi(const DiagonalSymmetry& v, int sign) const;

 private:
  TwistModel model_;
  SymmetryGroup product_;
  SymmetryGroup curve_;
  SymmetryGroup surface_;
  std::size_t curve_rank_;
};

SplitElement theta(const TwistModel& model, const DiagonalSymmetry& g);
DiagonalSymmetry theta_inverse(const TwistModel& model, const SplitElement& se);

/// theta^{-1}(G_E x G_S) as a subgroup of SL~(W_{E,S}).
SymmetryGroup product_group(const ThetaMap& theta, const SymmetryGroup& curve_subgroup,
                            const SymmetryGroup& surface_subgroup);
SymmetryGroup product_group(const TwistModel& model, const SymmetryGroup& curve_subgroup,
                            const SymmetryGroup& surface_subgroup);

/// Both sides of theta'(G_{E,S}^T) = G_E^T x G_S^T, computed independently.
struct SplittingCertificate {
  bool holds = false;
  SymmetryGroup product_subgroup;             // G_{E,S}
  SymmetryGroup transposed_product_subgroup;  // G_{E,S}^T
  std::vector<SplitElement> left;             // theta'(G_{E,S}^T)
  std::vector<SplitElement> right;            // G_E^T x G_S^T
};

SplittingCertificate verify_transposed_splitting(const ThetaMap& theta, const ThetaMap& theta_t,
                                                 const SymmetryGroup& curve_subgroup,
                                                 const SymmetryGroup& surface_subgroup);
SplittingCertificate verify_transposed_splitting(const TwistModel& model, const SymmetryGroup& curve_subgroup,
                                                 const SymmetryGroup& surface_subgroup);

}  // namespace bhcr
