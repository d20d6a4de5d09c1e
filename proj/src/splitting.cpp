#include "bhcr/splitting.hpp"

#include <algorithm>
#include <optional>

#include "bhcr/error.hpp"

namespace bhcr {

namespace {

DiagonalSymmetry with_leading_zero(const RationalVector& tail) {
  RationalVector v{Rational(0)};
  v.insert(v.end(), tail.begin(), tail.end());
  return DiagonalSymmetry(std::move(v));
}

RationalVector sub(const RationalVector& v, std::size_t from, std::size_t to) {
  return {v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to)};
}

Rational sum(const RationalVector& v) {
  Rational s(0);
  for (const auto& x : v) s += x;
  return s;
}

// Lift of a factor class whose first phase is 0, obtained by adding j once if
// the first phase is 1/2.
DiagonalSymmetry first_phase_zero(const SymmetryGroup& g, const DiagonalSymmetry& x) {
  DiagonalSymmetry y = x;
  if (y.phases()[0] != Rational(0)) y = y + g.j();
  if (y.phases()[0] != Rational(0))
    throw Error(ErrorKind::NotInImage, x.to_string() + " has no lift with first phase 0");
  return y;
}

// The isomorphism needs deg W_{E,S}^T = 2 u0' v0', i.e. gcd(u0', v0') = 1.
TwistModel require_transposed_gcd(TwistModel model) {
  transposed_twist_weights(model);
  return model;
}

}  // namespace

ThetaMap::ThetaMap(TwistModel model)
    : model_(require_transposed_gcd(std::move(model))),
      product_(sl_tilde(model_.product_potential)),
      curve_(sl_tilde(model_.curve_potential)),
      surface_(sl_tilde(model_.surface_potential)),
      curve_rank_(model_.curve_potential.size() - 1) {
  if (product_.order() != curve_.order() * surface_.order())
    throw Error(ErrorKind::OrderFormulaMismatch,
                "|SL~(W_ES)| = " + std::to_string(product_.order()) + " but |SL~(W_E)| |SL~(W_S)| = " +
                    std::to_string(curve_.order()) + " * " + std::to_string(surface_.order()));
}

SplitElement ThetaMap::operator()(const DiagonalSymmetry& g) const {
  if (!product_.contains(g))
    throw Error(ErrorKind::NotAMember, g.to_string() + " is not in SL~(" + model_.product_potential.to_string() + ")");
  const std::size_t n = g.size();
  DiagonalSymmetry rep = g;
  if (!is_integral(sum(sub(rep.phases(), 0, curve_rank_)))) rep = rep + product_.j();
  if (!is_integral(sum(sub(rep.phases(), 0, curve_rank_))) || !is_integral(sum(sub(rep.phases(), curve_rank_, n))))
    throw Error(ErrorKind::NoDeterminantOneRepresentative, "class of " + g.to_string());
  auto alpha = with_leading_zero(sub(rep.phases(), 0, curve_rank_));
  auto beta = with_leading_zero(sub(rep.phases(), curve_rank_, n));
  if (!curve_.contains(alpha) || !surface_.contains(beta))
    throw Error(ErrorKind::NoDeterminantOneRepresentative, "image of " + g.to_string() + " leaves SL~ of a factor");
  return {curve_.canonical(alpha), surface_.canonical(beta)};
}

DiagonalSymmetry ThetaMap::inverse(const SplitElement& se) const {
  if (!curve_.contains(se.curve_part))
    throw Error(ErrorKind::NotAMember, se.curve_part.to_string() + " is not in SL~(W_E)");
  if (!surface_.contains(se.surface_part))
    throw Error(ErrorKind::NotAMember, se.surface_part.to_string() + " is not in SL~(W_S)");
  auto gamma = first_phase_zero(curve_, se.curve_part);
  auto delta = first_phase_zero(surface_, se.surface_part);
  RationalVector v = sub(gamma.phases(), 1, gamma.size());
  auto tail = sub(delta.phases(), 1, delta.size());
  v.insert(v.end(), tail.begin(), tail.end());
  DiagonalSymmetry g(std::move(v));
  if (!product_.contains(g))
    throw Error(ErrorKind::NotInImage, g.to_string() + " is not in SL~(W_ES)");
  return product_.canonical(g);
}

DiagonalSymmetry ThetaMap::split_representative(const DiagonalSymmetry& g) const {
  if (!product_.contains(g))
    throw Error(ErrorKind::NotAMember, g.to_string() + " is not in SL~(" + model_.product_potential.to_string() + ")");
  std::optional<DiagonalSymmetry> best;
  DiagonalSymmetry cur = g;
  const Integer d = element_order(product_.j());
  for (Integer k = 0; k < d; ++k, cur = cur + product_.j()) {
    if (!is_integral(sum(sub(cur.phases(), 0, curve_rank_)))) continue;
    if (!best || cur < *best) best = cur;
  }
  if (!best) throw Error(ErrorKind::NoDeterminantOneRepresentative, "class of " + g.to_string());
  return *best;
}

std::pair<DiagonalSymmetry, DiagonalSymmetry> ThetaMap::psi(const DiagonalSymmetry& v, int sign) const {
  const std::size_t n = v.size();
  if (n != product_.rank()) throw Error(ErrorKind::DimensionMismatch, "psi expects an element of SL(W_ES)");
  if (!is_symmetry_of(model_.product_potential, v) || !is_integral(v.phase_sum()))
    throw Error(ErrorKind::NotAMember, v.to_string() + " is not in SL(W_ES)");
  auto alpha = sub(v.phases(), 0, curve_rank_);
  auto beta = sub(v.phases(), curve_rank_, n);
  RationalVector a{mod_one(-sum(alpha))};
  a.insert(a.end(), alpha.begin(), alpha.end());
  RationalVector b{mod_one(-sum(beta))};
  b.insert(b.end(), beta.begin(), beta.end());
  if (a[0] != b[0] || (a[0] != Rational(0) && a[0] != Rational(1, 2)))
    throw Error(ErrorKind::NoDeterminantOneRepresentative, v.to_string() + " is not in SL^{+-1}(W_ES)");
  DiagonalSymmetry x(std::move(a));
  DiagonalSymmetry y(std::move(b));
  if (sign < 0) {
    const Integer u0 = model_.parameters.u0;
    const Integer v0 = model_.parameters.v0;
    if (u0 % 2 == 1)
      x = x + curve_.j().times(u0);
    else
      y = y + surface_.j().times(v0);
  }
  return {x, y};
}

SplitElement theta(const TwistModel& model, const DiagonalSymmetry& g) { return ThetaMap(model)(g); }

DiagonalSymmetry theta_inverse(const TwistModel& model, const SplitElement& se) { return ThetaMap(model).inverse(se); }

SymmetryGroup product_group(const ThetaMap& theta, const SymmetryGroup& curve_subgroup,
                            const SymmetryGroup& surface_subgroup) {
  if (!curve_subgroup.is_subgroup_of(theta.curve_group()))
    throw Error(ErrorKind::NotASubgroup, "G_E is not a subgroup of SL~(W_E)");
  if (!surface_subgroup.is_subgroup_of(theta.surface_group()))
    throw Error(ErrorKind::NotASubgroup, "G_S is not a subgroup of SL~(W_S)");
  std::vector<DiagonalSymmetry> els;
  for (const auto& a : curve_subgroup.elements())
    for (const auto& b : surface_subgroup.elements()) els.push_back(theta.inverse({a, b}));
  std::vector<DiagonalSymmetry> gens;
  const auto& id_e = curve_subgroup.elements().front();
  const auto& id_s = surface_subgroup.elements().front();
  for (const auto& a : curve_subgroup.generators()) gens.push_back(theta.inverse({a, id_s}));
  for (const auto& b : surface_subgroup.generators()) gens.push_back(theta.inverse({id_e, b}));
  SymmetryGroup g(theta.product_group().potential(), GroupKind::SLtilde, std::move(els), std::move(gens));
  if (g.order() != curve_subgroup.order() * surface_subgroup.order())
    throw Error(ErrorKind::NotInImage, "theta^{-1}(G_E x G_S) has the wrong order");
  return g;
}

SymmetryGroup product_group(const TwistModel& model, const SymmetryGroup& curve_subgroup,
                            const SymmetryGroup& surface_subgroup) {
  return product_group(ThetaMap(model), curve_subgroup, surface_subgroup);
}

SplittingCertificate verify_transposed_splitting(const ThetaMap& theta, const ThetaMap& theta_t,
                                                 const SymmetryGroup& curve_subgroup,
                                                 const SymmetryGroup& surface_subgroup) {
  auto g = product_group(theta, curve_subgroup, surface_subgroup);
  auto gt = transposed_group(g);
  SplittingCertificate cert{false, g, gt, {}, {}};
  for (const auto& u : gt.elements()) cert.left.push_back(theta_t(u));
  std::sort(cert.left.begin(), cert.left.end());

  auto curve_t = transposed_group(curve_subgroup);
  auto surface_t = transposed_group(surface_subgroup);
  for (const auto& a : curve_t.elements())
    for (const auto& b : surface_t.elements()) cert.right.push_back({a, b});
  std::sort(cert.right.begin(), cert.right.end());
  cert.holds = cert.left == cert.right;
  return cert;
}

SplittingCertificate verify_transposed_splitting(const TwistModel& model, const SymmetryGroup& curve_subgroup,
                                                 const SymmetryGroup& surface_subgroup) {
  ThetaMap theta(model);
  ThetaMap theta_t(transposed_model(model));
  return verify_transposed_splitting(theta, theta_t, curve_subgroup, surface_subgroup);
}

}  // namespace bhcr
