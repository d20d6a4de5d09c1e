#include "bhcr/twist.hpp"

#include <numeric>
#include <set>

#include "bhcr/error.hpp"

namespace bhcr {

TwistParameters twist_parameters(Integer ell, Integer u0, Integer v0) {
  if (ell < 2) throw Error(ErrorKind::OutOfRange, "twist exponent must be at least 2");
  if (u0 < 1 || v0 < 1) throw Error(ErrorKind::OutOfRange, "first weights must be positive");
  if (std::gcd(u0, v0) != 1)
    throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(u0) + ", " + std::to_string(v0) + ") != 1");
  TwistParameters p;
  p.ell = ell;
  p.u0 = u0;
  p.v0 = v0;
  while ((p.s0 * u0 + 1) % v0 != 0) ++p.s0;
  while ((p.t0 * v0 + 1) % u0 != 0) ++p.t0;
  p.s = (p.s0 * u0 + 1) / v0;
  p.t = (p.t0 * v0 + 1) / u0;
  return p;
}

std::string_view to_string(CurveShape shape) {
  switch (shape) {
    case CurveShape::Quartic: return "P(2,1,1)";
    case CurveShape::Sextic: return "P(3,2,1)";
    case CurveShape::Other: return "other";
  }
  return "?";
}

IntMatrix drop_first(const IntMatrix& m) {
  IntMatrix out(m.rows() - 1, m.cols() - 1);
  for (std::size_t i = 1; i < m.rows(); ++i)
    for (std::size_t j = 1; j < m.cols(); ++j) out(i - 1, j - 1) = m(i, j);
  return out;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

namespace {

void require_square_head(const DelsartePolynomial& p, std::string_view what) {
  const auto& a = p.exponents();
  bool ok = a(0, 0) == 2;
  for (std::size_t k = 1; k < p.size(); ++k) ok = ok && a(0, k) == 0 && a(k, 0) == 0;
  if (!ok)
    throw Error(ErrorKind::FirstMonomialNotPureSquare,
                std::string(what) + " " + p.to_string() + " is not of the form " + p.var_names()[0] +
                    "^2 + (terms without " + p.var_names()[0] + ")");
}

WeightSystem calabi_yau_weights(const DelsartePolynomial& p, std::string_view what) {
  WeightSystem ws;
  try {
    ws = weight_system(p);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonPositiveCharge) throw Error(ErrorKind::NotCalabiYauFactor, e.what());
    throw;
  }
  if (!is_calabi_yau(ws))
    throw Error(ErrorKind::NotCalabiYauFactor, std::string(what) + " " + p.to_string() + " violates sum w = d");
  return ws;
}

std::string weights_string(const std::vector<Integer>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

CurveShape shape_of(const std::vector<Integer>& u) {
  if (u == std::vector<Integer>{2, 1, 1}) return CurveShape::Quartic;
  if (u == std::vector<Integer>{3, 2, 1} || u == std::vector<Integer>{3, 1, 2}) return CurveShape::Sextic;
  return CurveShape::Other;
}

// Product weights predicted by the twist: (v0 * u_i, u0 * v_j), degree 2 u0 v0.
WeightSystem twisted_weights(const WeightSystem& first, const WeightSystem& second) {
  const Integer a0 = first.weights[0];
  const Integer b0 = second.weights[0];
  std::vector<Integer> w;
  for (std::size_t i = 1; i < first.weights.size(); ++i) w.push_back(b0 * first.weights[i]);
  for (std::size_t j = 1; j < second.weights.size(); ++j) w.push_back(a0 * second.weights[j]);
  return weight_system_from(std::move(w), 2 * a0 * b0);
}

}  // namespace

TwistModel build_twist_model(const DelsartePolynomial& curve, const DelsartePolynomial& surface) {
  if (curve.size() != 3)
    throw Error(ErrorKind::DimensionMismatch, "the curve potential must have 3 variables, got " + std::to_string(curve.size()));
  if (surface.size() != 4)
    throw Error(ErrorKind::DimensionMismatch, "the surface potential must have 4 variables, got " + std::to_string(surface.size()));
  require_square_head(curve, "curve");
  require_square_head(surface, "surface");

  TwistModel m{curve, surface, curve, {}, {}, {}, {}, CurveShape::Other};
  m.curve_weights = calabi_yau_weights(curve, "curve");
  m.surface_weights = calabi_yau_weights(surface, "surface");
  const Integer u0 = m.curve_weights.weights[0];
  const Integer v0 = m.surface_weights.weights[0];
  if (std::gcd(u0, v0) != 1) {
    std::string why = "gcd(u0, v0) = gcd(" + std::to_string(u0) + ", " + std::to_string(v0) + ") != 1";
    if (v0 % 6 == 0) why += "; v0 is divisible by 6, so the twist map gives no projective model";
    throw Error(ErrorKind::WeightObstruction, why);
  }
  m.parameters = twist_parameters(2, u0, v0);
  m.shape = shape_of(m.curve_weights.weights);

  std::vector<std::string> names;
  std::set<std::string> taken;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    names.push_back(curve.var_names()[i]);
    taken.insert(names.back());
  }
  for (std::size_t i = 1; i < surface.size(); ++i) {
    std::string v = surface.var_names()[i];
    while (taken.count(v)) v += "_s";
    names.push_back(v);
    taken.insert(v);
  }
  std::vector<Integer> coeffs;
  for (std::size_t i = 1; i < curve.size(); ++i) coeffs.push_back(curve.coefficients()[i]);
  for (std::size_t i = 1; i < surface.size(); ++i) coeffs.push_back(-surface.coefficients()[i]);

  m.product_potential = DelsartePolynomial(block_diagonal(drop_first(curve.exponents()), drop_first(surface.exponents())),
                                           std::move(names), std::move(coeffs));
  m.weights = weight_system(m.product_potential);

  const auto predicted = twisted_weights(m.curve_weights, m.surface_weights);
  if (predicted != m.weights)
    throw Error(ErrorKind::VerificationFailed, "product weights " + weights_string(m.weights.weights) +
                                                   " differ from the twisted weights " + weights_string(predicted.weights));
  if (!is_calabi_yau(m.weights))
    throw Error(ErrorKind::VerificationFailed, "the product potential violates sum w = d");
  return m;
}

WeightSystem transposed_twist_weights(const TwistModel& model) {
  const auto curve_t = weight_system(transpose(model.curve_potential));
  const auto surface_t = weight_system(transpose(model.surface_potential));
  const Integer u0 = curve_t.weights[0];
  const Integer v0 = surface_t.weights[0];
  if (std::gcd(u0, v0) != 1)
    throw Error(ErrorKind::TransposedGcdObstruction,
                "transposed first weights u0' = " + std::to_string(u0) + ", v0' = " + std::to_string(v0) + " are not coprime");
  auto predicted = twisted_weights(curve_t, surface_t);
  auto direct = weight_system(transpose(model.product_potential));
  if (direct != predicted)
    throw Error(ErrorKind::VerificationFailed, "weights of the transposed product " + weights_string(direct.weights) +
                                                   " differ from " + weights_string(predicted.weights));
  return predicted;
}

TwistModel transposed_model(const TwistModel& model) {
  transposed_twist_weights(model);
  TwistModel t = build_twist_model(transpose(model.curve_potential), transpose(model.surface_potential));
  if (t.product_potential.exponents() != model.product_potential.exponents().transposed())
    throw Error(ErrorKind::VerificationFailed, "transposing the factors does not transpose the product");
  return t;
}

}  // namespace bhcr
