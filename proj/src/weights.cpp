#include "bhcr/weights.hpp"

#include <numeric>

#include "bhcr/error.hpp"

namespace bhcr {

WeightSystem weight_system(const DelsartePolynomial& p) {
  const std::size_t n = p.size();
  WeightSystem ws;
  ws.charges = solve(p.exponents(), RationalVector(n, Rational(1)));
  for (std::size_t i = 0; i < n; ++i) {
    if (ws.charges[i] <= 0)
      throw Error(ErrorKind::NonPositiveCharge,
                  "charge of " + p.var_names()[i] + " is " + to_string(ws.charges[i]) + " in " + p.to_string());
  }
  ws.degree = lcm_of_denominators(ws.charges);
  for (const auto& q : ws.charges) ws.weights.push_back((q * ws.degree).numerator());
  return ws;
}

WeightSystem weight_system_from(std::vector<Integer> weights, Integer degree) {
  WeightSystem ws;
  ws.weights = std::move(weights);
  ws.degree = degree;
  for (Integer w : ws.weights) ws.charges.emplace_back(w, degree);
  return ws;
}

bool is_normalized(const WeightSystem& ws) {
  const auto& w = ws.weights;
  if (w.size() < 2) return true;
  for (std::size_t skip = 0; skip < w.size(); ++skip) {
    Integer g = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (i != skip) g = std::gcd(g, w[i]);
    if (g != 1) return false;
  }
  return true;
}

bool is_calabi_yau(const WeightSystem& ws) {
  return std::accumulate(ws.weights.begin(), ws.weights.end(), Integer{0}) == ws.degree;
}

std::vector<Integer> degrees_of_monomials(const DelsartePolynomial& p, const WeightSystem& ws) {
  if (ws.weights.size() != p.size()) throw Error(ErrorKind::DimensionMismatch, "weights do not match the potential");
  std::vector<Integer> out(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) out[i] += p.exponents()(i, j) * ws.weights[j];
  return out;
}

}  // namespace bhcr
