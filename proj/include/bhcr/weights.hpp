#pragma once

#include <vector>

#include "bhcr/delsarte.hpp"

namespace bhcr {

/// Charges q = A^{-1} 1, integral weights w = d q with d minimal, degree d.
struct WeightSystem {
  RationalVector charges;
  std::vector<Integer> weights;
  Integer degree = 0;

  bool operator==(const WeightSystem&) const = default;
};

/// Throws NonPositiveCharge when some charge is <= 0.
WeightSystem weight_system(const DelsartePolynomial& p);

/// Builds the weight system of integer weights of the given degree, reducing
/// nothing: charges are weights / degree.
WeightSystem weight_system_from(std::vector<Integer> weights, Integer degree);

/// gcd of the weights with any one of them left out is 1, for every choice.
bool is_normalized(const WeightSystem& ws);

/// sum of weights equals the degree.
bool is_calabi_yau(const WeightSystem& ws);

/// Weighted degree of each monomial; all equal ws.degree when ws belongs to p.
std::vector<Integer> degrees_of_monomials(const DelsartePolynomial& p, const WeightSystem& ws);

}  // namespace bhcr
