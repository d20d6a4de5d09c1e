#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bhcr/matrix.hpp"

namespace bhcr {

/// A potential with as many monomials as variables, W = sum_i prod_j x_j^{a_ij}.
///
/// Row i of the exponent matrix is the exponent vector of monomial i, in input
/// order. Coefficients are kept only as annotations: every computation uses the
/// exponent matrix alone, as if all coefficients were rescaled to one.
class DelsartePolynomial {
 public:
  /// Validates squareness, invertibility, non-negativity, no repeated monomial,
  /// no constant monomial and no unused variable. Coefficients default to 1.
  DelsartePolynomial(IntMatrix exponents, std::vector<std::string> var_names,
                     std::vector<Integer> coefficients = {});

  std::size_t size() const { return exponents_.rows(); }
  const IntMatrix& exponents() const { return exponents_; }
  const std::vector<std::string>& var_names() const { return var_names_; }
  const std::vector<Integer>& coefficients() const { return coefficients_; }
  Integer determinant() const { return det_; }

  /// Monomials in input order, e.g. "x0^2*x1".
  std::string to_string() const;
  /// Same, with monomials sorted by exponent row; stable across equivalent inputs.
  std::string canonical_string() const;

  bool operator==(const DelsartePolynomial&) const = default;

 private:
  IntMatrix exponents_;
  std::vector<std::string> var_names_;
  std::vector<Integer> coefficients_;
  Integer det_ = 0;
};

/// Parses a sum of monomials such as "x0^2*x1 + x1^2*x2 + x2^3" or
/// "x1^4+x2^4-y1^5y2". Coefficients other than 1 are recorded and reported
/// through `warnings`. Without `declared_vars` the variables are ordered by
/// name, with trailing digits compared numerically (x2 before x10).
DelsartePolynomial parse_delsarte(std::string_view text,
                                  std::vector<std::string>* warnings = nullptr,
                                  const std::vector<std::string>* declared_vars = nullptr);

/// Potential of the transposed exponent matrix. Monomial i of the result is
/// the one "dual" to variable i of the input.
DelsartePolynomial transpose(const DelsartePolynomial& p);

/// Permutations carrying p onto q: q.exponents(i, j) == p.exponents(rows[i], cols[j]).
struct PermutationPair {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

std::optional<PermutationPair> equivalent_up_to_permutation(const DelsartePolynomial& p,
                                                            const DelsartePolynomial& q);

// Atomic types of invertible potentials. Variables are listed in block order:
// a chain x_{v0}^{a0} x_{v1} + ... + x_{vk}^{ak}, a loop closes back onto v0.
enum class AtomKind { Fermat, Chain, Loop };

struct Atom {
  AtomKind kind;
  std::vector<std::size_t> variables;
  std::vector<Integer> exponents;
  std::vector<std::size_t> monomials;
};

struct AtomicDecomposition {
  bool determined = false;
  std::vector<Atom> blocks;

  std::string to_string() const;
};

/// Splits the variables into Fermat, chain and loop blocks, or reports
/// Undetermined when the exponent matrix has no such shape.
AtomicDecomposition atomic_decomposition(const DelsartePolynomial& p);

std::string_view to_string(AtomKind kind);

}  // namespace bhcr
