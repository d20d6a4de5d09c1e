#pragma once

#include <cstddef>
#include <vector>

#include "bhcr/delsarte.hpp"

namespace bhcr {

/// Diagonal automorphism diag(exp(2 pi i v_j)) stored as its phase vector v,
/// each entry reduced into [0, 1).
class DiagonalSymmetry {
 public:
  DiagonalSymmetry() = default;
  explicit DiagonalSymmetry(RationalVector phases);

  static DiagonalSymmetry identity(std::size_t n) { return DiagonalSymmetry(RationalVector(n, Rational(0))); }

  const RationalVector& phases() const { return phases_; }
  std::size_t size() const { return phases_.size(); }
  bool is_identity() const;
  Rational phase_sum() const;

  DiagonalSymmetry operator+(const DiagonalSymmetry& other) const;
  DiagonalSymmetry operator-() const;
  DiagonalSymmetry operator-(const DiagonalSymmetry& other) const { return *this + (-other); }
  DiagonalSymmetry times(Integer k) const;

  bool operator==(const DiagonalSymmetry& other) const { return phases_ == other.phases_; }
  bool operator<(const DiagonalSymmetry& other) const { return phases_ < other.phases_; }

  std::string to_string() const;

 private:
  RationalVector phases_;
};

/// lcm of the phase denominators.
Integer element_order(const DiagonalSymmetry& g);

/// A v is integral, i.e. v lies in A^{-1} Z^n / Z^n.
bool is_symmetry_of(const DelsartePolynomial& p, const DiagonalSymmetry& g);

/// Parses "1/4,3/4,0" into a symmetry (entries reduced mod 1).
DiagonalSymmetry parse_symmetry(std::string_view text);

enum class GroupKind { Aut, SL, SLtilde };
std::string_view to_string(GroupKind kind);

/// Finite abelian group of diagonal symmetries of a potential, stored by
/// explicit enumeration. For SLtilde the elements are the lexicographically
/// least representatives of the cosets of J = <q>.
class SymmetryGroup {
 public:
  SymmetryGroup(DelsartePolynomial potential, GroupKind kind, std::vector<DiagonalSymmetry> elements,
                std::vector<DiagonalSymmetry> generators = {});

  const DelsartePolynomial& potential() const { return potential_; }
  GroupKind kind() const { return kind_; }
  const std::vector<DiagonalSymmetry>& elements() const { return elements_; }
  const std::vector<DiagonalSymmetry>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t rank() const { return potential_.size(); }
  const RationalVector& charges() const { return charges_; }
  const DiagonalSymmetry& j() const { return j_; }

  /// Reduction mod Z^n, and mod <q> as well for SLtilde.
  DiagonalSymmetry canonical(const DiagonalSymmetry& g) const;
  /// Membership of the class of g.
  bool contains(const DiagonalSymmetry& g) const;
  DiagonalSymmetry compose(const DiagonalSymmetry& a, const DiagonalSymmetry& b) const {
    return canonical(a + b);
  }
  bool is_subgroup_of(const SymmetryGroup& other) const;
  bool same_elements(const SymmetryGroup& other) const { return elements_ == other.elements_; }

 private:
  DelsartePolynomial potential_;
  GroupKind kind_;
  RationalVector charges_;
  DiagonalSymmetry j_;
  std::vector<DiagonalSymmetry> elements_;
  std::vector<DiagonalSymmetry> generators_;
};

Integer default_enumeration_cap();
void set_default_enumeration_cap(Integer cap);

/// Aut(W) = A^{-1} Z^n / Z^n, of order |det A|.
SymmetryGroup aut_group(const DelsartePolynomial& p, Integer cap = default_enumeration_cap());

/// j_W: the charges reduced mod 1. Its order is the degree.
DiagonalSymmetry j_element(const DelsartePolynomial& p);

/// Determinant-one subgroup (phase sum integral). Checks |SL| = |det A| / deg W^T.
SymmetryGroup sl_group(const DelsartePolynomial& p, Integer cap = default_enumeration_cap());

/// SL(W) / J_W. Requires the Calabi-Yau condition (so that J_W lies in SL(W)),
/// and checks |SL~| = |det A| / (deg W * deg W^T).
SymmetryGroup sl_tilde(const DelsartePolynomial& p, Integer cap = default_enumeration_cap());

/// Closure of gens inside group; throws NotAMember for a foreign generator.
SymmetryGroup subgroup_generated(const SymmetryGroup& group, const std::vector<DiagonalSymmetry>& gens);

SymmetryGroup trivial_subgroup(const SymmetryGroup& group);

/// Every subgroup of a (small) group, each listed once.
std::vector<SymmetryGroup> all_subgroups(const SymmetryGroup& group);

/// lcm of the denominators of A^{-1} 1, without requiring positive charges.
Integer potential_degree(const DelsartePolynomial& p);

}  // namespace bhcr
