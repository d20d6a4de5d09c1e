#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bhcr/rational.hpp"

namespace bhcr {

/// Invariants (r, a, delta) of the 2-elementary lattice fixed by a
/// non-symplectic involution of a K3 surface.
struct NikulinTriple {
  int r = 1;
  int a = 0;
  int delta = 0;

  /// Throws OutOfRange or ParityViolation.
  static NikulinTriple make(int r, int a, int delta);

  bool operator==(const NikulinTriple&) const = default;
  auto operator<=>(const NikulinTriple&) const = default;

  std::string to_string() const;
};

/// Genus of the fixed curve and number of fixed rational curves.
struct FixedLocus {
  int genus = 0;
  int rational_curves = 0;
  bool operator==(const FixedLocus&) const = default;
};

struct HodgeNumbers {
  int h11 = 0;
  int h21 = 0;
  bool operator==(const HodgeNumbers&) const = default;
};

/// 2g = 22 - r - a, 2k = r - a. Throws ExceptionalTriple for (10,8,0) and (10,10,0).
FixedLocus fixed_locus(const NikulinTriple& t);

/// Inverse of fixed_locus on (r, a): r = 11 - g + k, a = 11 - g - k.
/// Throws OutOfRange unless 1 <= r.
std::pair<int, int> triple_from_fixed_locus(int genus, int rational_curves);

/// Borcea-Voisin threefold: h11 = 5 + 3r - 2a, h21 = 65 - 3r - 2a.
HodgeNumbers hodge_numbers(const NikulinTriple& t);

bool lattice_mirror_defined(const NikulinTriple& t);

/// (20 - r, a, delta); throws MirrorUndefined for (14,6,0) or r + a > 20.
NikulinTriple lattice_mirror(const NikulinTriple& t);

/// h11(t) = h21(t') and h21(t) = h11(t') for the lattice mirror t'.
bool hodge_swap_check(const NikulinTriple& t);

struct CatalogEntry {
  NikulinTriple triple;
  bool mirror = false;    // lattice mirror defined
  bool delsarte = false;  // family contains a Delsarte-type model
  bool theorem = false;   // Borcea model with twist construction available
  bool bad = false;       // Delsarte models only with 6 | v0
};

/// Triples of K3 involutions, parsed from "r a delta flag..." records.
class TripleCatalog {
 public:
  static TripleCatalog parse(std::string_view text);
  /// The catalog shipped with the library.
  static const TripleCatalog& builtin();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find(const NikulinTriple& t) const;

  std::size_t count_mirror() const;
  std::size_t count_delsarte() const;
  std::size_t count_theorem() const;

 private:
  std::vector<CatalogEntry> entries_;
};

enum class Availability { Available, NotAvailable, Unknown };
std::string_view to_string(Availability a);

/// Whether a projective Delsarte model of the Borcea-Voisin family exists to
/// which the transposition rule applies. Throws MirrorUndefined when the
/// lattice mirror is undefined.
Availability bhcr_model_available(const NikulinTriple& t, const TripleCatalog& catalog = TripleCatalog::builtin());

}  // namespace bhcr
