#include "bhcr/borcea_voisin.hpp"

#include <algorithm>
#include <sstream>

#include "bhcr/error.hpp"
#include "embedded_data.hpp"

namespace bhcr {

NikulinTriple NikulinTriple::make(int r, int a, int delta) {
  if (r < 1 || r > 20) throw Error(ErrorKind::OutOfRange, "r = " + std::to_string(r) + " is outside [1, 20]");
  if (a < 0) throw Error(ErrorKind::OutOfRange, "a = " + std::to_string(a) + " is negative");
  if (delta != 0 && delta != 1) throw Error(ErrorKind::OutOfRange, "delta must be 0 or 1");
  if ((r - a) % 2 != 0) throw Error(ErrorKind::ParityViolation, "r - a must be even");
  if (a > r || r + a > 22)
    throw Error(ErrorKind::OutOfRange, "(r, a) = (" + std::to_string(r) + ", " + std::to_string(a) +
                                           ") needs a <= r and r + a <= 22");
  return NikulinTriple{r, a, delta};
}

std::string NikulinTriple::to_string() const {
  return "(" + std::to_string(r) + "," + std::to_string(a) + "," + std::to_string(delta) + ")";
}

FixedLocus fixed_locus(const NikulinTriple& t) {
  if (t == NikulinTriple{10, 8, 0} || t == NikulinTriple{10, 10, 0})
    throw Error(ErrorKind::ExceptionalTriple, t.to_string() + " has no fixed curve of the usual shape");
  if ((22 - t.r - t.a) % 2 != 0 || (t.r - t.a) % 2 != 0 || t.r < t.a || t.r + t.a > 22)
    throw Error(ErrorKind::ParityViolation, t.to_string());
  return {(22 - t.r - t.a) / 2, (t.r - t.a) / 2};
}

std::pair<int, int> triple_from_fixed_locus(int genus, int rational_curves) {
  if (genus < 0 || rational_curves < 0 || genus + rational_curves > 11)
    throw Error(ErrorKind::OutOfRange, "need g, k >= 0 and g + k <= 11");
  const int r = 11 - genus + rational_curves;
  const int a = 11 - genus - rational_curves;
  if (r < 1) throw Error(ErrorKind::OutOfRange, "rank r = " + std::to_string(r) + " < 1");
  return {r, a};
}

HodgeNumbers hodge_numbers(const NikulinTriple& t) { return {5 + 3 * t.r - 2 * t.a, 65 - 3 * t.r - 2 * t.a}; }

bool lattice_mirror_defined(const NikulinTriple& t) {
  return !(t == NikulinTriple{14, 6, 0}) && t.r + t.a <= 20 && t.r <= 19;
}

NikulinTriple lattice_mirror(const NikulinTriple& t) {
  if (!lattice_mirror_defined(t))
    throw Error(ErrorKind::MirrorUndefined, "no lattice mirror for " + t.to_string() +
                                                " (requires r + a <= 20 and (r,a,delta) != (14,6,0))");
  return NikulinTriple{20 - t.r, t.a, t.delta};
}

bool hodge_swap_check(const NikulinTriple& t) {
  const auto h = hodge_numbers(t);
  const auto hm = hodge_numbers(lattice_mirror(t));
  return h.h11 == hm.h21 && h.h21 == hm.h11;
}

TripleCatalog TripleCatalog::parse(std::string_view text) {
  TripleCatalog cat;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = line.substr(0, line.find('#'));
    std::istringstream ls(line);
    int r, a, d;
    if (!(ls >> r)) continue;
    if (!(ls >> a >> d)) throw Error(ErrorKind::ParseError, "catalog line " + std::to_string(lineno));
    CatalogEntry e{NikulinTriple::make(r, a, d)};
    std::string flag;
    while (ls >> flag) {
      if (flag == "mirror") e.mirror = true;
      else if (flag == "delsarte") e.delsarte = true;
      else if (flag == "theorem") e.theorem = true;
      else if (flag == "bad") e.bad = true;
      else throw Error(ErrorKind::ParseError, "unknown catalog flag '" + flag + "' on line " + std::to_string(lineno));
    }
    cat.entries_.push_back(e);
  }
  return cat;
}

const TripleCatalog& TripleCatalog::builtin() {
  static const TripleCatalog cat = parse(data::k3_involution_triples());
  return cat;
}

const CatalogEntry* TripleCatalog::find(const NikulinTriple& t) const {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const CatalogEntry& e) { return e.triple == t; });
  return it == entries_.end() ? nullptr : &*it;
}

std::size_t TripleCatalog::count_mirror() const {
  return std::count_if(entries_.begin(), entries_.end(), [](const auto& e) { return e.mirror; });
}
std::size_t TripleCatalog::count_delsarte() const {
  return std::count_if(entries_.begin(), entries_.end(), [](const auto& e) { return e.mirror && e.delsarte; });
}
std::size_t TripleCatalog::count_theorem() const {
  return std::count_if(entries_.begin(), entries_.end(), [](const auto& e) { return e.mirror && e.theorem; });
}

std::string_view to_string(Availability a) {
  switch (a) {
    case Availability::Available: return "Available";
    case Availability::NotAvailable: return "NotAvailable";
    case Availability::Unknown: return "Unknown";
  }
  return "?";
}

Availability bhcr_model_available(const NikulinTriple& t, const TripleCatalog& catalog) {
  lattice_mirror(t);
  const auto* e = catalog.find(t);
  if (e && e->bad) return Availability::NotAvailable;
  if (e && e->delsarte) return Availability::Available;
  return Availability::Unknown;
}

}  // namespace bhcr
