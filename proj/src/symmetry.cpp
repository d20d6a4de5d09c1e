#include "bhcr/symmetry.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <set>

#include "bhcr/error.hpp"

namespace bhcr {

DiagonalSymmetry::DiagonalSymmetry(RationalVector phases) : phases_(std::move(phases)) {
  for (auto& p : phases_) p = mod_one(p);
}

bool DiagonalSymmetry::is_identity() const {
  return std::all_of(phases_.begin(), phases_.end(), [](const Rational& r) { return r == Rational(0); });
}

Rational DiagonalSymmetry::phase_sum() const {
  return std::accumulate(phases_.begin(), phases_.end(), Rational(0));
}

DiagonalSymmetry DiagonalSymmetry::operator+(const DiagonalSymmetry& other) const {
  if (size() != other.size()) throw Error(ErrorKind::DimensionMismatch, "adding symmetries of different sizes");
  RationalVector v(size());
  for (std::size_t i = 0; i < size(); ++i) v[i] = phases_[i] + other.phases_[i];
  return DiagonalSymmetry(std::move(v));
}

DiagonalSymmetry DiagonalSymmetry::operator-() const {
  RationalVector v(size());
  for (std::size_t i = 0; i < size(); ++i) v[i] = -phases_[i];
  return DiagonalSymmetry(std::move(v));
}

DiagonalSymmetry DiagonalSymmetry::times(Integer k) const {
  RationalVector v(size());
  for (std::size_t i = 0; i < size(); ++i) v[i] = phases_[i] * k;
  return DiagonalSymmetry(std::move(v));
}

std::string DiagonalSymmetry::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < size(); ++i) s += (i ? "," : "") + bhcr::to_string(phases_[i]);
  return s + ")";
}

Integer element_order(const DiagonalSymmetry& g) { return lcm_of_denominators(g.phases()); }

bool is_symmetry_of(const DelsartePolynomial& p, const DiagonalSymmetry& g) {
  if (g.size() != p.size()) return false;
  auto av = multiply(p.exponents(), g.phases());
  return std::all_of(av.begin(), av.end(), [](const Rational& r) { return is_integral(r); });
}

DiagonalSymmetry parse_symmetry(std::string_view text) {
  RationalVector v;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    v.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return DiagonalSymmetry(std::move(v));
}

std::string_view to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::Aut: return "Aut";
    case GroupKind::SL: return "SL";
    case GroupKind::SLtilde: return "SLtilde";
  }
  return "?";
}

namespace {

std::atomic<Integer> g_enumeration_cap{1'000'000};

RationalVector raw_charges(const DelsartePolynomial& p) {
  return solve(p.exponents(), RationalVector(p.size(), Rational(1)));
}

// Breadth-first closure of gens under addition, canonicalized by `canon`.
template <class Canon>
std::vector<DiagonalSymmetry> closure(std::size_t n, const std::vector<DiagonalSymmetry>& gens, Canon canon,
                                      Integer cap) {
  std::set<DiagonalSymmetry> seen{canon(DiagonalSymmetry::identity(n))};
  std::vector<DiagonalSymmetry> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<DiagonalSymmetry> next;
    for (const auto& e : frontier) {
      for (const auto& g : gens) {
        auto s = canon(e + g);
        if (seen.insert(s).second) {
          if (static_cast<Integer>(seen.size()) > cap)
            throw Error(ErrorKind::EnumerationCapExceeded,
                        "group has more than " + std::to_string(cap) + " elements");
          next.push_back(std::move(s));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Integer abs_det(const DelsartePolynomial& p) { return p.determinant() < 0 ? -p.determinant() : p.determinant(); }

}  // namespace

Integer default_enumeration_cap() { return g_enumeration_cap.load(); }
void set_default_enumeration_cap(Integer cap) { g_enumeration_cap.store(cap); }

Integer potential_degree(const DelsartePolynomial& p) { return lcm_of_denominators(raw_charges(p)); }

SymmetryGroup::SymmetryGroup(DelsartePolynomial potential, GroupKind kind, std::vector<DiagonalSymmetry> elements,
                             std::vector<DiagonalSymmetry> generators)
    : potential_(std::move(potential)),
      kind_(kind),
      charges_(raw_charges(potential_)),
      j_(charges_),
      generators_(std::move(generators)) {
  std::set<DiagonalSymmetry> s;
  for (const auto& e : elements) s.insert(canonical(e));
  elements_.assign(s.begin(), s.end());
  for (auto& g : generators_) g = canonical(g);
}

DiagonalSymmetry SymmetryGroup::canonical(const DiagonalSymmetry& g) const {
  if (g.size() != rank()) throw Error(ErrorKind::DimensionMismatch, "symmetry " + g.to_string() + " has wrong size");
  if (kind_ != GroupKind::SLtilde) return g;
  DiagonalSymmetry best = g;
  DiagonalSymmetry cur = g;
  const Integer d = element_order(j_);
  for (Integer k = 1; k < d; ++k) {
    cur = cur + j_;
    if (cur < best) best = cur;
  }
  return best;
}

bool SymmetryGroup::contains(const DiagonalSymmetry& g) const {
  if (g.size() != rank()) return false;
  return std::binary_search(elements_.begin(), elements_.end(), canonical(g));
}

bool SymmetryGroup::is_subgroup_of(const SymmetryGroup& other) const {
  if (potential_.exponents() != other.potential_.exponents() || kind_ != other.kind_) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](const auto& e) { return other.contains(e); });
}

SymmetryGroup aut_group(const DelsartePolynomial& p, Integer cap) {
  if (abs_det(p) > cap)
    throw Error(ErrorKind::EnumerationCapExceeded,
                "|det A| = " + std::to_string(abs_det(p)) + " exceeds the cap " + std::to_string(cap));
  std::vector<DiagonalSymmetry> gens;
  for (auto& col : inverse_columns(p.exponents())) gens.emplace_back(std::move(col));
  auto elements = closure(p.size(), gens, [](const DiagonalSymmetry& g) { return g; }, cap);
  if (static_cast<Integer>(elements.size()) != abs_det(p))
    throw Error(ErrorKind::OrderFormulaMismatch, "enumerated |Aut(W)| = " + std::to_string(elements.size()) +
                                                     " but |det A| = " + std::to_string(abs_det(p)));
  return SymmetryGroup(p, GroupKind::Aut, std::move(elements), std::move(gens));
}

DiagonalSymmetry j_element(const DelsartePolynomial& p) { return DiagonalSymmetry(raw_charges(p)); }

SymmetryGroup sl_group(const DelsartePolynomial& p, Integer cap) {
  auto aut = aut_group(p, cap);
  std::vector<DiagonalSymmetry> els;
  for (const auto& e : aut.elements())
    if (is_integral(e.phase_sum())) els.push_back(e);
  const Integer dual_degree = potential_degree(transpose(p));
  if (static_cast<Integer>(els.size()) * dual_degree != abs_det(p))
    throw Error(ErrorKind::OrderFormulaMismatch, "|SL(W)| = " + std::to_string(els.size()) +
                                                     " but |det A| / deg W^T = " + std::to_string(abs_det(p)) + "/" +
                                                     std::to_string(dual_degree));
  return SymmetryGroup(p, GroupKind::SL, std::move(els));
}

SymmetryGroup sl_tilde(const DelsartePolynomial& p, Integer cap) {
  auto j = j_element(p);
  if (!is_integral(j.phase_sum()))
    throw Error(ErrorKind::NonCalabiYau,
                "J_W is not contained in SL(W) for " + p.to_string() + " (charges sum to " + to_string(j.phase_sum()) + ")");
  auto sl = sl_group(p, cap);
  SymmetryGroup q(p, GroupKind::SLtilde, sl.elements());
  const Integer degree = element_order(j);
  const Integer dual_degree = potential_degree(transpose(p));
  if (static_cast<Integer>(q.order()) * degree * dual_degree != abs_det(p))
    throw Error(ErrorKind::OrderFormulaMismatch,
                "|SL~(W)| = " + std::to_string(q.order()) + " but |det A| / (deg W deg W^T) = " +
                    std::to_string(abs_det(p)) + "/(" + std::to_string(degree) + "*" + std::to_string(dual_degree) + ")");
  if (static_cast<Integer>(q.order()) * degree != static_cast<Integer>(sl.order()))
    throw Error(ErrorKind::OrderFormulaMismatch, "|SL~(W)| * deg W differs from |SL(W)|");
  return q;
}

SymmetryGroup subgroup_generated(const SymmetryGroup& group, const std::vector<DiagonalSymmetry>& gens) {
  std::vector<DiagonalSymmetry> canon;
  for (const auto& g : gens) {
    if (g.size() != group.rank())
      throw Error(ErrorKind::DimensionMismatch,
                  "generator " + g.to_string() + " has " + std::to_string(g.size()) + " phases, expected " +
                      std::to_string(group.rank()));
    if (!group.contains(g))
      throw Error(ErrorKind::NotAMember,
                  g.to_string() + " is not in " + std::string(to_string(group.kind())) + "(" + group.potential().to_string() + ")");
    canon.push_back(group.canonical(g));
  }
  auto els = closure(group.rank(), canon, [&](const DiagonalSymmetry& g) { return group.canonical(g); },
                     static_cast<Integer>(group.order()));
  return SymmetryGroup(group.potential(), group.kind(), std::move(els), std::move(canon));
}

SymmetryGroup trivial_subgroup(const SymmetryGroup& group) { return subgroup_generated(group, {}); }

std::vector<SymmetryGroup> all_subgroups(const SymmetryGroup& group) {
  std::vector<SymmetryGroup> out{trivial_subgroup(group)};
  std::set<std::vector<DiagonalSymmetry>> seen{out.front().elements()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : group.elements()) {
      if (out[i].contains(g)) continue;
      auto gens = out[i].generators();
      gens.push_back(g);
      auto h = subgroup_generated(group, gens);
      if (seen.insert(h.elements()).second) out.push_back(std::move(h));
    }
  }
  return out;
}

}  // namespace bhcr
